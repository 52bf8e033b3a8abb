#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ferrers/castelnuovo.hpp"
#include "ferrers/characterize.hpp"
#include "ferrers/partition.hpp"

namespace ferrers::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,
    exit_verify_failed = 1,     // verify found counterexamples
    exit_not_realizable = 2,    // witness asked for an impossible pair
    exit_usage = 64,            // malformed arguments
    exit_bad_partition = 65,    // arguments parsed but are not a partition
};

/// Everything `analyze` reports about one partition.
struct AnalyzeRecord {
    Partition partition;
    Partition conjugate;
    bool distinct = false;
    ChessCount counts;
    CastelnuovoPoly castelnuovo;
    ReductionResult reduction;
    ThmBForm form;
    NCPair nc;
};

AnalyzeRecord analyze(const Partition& p);

/// JSON for `analyze --json`: two-space indent, fixed key order, no nulls.
std::string analyze_json(const AnalyzeRecord& rec);

/// Plain-text report for `analyze`.
std::string analyze_text(const AnalyzeRecord& rec);

/// Runs one CLI invocation. `args` excludes the program name. Writes results
/// to `out`, diagnostics to `err`, and returns an ExitCode value.
///
/// Subcommands:
///   analyze [parts... | --parts L] [--json]
///   witness (--b B --w W | --n N --c C) [--json]
///   verify --max-weight N [--jobs J] [--checks a,b,...] [--cap K]
///   census --max-weight N [--out PATH]
///   render [parts... | --parts L] --style S --format F [--out PATH]
///          [--cell-size PX]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ferrers::cli
