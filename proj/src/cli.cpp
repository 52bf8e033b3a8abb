#include "ferrers/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ferrers/render.hpp"
#include "ferrers/verify.hpp"
#include "json.hpp"

namespace ferrers::cli {

namespace {

using json = nlohmann::ordered_json;

json sequence_json(const std::vector<Int>& values) {
    return json(values);
}

std::string terminal_name(TerminalKind kind) {
    switch (kind) {
        case TerminalKind::zero: return "zero";
        case TerminalKind::one: return "one";
        case TerminalKind::staircase: return "staircase";
    }
    throw std::logic_error("unreachable terminal kind");
}

std::string family_name(ThmBForm::Family f) {
    return f == ThmBForm::Family::plus ? "plus" : "minus";
}

/// Shared partition input: either positional parts or one --parts list.
struct PartsInput {
    std::vector<Int> positional;
    std::string csv;

    void attach(CLI::App* cmd) {
        // The positional label must differ from the long option's name, so it
        // follows the usual uppercase usage-string convention.
        auto* pos = cmd->add_option("PARTS", positional, "partition parts, largest first");
        auto* opt = cmd->add_option("--parts", csv, "partition parts as a comma list");
        pos->excludes(opt);
        opt->excludes(pos);
    }

    /// Throws std::invalid_argument on anything that is not a partition.
    Partition parse() const {
        if (csv.empty()) return Partition{positional};
        std::vector<Int> parts;
        std::stringstream stream{csv};
        std::string token;
        while (std::getline(stream, token, ',')) {
            const char* begin = token.c_str();
            char* end = nullptr;
            long long value = std::strtoll(begin, &end, 10);
            while (end && *end == ' ') ++end;
            if (end == begin || (end && *end != '\0'))
                throw std::invalid_argument("not an integer part: '" + token + "'");
            parts.push_back(value);
        }
        return Partition{parts};
    }
};

json analyze_to_json(const AnalyzeRecord& rec) {
    json doc;
    doc["parts"] = sequence_json(rec.partition.parts());
    doc["weight"] = rec.partition.weight();
    doc["distinct"] = rec.distinct;
    doc["conjugate"] = sequence_json(rec.conjugate.parts());
    doc["b"] = rec.counts.b;
    doc["w"] = rec.counts.w;
    doc["c"] = rec.counts.b - rec.counts.w;
    doc["castelnuovo"] = sequence_json(rec.castelnuovo.coeffs());
    json reduction;
    reduction["steps"] = rec.reduction.steps;
    reduction["terminal"] = terminal_name(rec.reduction.terminal.kind);
    if (rec.reduction.terminal.kind == TerminalKind::staircase)
        reduction["u"] = rec.reduction.terminal.u;
    doc["reduction"] = reduction;
    json form;
    form["family"] = family_name(rec.form.family);
    form["k"] = rec.form.k;
    form["l"] = rec.form.l;
    doc["form"] = form;
    json nc;
    nc["n"] = rec.nc.n;
    nc["c"] = rec.nc.c;
    doc["nc"] = nc;
    return doc;
}

int write_output(const std::string& content, const std::string& path, std::ostream& out,
                 std::ostream& err) {
    if (path.empty()) {
        out << content;
        return exit_ok;
    }
    std::ofstream file{path, std::ios::binary};
    if (!file) {
        err << "error: cannot open " << path << " for writing\n";
        return exit_verify_failed;
    }
    file << content;
    return exit_ok;
}

int run_analyze(const PartsInput& input, bool as_json, std::ostream& out, std::ostream& err) {
    Partition p;
    try {
        p = input.parse();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_bad_partition;
    }
    AnalyzeRecord rec = analyze(p);
    out << (as_json ? analyze_json(rec) : analyze_text(rec));
    return exit_ok;
}

int run_witness(bool have_bw, Int b, Int w, Int n, Int c, bool as_json, std::ostream& out,
                std::ostream& err) {
    ChessCount request;
    if (have_bw) {
        request = {b, w};
    } else {
        auto from_nc = bw_from_nc({n, c});
        if (!from_nc) {
            err << "error: (n=" << n << ",c=" << c
                << ") is not realizable: n and c must have the same parity with (n-c)/2 and "
                   "(n+c)/2 nonnegative\n";
            return exit_not_realizable;
        }
        request = *from_nc;
    }
    if (!is_realizable_bw(request)) {
        err << "error: (b=" << request.b << ",w=" << request.w
            << ") is not realizable: it needs (b-w)^2 <= b with b, w >= 0\n";
        return exit_not_realizable;
    }

    CastelnuovoPoly s = witness_castelnuovo(request);
    Partition p = witness_partition(request);
    NCPair nc = nc_from_bw(request);
    if (as_json) {
        json doc;
        doc["b"] = request.b;
        doc["w"] = request.w;
        doc["n"] = nc.n;
        doc["c"] = nc.c;
        doc["castelnuovo"] = sequence_json(s.coeffs());
        doc["partition"] = sequence_json(p.parts());
        out << doc.dump(2) << "\n";
    } else {
        out << "b: " << request.b << "\n";
        out << "w: " << request.w << "\n";
        out << "n: " << nc.n << "\n";
        out << "c: " << nc.c << "\n";
        out << "castelnuovo: " << to_string(s) << "\n";
        out << "partition: " << to_string(p) << "\n";
    }
    return exit_ok;
}

int run_verify(Int max_weight, int jobs, Int cap, const std::string& checks_csv, std::ostream& out,
               std::ostream& err) {
    verify::VerifyOptions opts;
    opts.max_weight = max_weight;
    opts.jobs = jobs;
    opts.cap = cap;
    if (!checks_csv.empty()) {
        std::stringstream stream{checks_csv};
        std::string token;
        while (std::getline(stream, token, ',')) opts.checks.push_back(token);
    }
    verify::VerificationReport report;
    try {
        report = verify::verify_range(opts);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    out << verify::to_text(report);
    err << "elapsed: " << report.elapsed.count() << " ms\n";
    return report.pass ? exit_ok : exit_verify_failed;
}

int run_census(Int max_weight, const std::string& out_path, std::ostream& out, std::ostream& err) {
    if (max_weight < 0) {
        err << "error: --max-weight must be >= 0\n";
        return exit_usage;
    }
    std::ostringstream tsv;
    tsv << "n\tb\tw\tcount_all\tcount_distinct\n";
    for (const verify::CensusRow& row : verify::census(max_weight))
        tsv << row.n << '\t' << row.b << '\t' << row.w << '\t' << row.count_all << '\t'
            << row.count_distinct << '\n';
    return write_output(tsv.str(), out_path, out, err);
}

int run_render(const PartsInput& input, const std::string& style_name,
               const std::string& format_name, Int cell_size, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
    RenderSpec spec;
    if (style_name == "ferrers")
        spec.style = DiagramStyle::ferrers;
    else if (style_name == "castelnuovo")
        spec.style = DiagramStyle::castelnuovo;
    else if (style_name == "problem10")
        spec.style = DiagramStyle::problem10;
    else {
        err << "error: unknown style '" << style_name << "'\n";
        return exit_usage;
    }
    if (format_name == "ascii")
        spec.format = RenderFormat::ascii;
    else if (format_name == "svg")
        spec.format = RenderFormat::svg;
    else {
        err << "error: unknown format '" << format_name << "'\n";
        return exit_usage;
    }
    spec.cell_size = cell_size;
    if (spec.format == RenderFormat::svg && spec.cell_size < 4) {
        err << "error: --cell-size must be >= 4 for SVG output\n";
        return exit_usage;
    }

    Partition p;
    try {
        p = input.parse();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_bad_partition;
    }
    std::string content = spec.style == DiagramStyle::castelnuovo
                              ? render_castelnuovo(from_partition(p), spec)
                              : render_ferrers(p, spec);
    return write_output(content, out_path, out, err);
}

}  // namespace

AnalyzeRecord analyze(const Partition& p) {
    AnalyzeRecord rec;
    rec.partition = p;
    rec.conjugate = p.conjugate();
    rec.distinct = p.is_distinct();
    rec.counts = chess_count(p);
    rec.castelnuovo = from_partition(p);
    rec.reduction = reduce_classify(rec.castelnuovo);
    auto form = thmb_decompose(rec.counts);
    if (!form) throw std::logic_error("achieved counts failed to decompose on " + to_string(p));
    rec.form = *form;
    rec.nc = nc_from_bw(rec.counts);
    return rec;
}

std::string analyze_json(const AnalyzeRecord& rec) {
    return analyze_to_json(rec).dump(2) + "\n";
}

std::string analyze_text(const AnalyzeRecord& rec) {
    std::ostringstream out;
    out << "partition: " << to_string(rec.partition) << "\n";
    out << "weight: " << rec.partition.weight() << "\n";
    out << "distinct parts: " << (rec.distinct ? "yes" : "no") << "\n";
    out << "conjugate: " << to_string(rec.conjugate) << "\n";
    out << "b: " << rec.counts.b << "\n";
    out << "w: " << rec.counts.w << "\n";
    out << "c: " << rec.counts.b - rec.counts.w << "\n";
    out << "castelnuovo: " << to_string(rec.castelnuovo) << "\n";
    out << "reduction: " << rec.reduction.steps << " steps to "
        << terminal_name(rec.reduction.terminal.kind);
    if (rec.reduction.terminal.kind == TerminalKind::staircase)
        out << " u=" << rec.reduction.terminal.u;
    out << "\n";
    out << "form: " << family_name(rec.form.family) << " k=" << rec.form.k << " l=" << rec.form.l
        << "\n";
    return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"chess-coloured Ferrers diagrams: counts, witnesses, and exhaustive checks"};
    app.name("ferrers");
    app.require_subcommand(1);

    auto* analyze_cmd = app.add_subcommand("analyze", "report every invariant of one partition");
    PartsInput analyze_parts;
    analyze_parts.attach(analyze_cmd);
    bool analyze_as_json = false;
    analyze_cmd->add_flag("--json", analyze_as_json, "emit JSON instead of text");

    auto* witness_cmd =
        app.add_subcommand("witness", "build a partition with requested counts");
    Int opt_b = 0;
    Int opt_w = 0;
    Int opt_n = 0;
    Int opt_c = 0;
    auto* b_opt = witness_cmd->add_option("--b", opt_b, "black square count");
    auto* w_opt = witness_cmd->add_option("--w", opt_w, "white square count");
    auto* n_opt = witness_cmd->add_option("--n", opt_n, "total square count");
    auto* c_opt = witness_cmd->add_option("--c", opt_c, "signed sum b - w");
    bool witness_as_json = false;
    witness_cmd->add_flag("--json", witness_as_json, "emit JSON instead of text");

    auto* verify_cmd =
        app.add_subcommand("verify", "run exhaustive identity checks up to a weight");
    Int verify_max = 0;
    int verify_jobs = 1;
    Int verify_cap = 20;
    std::string verify_checks;
    verify_cmd->add_option("--max-weight", verify_max, "largest weight to cover")->required();
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads");
    verify_cmd->add_option("--cap", verify_cap, "counterexamples kept per check");
    verify_cmd->add_option("--checks", verify_checks, "comma list of check names (default all)");

    auto* census_cmd =
        app.add_subcommand("census", "tabulate partition counts by (b, w) as TSV");
    Int census_max = 0;
    std::string census_out;
    census_cmd->add_option("--max-weight", census_max, "largest weight to cover")->required();
    census_cmd->add_option("--out", census_out, "write to a file instead of stdout");

    auto* render_cmd = app.add_subcommand("render", "draw a diagram as ASCII or SVG");
    PartsInput render_parts;
    render_parts.attach(render_cmd);
    std::string render_style;
    std::string render_format;
    Int render_cell = 20;
    std::string render_out;
    render_cmd->add_option("--style", render_style, "ferrers, castelnuovo, or problem10")
        ->required();
    render_cmd->add_option("--format", render_format, "ascii or svg")->required();
    render_cmd->add_option("--cell-size", render_cell, "SVG square edge in pixels");
    render_cmd->add_option("--out", render_out, "write to a file instead of stdout");

    std::vector<std::string> reversed{args.rbegin(), args.rend()};
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    if (app.got_subcommand(analyze_cmd))
        return run_analyze(analyze_parts, analyze_as_json, out, err);

    if (app.got_subcommand(witness_cmd)) {
        bool have_bw = b_opt->count() > 0 && w_opt->count() > 0;
        bool have_nc = n_opt->count() > 0 && c_opt->count() > 0;
        bool mixed = (b_opt->count() > 0 || w_opt->count() > 0) &&
                     (n_opt->count() > 0 || c_opt->count() > 0);
        if (mixed || (!have_bw && !have_nc)) {
            err << "error: witness needs either --b and --w, or --n and --c\n";
            return exit_usage;
        }
        return run_witness(have_bw, opt_b, opt_w, opt_n, opt_c, witness_as_json, out, err);
    }

    if (app.got_subcommand(verify_cmd))
        return run_verify(verify_max, verify_jobs, verify_cap, verify_checks, out, err);

    if (app.got_subcommand(census_cmd)) return run_census(census_max, census_out, out, err);

    if (app.got_subcommand(render_cmd))
        return run_render(render_parts, render_style, render_format, render_cell, render_out, out,
                          err);

    err << "error: no subcommand selected\n";
    return exit_usage;
}

}  // namespace ferrers::cli
