#pragma once

#include <chrono>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ferrers/castelnuovo.hpp"
#include "ferrers/partition.hpp"

namespace ferrers::verify {

/// One identity that failed, with enough context to reproduce it by hand.
struct Counterexample {
    std::string check;     // check name, e.g. "realizable_set"
    std::string item;      // offending partition, polynomial, or pair
    std::string expected;
    std::string actual;
};

struct CheckStat {
    std::string name;
    Int weights = 0;    // weights this check ran over
    Int failures = 0;   // total counterexamples found (before capping)
};

struct VerificationReport {
    Int max_weight = 0;
    std::vector<std::string> checks_run;
    bool pass = false;
    Int cap = 0;                              // per-check counterexample cap used
    Int total_failures = 0;
    std::vector<CheckStat> stats;             // one per check run, in run order
    std::vector<Counterexample> counterexamples;  // first `cap` per check
    std::chrono::milliseconds elapsed{0};
};

struct VerifyOptions {
    Int max_weight = 0;
    /// Empty means all checks, in registry order.
    std::vector<std::string> checks;
    /// Worker threads over (check, weight) tasks; results are merged in
    /// deterministic order regardless of the value.
    int jobs = 1;
    /// Per-check cap on recorded counterexamples (>= 1); totals are still
    /// counted past the cap.
    Int cap = 20;
};

/// Names of the available checks, in registry order:
///   realizable_set     achieved (b,w) sets (all and distinct-part partitions)
///                      equal the (b-w)^2 <= b predicate set
///   parameter_form     achieved set equals the two-family (k,l) set;
///                      thmb_decompose/thmb_compose round-trip; l identities
///   diagonal_counts    from_partition preserves weight and chess counts and
///                      satisfies the coefficient bound s(m) <= m+1
///   bijection          from_partition/to_distinct_partition round-trips both
///                      ways; from_partition maps onto every Castelnuovo
///                      polynomial of the weight
///   staircase_exit     star leaves the Castelnuovo set exactly at the full
///                      staircases 1 + 2t + ... + (u+1)t^u
///   reduction_steps    reduce_classify step count equals b - (b-w)^2 and
///                      terminal counts plus steps recover (b, w)
///   signed_sum         signed_sum equals b - w
///   nc_bound           is_realizable_nc matches the achieved signed sums and
///                      the route through bw_from_nc; n - c(2c-1) is even and
///                      nonnegative on achieved pairs
///   equality_staircase weight == c(2c-1) holds exactly for staircases, and
///                      equality_staircase(c) produces them
///   counting           count_by_bw matches brute-force tallies, marginals,
///                      and the realizable support
std::vector<std::string> check_names();

/// Runs the selected checks over every weight 0..max_weight and reports.
/// pass == (total_failures == 0). Throws std::invalid_argument on an unknown
/// check name, max_weight < 0, cap < 1, or jobs < 1.
VerificationReport verify_range(const VerifyOptions& opts);

/// Deterministic rendering of a report (everything except elapsed time).
std::string to_text(const VerificationReport& report);

/// Partition counts of n keyed by chess counts: value = (all partitions,
/// distinct-part partitions). Computed by memoized recursion over (next
/// allowed max part, row parity, remaining b, remaining w), not by
/// enumeration. Keys with zero counts are absent.
std::map<ChessCount, std::pair<Int, Int>> count_by_bw(Int n);

struct CensusRow {
    Int n = 0;
    Int b = 0;
    Int w = 0;
    Int count_all = 0;
    Int count_distinct = 0;
};

/// count_by_bw for every n in 0..max_weight, flattened and sorted by
/// (n, b, w).
std::vector<CensusRow> census(Int max_weight);

/// All Castelnuovo polynomials of weight n, built from the shape directly:
/// for each staircase height sigma with sigma(sigma+1)/2 <= n, the prefix
/// 1, 2, ..., sigma extended by each partition of the remaining weight into
/// parts <= sigma, appended in nonincreasing order. Independent of
/// from_partition. Ordered by sigma, then by the tail enumeration.
std::vector<CastelnuovoPoly> enumerate_castelnuovo(Int n);

}  // namespace ferrers::verify
