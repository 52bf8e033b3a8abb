#include "ferrers/verify.hpp"

#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "ferrers/characterize.hpp"

namespace ferrers::verify {

namespace {

/// Collects failures for one (check, weight) task. Totals keep counting past
/// the cap; only the kept list is bounded.
struct Sink {
    std::string check;
    Int cap = 0;
    Int failures = 0;
    std::vector<Counterexample> kept;

    void fail(std::string item, std::string expected, std::string actual) {
        ++failures;
        if (static_cast<Int>(kept.size()) < cap)
            kept.push_back({check, std::move(item), std::move(expected), std::move(actual)});
    }
};

std::string pair_string(ChessCount p) {
    return "(b=" + std::to_string(p.b) + ",w=" + std::to_string(p.w) + ")";
}

std::string at_weight(Int n, const std::string& what) {
    return "n=" + std::to_string(n) + " " + what;
}

std::set<std::pair<Int, Int>> achieved_pairs(Int n, bool distinct_only) {
    std::set<std::pair<Int, Int>> out;
    if (distinct_only) {
        for (const Partition& p : DistinctPartitionsOf(n)) {
            ChessCount counts = chess_count(p);
            out.insert({counts.b, counts.w});
        }
    } else {
        for (const Partition& p : PartitionsOf(n)) {
            ChessCount counts = chess_count(p);
            out.insert({counts.b, counts.w});
        }
    }
    return out;
}

std::set<std::pair<Int, Int>> predicate_pairs(Int n) {
    std::set<std::pair<Int, Int>> out;
    for (Int b = 0; b <= n; ++b)
        if (is_realizable_bw({b, n - b})) out.insert({b, n - b});
    return out;
}

bool is_full_staircase(const CoeffPoly& f) {
    const auto& s = f.coeffs();
    if (s.empty()) return false;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != static_cast<Int>(i) + 1) return false;
    return true;
}

void check_realizable_set(Int n, Sink& sink) {
    auto pred = predicate_pairs(n);
    auto all = achieved_pairs(n, false);
    auto dist = achieved_pairs(n, true);
    for (const auto& p : all)
        if (!pred.count(p))
            sink.fail(at_weight(n, pair_string({p.first, p.second})),
                      "(b-w)^2 <= b for every achieved pair", "achieved with (b-w)^2 > b");
    for (const auto& p : pred) {
        if (!all.count(p))
            sink.fail(at_weight(n, pair_string({p.first, p.second})),
                      "some partition attains the pair", "no partition attains it");
        if (!dist.count(p))
            sink.fail(at_weight(n, pair_string({p.first, p.second})),
                      "some distinct-part partition attains the pair",
                      "no distinct-part partition attains it");
    }
    for (const auto& p : dist)
        if (!all.count(p))
            sink.fail(at_weight(n, pair_string({p.first, p.second})),
                      "distinct-part pairs are a subset of all pairs", "subset relation broken");
}

void check_parameter_form(Int n, Sink& sink) {
    // The two-family set restricted to b + w == n.
    std::set<std::pair<Int, Int>> family;
    for (int fam = 0; fam < 2; ++fam) {
        for (Int k = 0;; ++k) {
            ThmBForm f;
            f.family = fam == 0 ? ThmBForm::Family::plus : ThmBForm::Family::minus;
            f.k = k;
            f.l = 0;
            ChessCount base = thmb_compose(f);
            Int base_sum = base.b + base.w;
            if (base_sum > n) break;
            if ((n - base_sum) % 2 == 0) {
                f.l = (n - base_sum) / 2;
                ChessCount p = thmb_compose(f);
                family.insert({p.b, p.w});
            }
        }
    }
    auto achieved = achieved_pairs(n, false);
    for (const auto& p : achieved)
        if (!family.count(p))
            sink.fail(at_weight(n, pair_string({p.first, p.second})),
                      "achieved pair lies in one of the two parameter families",
                      "no (k, l) produces it");
    for (const auto& p : family)
        if (!achieved.count(p))
            sink.fail(at_weight(n, pair_string({p.first, p.second})),
                      "parameterized pair is achieved by a partition", "no partition attains it");

    for (const auto& pr : achieved) {
        ChessCount p{pr.first, pr.second};
        auto f = thmb_decompose(p);
        if (!f) {
            sink.fail(at_weight(n, pair_string(p)), "achieved pair decomposes", "no decomposition");
            continue;
        }
        if (thmb_compose(*f) != p)
            sink.fail(at_weight(n, pair_string(p)), "compose(decompose(p)) == p",
                      "round-trip returns " + pair_string(thmb_compose(*f)));
        Int c = p.b - p.w;
        if (f->l != p.b - c * c)
            sink.fail(at_weight(n, pair_string(p)), "decomposed l equals b - (b-w)^2",
                      "l=" + std::to_string(f->l));
        Int steps = reduce_classify(witness_castelnuovo(p)).steps;
        if (steps != f->l)
            sink.fail(at_weight(n, pair_string(p)),
                      "witness reduction step count equals the decomposed l",
                      "steps=" + std::to_string(steps) + " l=" + std::to_string(f->l));
    }
}

void check_diagonal_counts(Int n, Sink& sink) {
    for (const Partition& p : PartitionsOf(n)) {
        CastelnuovoPoly s = from_partition(p);
        if (!is_castelnuovo(s.poly()))
            sink.fail(at_weight(n, to_string(p)), "diagonal profile is Castelnuovo",
                      "got " + to_string(s));
        if (s.weight() != n)
            sink.fail(at_weight(n, to_string(p)), "diagonal profile keeps the weight",
                      "weight " + std::to_string(s.weight()));
        if (bw(s) != chess_count(p))
            sink.fail(at_weight(n, to_string(p)), "diagonal profile keeps the chess counts",
                      pair_string(bw(s)) + " vs " + pair_string(chess_count(p)));
        for (Int m = 0; m <= s.degree(); ++m)
            if (s.at(m) > m + 1)
                sink.fail(at_weight(n, to_string(p)),
                          "diagonal m holds at most m+1 squares",
                          "s(" + std::to_string(m) + ")=" + std::to_string(s.at(m)));
    }
}

void check_bijection(Int n, Sink& sink) {
    for (const Partition& p : DistinctPartitionsOf(n)) {
        Partition back = to_distinct_partition(from_partition(p));
        if (back != p)
            sink.fail(at_weight(n, to_string(p)),
                      "partition -> polynomial -> partition round-trip is the identity",
                      "returned " + to_string(back));
    }
    std::vector<CastelnuovoPoly> polys = enumerate_castelnuovo(n);
    std::set<std::vector<Int>> poly_set;
    for (const CastelnuovoPoly& s : polys) {
        poly_set.insert(s.coeffs());
        CastelnuovoPoly back = from_partition(to_distinct_partition(s));
        if (back != s)
            sink.fail(at_weight(n, to_string(s)),
                      "polynomial -> partition -> polynomial round-trip is the identity",
                      "returned " + to_string(back));
    }
    std::set<std::vector<Int>> image;
    for (const Partition& p : PartitionsOf(n)) image.insert(from_partition(p).coeffs());
    for (const auto& coeffs : poly_set)
        if (!image.count(coeffs))
            sink.fail(at_weight(n, to_string(CoeffPoly{std::vector<Int>(coeffs)})),
                      "every Castelnuovo polynomial is a diagonal profile",
                      "no partition maps to it");
    for (const auto& coeffs : image)
        if (!poly_set.count(coeffs))
            sink.fail(at_weight(n, to_string(CoeffPoly{std::vector<Int>(coeffs)})),
                      "diagonal profiles stay inside the Castelnuovo set",
                      "profile missing from the enumeration");
}

void check_staircase_exit(Int n, Sink& sink) {
    for (const CastelnuovoPoly& s : enumerate_castelnuovo(n)) {
        if (s.degree() < 1) continue;
        bool leaves = !is_castelnuovo(star(s.poly()));
        bool full = is_full_staircase(s.poly());
        if (leaves != full)
            sink.fail(at_weight(n, to_string(s)),
                      "star leaves the Castelnuovo set exactly on full staircases",
                      full ? "full staircase stayed inside" : "non-staircase left the set");
    }
}

void check_reduction_steps(Int n, Sink& sink) {
    for (const Partition& p : PartitionsOf(n)) {
        ChessCount counts = chess_count(p);
        Int c = counts.b - counts.w;
        ReductionResult r = reduce_classify(from_partition(p));
        if (r.steps != counts.b - c * c)
            sink.fail(at_weight(n, to_string(p)), "step count equals b - (b-w)^2",
                      "steps=" + std::to_string(r.steps));
        ChessCount t = terminal_bw(r.terminal);
        if (t.b + r.steps != counts.b || t.w + r.steps != counts.w)
            sink.fail(at_weight(n, to_string(p)),
                      "terminal counts plus steps recover (b, w)",
                      pair_string({t.b + r.steps, t.w + r.steps}));
    }
}

void check_signed_sum(Int n, Sink& sink) {
    for (const Partition& p : PartitionsOf(n)) {
        ChessCount counts = chess_count(p);
        if (signed_sum(p) != counts.b - counts.w)
            sink.fail(at_weight(n, to_string(p)), "signed sum equals b - w",
                      "signed_sum=" + std::to_string(signed_sum(p)));
    }
}

void check_nc_bound(Int n, Sink& sink) {
    std::set<Int> achieved;
    for (const Partition& p : PartitionsOf(n)) {
        ChessCount counts = chess_count(p);
        achieved.insert(counts.b - counts.w);
    }
    for (Int c = -n; c <= n; ++c) {
        bool pred = is_realizable_nc({n, c});
        bool attained = achieved.count(c) > 0;
        if (pred != attained)
            sink.fail(at_weight(n, "c=" + std::to_string(c)),
                      "same parity and c(2c-1) <= n exactly when some partition attains c",
                      pred ? "predicted but unattained" : "attained but rejected");
        auto p = bw_from_nc({n, c});
        bool via_bw = p.has_value() && is_realizable_bw(*p);
        if (via_bw != pred)
            sink.fail(at_weight(n, "c=" + std::to_string(c)),
                      "the (n,c) predicate agrees with the route through (b,w)",
                      via_bw ? "only the (b,w) route accepts" : "only the (n,c) predicate accepts");
    }
    for (Int c : achieved) {
        Int slack = n - c * (2 * c - 1);
        if (slack < 0 || slack % 2 != 0)
            sink.fail(at_weight(n, "c=" + std::to_string(c)),
                      "n - c(2c-1) is even and nonnegative on attained pairs",
                      "slack=" + std::to_string(slack));
    }
}

void check_equality_staircase(Int n, Sink& sink) {
    for (const Partition& p : PartitionsOf(n)) {
        ChessCount counts = chess_count(p);
        Int c = counts.b - counts.w;
        bool equality = n == c * (2 * c - 1);
        bool stair = p == staircase(static_cast<Int>(p.size()));
        if (equality != stair)
            sink.fail(at_weight(n, to_string(p)),
                      "weight equals c(2c-1) exactly for staircase partitions",
                      equality ? "equality on a non-staircase" : "staircase missing equality");
    }
    for (Int c = -n; c <= n; ++c) {
        if (c * (2 * c - 1) != n) continue;
        StaircaseWitness sw = equality_staircase(c);
        if (sw.partition.weight() != n || signed_sum(sw.partition) != c)
            sink.fail(at_weight(n, "c=" + std::to_string(c)),
                      "equality witness has weight c(2c-1) and signed sum c",
                      to_string(sw.partition));
    }
}

void check_counting(Int n, Sink& sink) {
    auto dp = count_by_bw(n);
    std::map<ChessCount, std::pair<Int, Int>> tally;
    Int total_all = 0;
    Int total_distinct = 0;
    for (const Partition& p : PartitionsOf(n)) {
        auto& cell = tally[chess_count(p)];
        cell.first += 1;
        total_all += 1;
        if (p.is_distinct()) {
            cell.second += 1;
            total_distinct += 1;
        }
    }
    for (const auto& [key, counts] : tally) {
        auto it = dp.find(key);
        if (it == dp.end()) {
            sink.fail(at_weight(n, pair_string(key)), "recursion counts every achieved pair",
                      "pair missing from count_by_bw");
            continue;
        }
        if (it->second != counts)
            sink.fail(at_weight(n, pair_string(key)),
                      std::to_string(counts.first) + " all / " + std::to_string(counts.second) +
                          " distinct by enumeration",
                      std::to_string(it->second.first) + " all / " +
                          std::to_string(it->second.second) + " distinct by recursion");
    }
    Int dp_all = 0;
    Int dp_distinct = 0;
    for (const auto& [key, counts] : dp) {
        dp_all += counts.first;
        dp_distinct += counts.second;
        if (!tally.count(key))
            sink.fail(at_weight(n, pair_string(key)), "recursion counts only achieved pairs",
                      "pair absent from enumeration");
        if (!is_realizable_bw(key))
            sink.fail(at_weight(n, pair_string(key)), "counted pairs satisfy (b-w)^2 <= b",
                      "predicate rejects the pair");
    }
    if (dp_all != total_all)
        sink.fail(at_weight(n, "totals"), std::to_string(total_all) + " partitions in all",
                  "recursion sums to " + std::to_string(dp_all));
    if (dp_distinct != total_distinct)
        sink.fail(at_weight(n, "totals"),
                  std::to_string(total_distinct) + " distinct-part partitions in all",
                  "recursion sums to " + std::to_string(dp_distinct));
}

struct CheckDef {
    const char* name;
    void (*fn)(Int, Sink&);
};

constexpr CheckDef kChecks[] = {
    {"realizable_set", check_realizable_set},
    {"parameter_form", check_parameter_form},
    {"diagonal_counts", check_diagonal_counts},
    {"bijection", check_bijection},
    {"staircase_exit", check_staircase_exit},
    {"reduction_steps", check_reduction_steps},
    {"signed_sum", check_signed_sum},
    {"nc_bound", check_nc_bound},
    {"equality_staircase", check_equality_staircase},
    {"counting", check_counting},
};

}  // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> names;
    for (const CheckDef& c : kChecks) names.emplace_back(c.name);
    return names;
}

VerificationReport verify_range(const VerifyOptions& opts) {
    if (opts.max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
    if (opts.cap < 1) throw std::invalid_argument("counterexample cap must be >= 1");
    if (opts.jobs < 1) throw std::invalid_argument("jobs must be >= 1");

    // Selected checks, always in registry order.
    std::vector<const CheckDef*> selected;
    if (opts.checks.empty()) {
        for (const CheckDef& c : kChecks) selected.push_back(&c);
    } else {
        for (const CheckDef& c : kChecks)
            for (const std::string& name : opts.checks)
                if (name == c.name) {
                    selected.push_back(&c);
                    break;
                }
        for (const std::string& name : opts.checks) {
            bool known = false;
            for (const CheckDef& c : kChecks) known = known || name == c.name;
            if (!known) throw std::invalid_argument("unknown check: " + name);
        }
    }

    auto start = std::chrono::steady_clock::now();

    // One task per (check, weight); merged in task order below, so the
    // report does not depend on the thread count.
    struct Task {
        const CheckDef* check;
        Int weight;
        Sink sink;
    };
    std::vector<Task> tasks;
    for (const CheckDef* c : selected)
        for (Int n = 0; n <= opts.max_weight; ++n)
            tasks.push_back({c, n, Sink{c->name, opts.cap, 0, {}}});

    auto run_task = [](Task& t) { t.check->fn(t.weight, t.sink); };
    if (opts.jobs == 1 || tasks.size() <= 1) {
        for (Task& t : tasks) run_task(t);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                run_task(tasks[i]);
        };
        std::size_t thread_count =
            std::min(static_cast<std::size_t>(opts.jobs), tasks.size());
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < thread_count; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    VerificationReport report;
    report.max_weight = opts.max_weight;
    report.cap = opts.cap;
    for (const CheckDef* c : selected) report.checks_run.emplace_back(c->name);
    std::size_t task_index = 0;
    for (const CheckDef* c : selected) {
        CheckStat stat{c->name, opts.max_weight + 1, 0};
        Int kept = 0;
        for (Int n = 0; n <= opts.max_weight; ++n, ++task_index) {
            Sink& sink = tasks[task_index].sink;
            stat.failures += sink.failures;
            for (const Counterexample& ce : sink.kept) {
                if (kept >= opts.cap) break;
                report.counterexamples.push_back(ce);
                ++kept;
            }
        }
        report.total_failures += stat.failures;
        report.stats.push_back(std::move(stat));
    }
    report.pass = report.total_failures == 0;
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream out;
    out << "verify: max_weight=" << report.max_weight << " cap=" << report.cap << "\n";
    for (const CheckStat& stat : report.stats) {
        out << "  " << stat.name << ": ";
        if (stat.failures == 0)
            out << "ok\n";
        else
            out << "FAIL (" << stat.failures << " counterexamples)\n";
    }
    for (const Counterexample& ce : report.counterexamples) {
        out << "  counterexample [" << ce.check << "] " << ce.item << "\n";
        out << "    expected: " << ce.expected << "\n";
        out << "    actual:   " << ce.actual << "\n";
    }
    if (report.pass)
        out << "result: PASS\n";
    else
        out << "result: FAIL (" << report.total_failures << " counterexamples, showing at most "
            << report.cap << " per check)\n";
    return out.str();
}

std::map<ChessCount, std::pair<Int, Int>> count_by_bw(Int n) {
    if (n < 0) throw std::invalid_argument("weight must be >= 0");

    // f(maxp, parity, b, w) counts part sequences with parts <= maxp,
    // starting at the given row parity (0 = black leads), using exactly b
    // black and w white squares. Each sequence is a partition read first
    // part first; the distinct variant forces the next part below the last.
    using Key = std::tuple<Int, int, Int, Int, bool>;
    std::map<Key, Int> memo;

    auto count = [&](auto&& self, Int maxp, int parity, Int b, Int w, bool distinct) -> Int {
        // Parts are >= 1, so only the empty sequence consumes nothing.
        if (b == 0 && w == 0) return 1;
        Key key{maxp, parity, b, w, distinct};
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Int total = 0;
        for (Int p = 1; p <= maxp; ++p) {
            Int lead = (p + 1) / 2;   // squares of the row's leading colour
            Int trail = p / 2;
            Int pb = parity == 0 ? lead : trail;
            Int pw = parity == 0 ? trail : lead;
            if (pb > b || pw > w) continue;
            total += self(self, distinct ? p - 1 : p, parity ^ 1, b - pb, w - pw, distinct);
        }
        memo[key] = total;
        return total;
    };

    std::map<ChessCount, std::pair<Int, Int>> out;
    for (Int b = 0; b <= n; ++b) {
        Int w = n - b;
        Int all = count(count, n, 0, b, w, false);
        Int distinct = count(count, n, 0, b, w, true);
        if (all > 0 || distinct > 0) out[{b, w}] = {all, distinct};
    }
    return out;
}

std::vector<CensusRow> census(Int max_weight) {
    if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
    std::vector<CensusRow> rows;
    for (Int n = 0; n <= max_weight; ++n)
        for (const auto& [key, counts] : count_by_bw(n))
            rows.push_back({n, key.b, key.w, counts.first, counts.second});
    return rows;
}

std::vector<CastelnuovoPoly> enumerate_castelnuovo(Int n) {
    if (n < 0) throw std::invalid_argument("weight must be >= 0");
    std::vector<CastelnuovoPoly> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Staircase prefix 1, 2, ..., sigma plus a nonincreasing tail of parts
    // <= sigma. Every Castelnuovo polynomial arises exactly once: sigma must
    // be the full length of the climbing prefix.
    for (Int sigma = 1; sigma * (sigma + 1) / 2 <= n; ++sigma) {
        Int rest = n - sigma * (sigma + 1) / 2;
        std::vector<Int> coeffs;
        for (Int i = 1; i <= sigma; ++i) coeffs.push_back(i);
        auto emit_tails = [&](auto&& self, Int remaining, Int max_part) -> void {
            if (remaining == 0) {
                out.push_back(CastelnuovoPoly{CoeffPoly{std::vector<Int>(coeffs)}});
                return;
            }
            for (Int p = std::min(max_part, remaining); p >= 1; --p) {
                coeffs.push_back(p);
                self(self, remaining - p, p);
                coeffs.pop_back();
            }
        };
        emit_tails(emit_tails, rest, sigma);
    }
    return out;
}

}  // namespace ferrers::verify
