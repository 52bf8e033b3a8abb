#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "ferrers/castelnuovo.hpp"
#include "ferrers/characterize.hpp"
#include "ferrers/cli.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/render.hpp"
#include "ferrers/verify.hpp"

namespace py = pybind11;

namespace {

using ferrers::CastelnuovoPoly;
using ferrers::ChessCount;
using ferrers::Int;
using ferrers::Partition;

py::tuple pair_tuple(ChessCount p) {
    return py::make_tuple(p.b, p.w);
}

std::string terminal_name(ferrers::TerminalKind kind) {
    switch (kind) {
        case ferrers::TerminalKind::zero: return "zero";
        case ferrers::TerminalKind::one: return "one";
        case ferrers::TerminalKind::staircase: return "staircase";
    }
    throw std::logic_error("unreachable terminal kind");
}

ferrers::ThmBForm::Family family_from_name(const std::string& name) {
    if (name == "plus") return ferrers::ThmBForm::Family::plus;
    if (name == "minus") return ferrers::ThmBForm::Family::minus;
    throw std::invalid_argument("family must be 'plus' or 'minus', got '" + name + "'");
}

std::string family_name(ferrers::ThmBForm::Family f) {
    return f == ferrers::ThmBForm::Family::plus ? "plus" : "minus";
}

ferrers::RenderSpec make_spec(ferrers::DiagramStyle style, const std::string& format,
                              Int cell_size, bool show_labels) {
    ferrers::RenderSpec spec;
    spec.style = style;
    if (format == "ascii")
        spec.format = ferrers::RenderFormat::ascii;
    else if (format == "svg")
        spec.format = ferrers::RenderFormat::svg;
    else
        throw std::invalid_argument("format must be 'ascii' or 'svg', got '" + format + "'");
    spec.cell_size = cell_size;
    spec.show_labels = show_labels;
    return spec;
}

ferrers::DiagramStyle style_from_name(const std::string& name) {
    if (name == "ferrers") return ferrers::DiagramStyle::ferrers;
    if (name == "castelnuovo") return ferrers::DiagramStyle::castelnuovo;
    if (name == "problem10") return ferrers::DiagramStyle::problem10;
    throw std::invalid_argument("style must be 'ferrers', 'castelnuovo', or 'problem10', got '" +
                                name + "'");
}

py::dict reduction_dict(const ferrers::ReductionResult& r) {
    py::dict d;
    d["steps"] = r.steps;
    d["terminal"] = terminal_name(r.terminal.kind);
    if (r.terminal.kind == ferrers::TerminalKind::staircase) d["u"] = r.terminal.u;
    if (r.trace) {
        py::list trace;
        for (const CastelnuovoPoly& s : *r.trace) trace.append(s.coeffs());
        d["trace"] = trace;
    }
    return d;
}

void require_nonnegative(Int n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string{what} + " must be >= 0");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Chess-coloured Ferrers diagrams: counts, witnesses, and exhaustive checks";

    // --- partitions -----------------------------------------------------
    m.def(
        "chess_count",
        [](const std::vector<Int>& parts) { return pair_tuple(chess_count(Partition{parts})); },
        py::arg("parts"),
        "Black and white square counts (b, w) of the chess-coloured Ferrers diagram.");
    m.def(
        "signed_sum",
        [](const std::vector<Int>& parts) { return ferrers::signed_sum(Partition{parts}); },
        py::arg("parts"), "Sum of +1/-1 labels, equal to b - w.");
    m.def(
        "conjugate",
        [](const std::vector<Int>& parts) { return Partition{parts}.conjugate().parts(); },
        py::arg("parts"), "Parts of the transposed diagram.");
    m.def(
        "is_distinct",
        [](const std::vector<Int>& parts) { return Partition{parts}.is_distinct(); },
        py::arg("parts"), "True when all parts are pairwise different.");
    m.def(
        "staircase", [](Int m) { return ferrers::staircase(m).parts(); }, py::arg("m"),
        "The staircase partition (m, m-1, ..., 2, 1).");
    m.def(
        "partitions",
        [](Int n) {
            require_nonnegative(n, "weight");
            std::vector<std::vector<Int>> out;
            for (const Partition& p : ferrers::PartitionsOf(n)) out.push_back(p.parts());
            return out;
        },
        py::arg("n"), "All partitions of n in reverse lexicographic order.");
    m.def(
        "distinct_partitions",
        [](Int n) {
            require_nonnegative(n, "weight");
            std::vector<std::vector<Int>> out;
            for (const Partition& p : ferrers::DistinctPartitionsOf(n)) out.push_back(p.parts());
            return out;
        },
        py::arg("n"), "All distinct-part partitions of n in reverse lexicographic order.");

    // --- Castelnuovo polynomials -----------------------------------------
    m.def(
        "is_castelnuovo",
        [](const std::vector<Int>& coeffs) {
            return ferrers::is_castelnuovo(ferrers::CoeffPoly{coeffs});
        },
        py::arg("coeffs"),
        "True when the coefficients climb 1, 2, ..., sigma and then never increase.");
    m.def(
        "from_partition",
        [](const std::vector<Int>& parts) { return ferrers::from_partition(Partition{parts}).coeffs(); },
        py::arg("parts"),
        "Diagonal profile of a partition: coefficient m counts squares with row + col = m.");
    m.def(
        "to_distinct_partition",
        [](const std::vector<Int>& coeffs) {
            return ferrers::to_distinct_partition(CastelnuovoPoly{coeffs}).parts();
        },
        py::arg("coeffs"),
        "Inverse of from_partition on distinct-part partitions.");
    m.def(
        "bw",
        [](const std::vector<Int>& coeffs) { return pair_tuple(ferrers::bw(CastelnuovoPoly{coeffs})); },
        py::arg("coeffs"),
        "Counts (b, w) of the column diagram: even-index coefficients sum to b, odd to w.");
    m.def(
        "star",
        [](const std::vector<Int>& coeffs) {
            return ferrers::star(ferrers::CoeffPoly{coeffs}).coeffs();
        },
        py::arg("coeffs"),
        "Subtracts t^(d-1) + t^d from a degree-d polynomial and trims trailing zeros.");
    m.def(
        "reduce_classify",
        [](const std::vector<Int>& coeffs, bool keep_trace) {
            return reduction_dict(ferrers::reduce_classify(CastelnuovoPoly{coeffs}, keep_trace));
        },
        py::arg("coeffs"), py::arg("keep_trace") = false,
        "Applies star until the zero polynomial, 1, or a full staircase; reports steps and "
        "terminal.");
    m.def(
        "enumerate_castelnuovo",
        [](Int n) {
            std::vector<std::vector<Int>> out;
            for (const CastelnuovoPoly& s : ferrers::verify::enumerate_castelnuovo(n))
                out.push_back(s.coeffs());
            return out;
        },
        py::arg("n"), "Every Castelnuovo polynomial of weight n, each exactly once.");

    // --- realizability and witnesses -------------------------------------
    m.def(
        "is_realizable_bw",
        [](Int b, Int w) { return ferrers::is_realizable_bw({b, w}); }, py::arg("b"),
        py::arg("w"), "True when some partition attains the counts: (b - w)^2 <= b.");
    m.def(
        "thmb_compose",
        [](const std::string& family, Int k, Int l) {
            return pair_tuple(ferrers::thmb_compose({family_from_name(family), k, l}));
        },
        py::arg("family"), py::arg("k"), py::arg("l"),
        "(b, w) of a parameter form: plus -> ((k+1)^2 + l, k(k+1) + l); minus -> (k^2 + l, "
        "k(k+1) + l).");
    m.def(
        "thmb_decompose",
        [](Int b, Int w) -> py::object {
            auto f = ferrers::thmb_decompose({b, w});
            if (!f) return py::none();
            py::dict d;
            d["family"] = family_name(f->family);
            d["k"] = f->k;
            d["l"] = f->l;
            return d;
        },
        py::arg("b"), py::arg("w"),
        "The unique parameter form of a realizable pair; None when unrealizable.");
    m.def(
        "witness_castelnuovo",
        [](Int b, Int w) { return ferrers::witness_castelnuovo({b, w}).coeffs(); }, py::arg("b"),
        py::arg("w"),
        "A Castelnuovo polynomial with the requested counts; raises ValueError when "
        "unrealizable.");
    m.def(
        "witness_partition",
        [](Int b, Int w) { return ferrers::witness_partition({b, w}).parts(); }, py::arg("b"),
        py::arg("w"),
        "A distinct-part partition with the requested counts; raises ValueError when "
        "unrealizable.");
    m.def(
        "bw_from_nc",
        [](Int n, Int c) -> py::object {
            auto p = ferrers::bw_from_nc({n, c});
            if (!p) return py::none();
            return pair_tuple(*p);
        },
        py::arg("n"), py::arg("c"),
        "((n+c)/2, (n-c)/2), or None when the parity or sign constraints fail.");
    m.def(
        "nc_from_bw",
        [](Int b, Int w) {
            ferrers::NCPair q = ferrers::nc_from_bw({b, w});
            return py::make_tuple(q.n, q.c);
        },
        py::arg("b"), py::arg("w"), "(n, c) = (b + w, b - w).");
    m.def(
        "is_realizable_nc",
        [](Int n, Int c) { return ferrers::is_realizable_nc({n, c}); }, py::arg("n"),
        py::arg("c"),
        "True when some partition of n has signed sum c: equal parity and c(2c - 1) <= n.");
    m.def(
        "equality_staircase",
        [](Int c) {
            ferrers::StaircaseWitness sw = ferrers::equality_staircase(c);
            py::dict d;
            d["m"] = sw.m;
            d["partition"] = sw.partition.parts();
            return d;
        },
        py::arg("c"), "The staircase attaining weight c(2c - 1) with signed sum c.");

    // --- verification and counting ---------------------------------------
    m.def("check_names", &ferrers::verify::check_names,
          "Names accepted by verify_range, in execution order.");
    m.def(
        "verify_range",
        [](Int max_weight, const std::vector<std::string>& checks, int jobs, Int cap) {
            ferrers::verify::VerifyOptions opts;
            opts.max_weight = max_weight;
            opts.checks = checks;
            opts.jobs = jobs;
            opts.cap = cap;
            ferrers::verify::VerificationReport report = ferrers::verify::verify_range(opts);
            py::dict d;
            d["pass"] = report.pass;
            d["max_weight"] = report.max_weight;
            d["total_failures"] = report.total_failures;
            d["checks_run"] = report.checks_run;
            py::dict stats;
            for (const ferrers::verify::CheckStat& s : report.stats)
                stats[py::str(s.name)] = s.failures;
            d["stats"] = stats;
            py::list counterexamples;
            for (const ferrers::verify::Counterexample& ce : report.counterexamples) {
                py::dict entry;
                entry["check"] = ce.check;
                entry["item"] = ce.item;
                entry["expected"] = ce.expected;
                entry["actual"] = ce.actual;
                counterexamples.append(entry);
            }
            d["counterexamples"] = counterexamples;
            d["text"] = ferrers::verify::to_text(report);
            return d;
        },
        py::arg("max_weight"), py::arg("checks") = std::vector<std::string>{},
        py::arg("jobs") = 1, py::arg("cap") = 20,
        "Runs the exhaustive identity checks over every weight <= max_weight.");
    m.def(
        "count_by_bw",
        [](Int n) {
            py::dict d;
            for (const auto& [key, counts] : ferrers::verify::count_by_bw(n))
                d[pair_tuple(key)] = py::make_tuple(counts.first, counts.second);
            return d;
        },
        py::arg("n"),
        "Maps each achieved (b, w) at weight n to (all partitions, distinct-part partitions).");
    m.def(
        "census",
        [](Int max_weight) {
            std::vector<py::tuple> rows;
            for (const ferrers::verify::CensusRow& row : ferrers::verify::census(max_weight))
                rows.push_back(py::make_tuple(row.n, row.b, row.w, row.count_all,
                                              row.count_distinct));
            return rows;
        },
        py::arg("max_weight"),
        "Rows (n, b, w, count_all, count_distinct) for every weight <= max_weight.");

    // --- rendering and analysis -------------------------------------------
    m.def(
        "render_ferrers",
        [](const std::vector<Int>& parts, const std::string& style, const std::string& format,
           Int cell_size, bool show_labels) {
            return ferrers::render_ferrers(
                Partition{parts}, make_spec(style_from_name(style), format, cell_size,
                                            show_labels));
        },
        py::arg("parts"), py::arg("style") = "ferrers", py::arg("format") = "ascii",
        py::arg("cell_size") = 20, py::arg("show_labels") = true,
        "Draws a partition in the 'ferrers' or 'problem10' style as ASCII or SVG.");
    m.def(
        "render_castelnuovo",
        [](const std::vector<Int>& coeffs, const std::string& format, Int cell_size) {
            return ferrers::render_castelnuovo(
                CastelnuovoPoly{coeffs},
                make_spec(ferrers::DiagramStyle::castelnuovo, format, cell_size, true));
        },
        py::arg("coeffs"), py::arg("format") = "ascii", py::arg("cell_size") = 20,
        "Draws a Castelnuovo polynomial as its column diagram, ASCII or SVG.");
    m.def(
        "analyze",
        [](const std::vector<Int>& parts) {
            ferrers::cli::AnalyzeRecord rec = ferrers::cli::analyze(Partition{parts});
            py::dict d;
            d["parts"] = rec.partition.parts();
            d["weight"] = rec.partition.weight();
            d["distinct"] = rec.distinct;
            d["conjugate"] = rec.conjugate.parts();
            d["b"] = rec.counts.b;
            d["w"] = rec.counts.w;
            d["c"] = rec.counts.b - rec.counts.w;
            d["castelnuovo"] = rec.castelnuovo.coeffs();
            d["reduction"] = reduction_dict(rec.reduction);
            py::dict form;
            form["family"] = family_name(rec.form.family);
            form["k"] = rec.form.k;
            form["l"] = rec.form.l;
            d["form"] = form;
            py::dict nc;
            nc["n"] = rec.nc.n;
            nc["c"] = rec.nc.c;
            d["nc"] = nc;
            return d;
        },
        py::arg("parts"), "Every invariant of one partition in a single dictionary.");
}
