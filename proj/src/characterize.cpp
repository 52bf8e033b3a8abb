#include "ferrers/characterize.hpp"

#include <string>

namespace ferrers {

namespace {

std::string pair_string(ChessCount p) {
    return "(b=" + std::to_string(p.b) + ",w=" + std::to_string(p.w) + ")";
}

}  // namespace

bool is_realizable_bw(ChessCount p) {
    if (p.b < 0 || p.w < 0) return false;
    Int c = p.b - p.w;
    return c * c <= p.b;
}

ChessCount thmb_compose(const ThmBForm& f) {
    if (f.k < 0 || f.l < 0) throw std::invalid_argument("parameters k and l must be >= 0");
    if (f.family == ThmBForm::Family::plus)
        return {(f.k + 1) * (f.k + 1) + f.l, f.k * (f.k + 1) + f.l};
    return {f.k * f.k + f.l, f.k * (f.k + 1) + f.l};
}

std::optional<ThmBForm> thmb_decompose(ChessCount p) {
    if (!is_realizable_bw(p)) return std::nullopt;
    Int c = p.b - p.w;
    ThmBForm f;
    if (c >= 1) {
        f.family = ThmBForm::Family::plus;
        f.k = c - 1;
    } else {
        f.family = ThmBForm::Family::minus;
        f.k = -c;
    }
    f.l = p.b - c * c;
    return f;
}

WitnessDecomposition witness_decompose(ChessCount p) {
    if (!is_realizable_bw(p))
        throw std::domain_error(pair_string(p) + " is not realizable: (b-w)^2 > b");
    // Largest staircase square/pronic pair fitting under both counts.
    Int l = 0;
    while ((l + 1) * (l + 1) <= p.b && (l + 1) * (l + 2) <= p.w) ++l;
    WitnessDecomposition d;
    d.l = l;
    if (p.b < (l + 1) * (l + 1)) {
        d.which = WitnessDecomposition::Case::one;
        d.b_rem = p.b - l * l;
        d.w_rem = p.w - l * (l + 1);
        if (d.b_rem < 0 || d.b_rem >= 2 * l + 1 || d.w_rem < 0 || d.w_rem > d.b_rem)
            throw std::logic_error("case-one remainders out of range for " + pair_string(p));
    } else {
        d.which = WitnessDecomposition::Case::two;
        d.b_rem = p.b - (l + 1) * (l + 1);
        d.w_rem = p.w - l * (l + 1);
        if (d.b_rem < 0 || d.w_rem < 0 || d.w_rem >= 2 * l + 2 || d.b_rem > d.w_rem)
            throw std::logic_error("case-two remainders out of range for " + pair_string(p));
    }
    return d;
}

CastelnuovoPoly witness_castelnuovo(ChessCount p) {
    if (p.b == 0 && p.w == 0) return {};
    WitnessDecomposition d = witness_decompose(p);
    std::vector<Int> coeffs;
    if (d.which == WitnessDecomposition::Case::one) {
        // 1, 2, ..., 2l, then b' at even position 2l and w' at odd 2l+1.
        for (Int i = 1; i <= 2 * d.l; ++i) coeffs.push_back(i);
        coeffs.push_back(d.b_rem);
        coeffs.push_back(d.w_rem);
    } else {
        // 1, 2, ..., 2l+1, then w' at odd position 2l+1 and b' at even 2l+2.
        for (Int i = 1; i <= 2 * d.l + 1; ++i) coeffs.push_back(i);
        coeffs.push_back(d.w_rem);
        coeffs.push_back(d.b_rem);
    }
    CastelnuovoPoly s{std::move(coeffs)};
    if (bw(s) != p)
        throw std::logic_error("witness polynomial misses the requested counts " + pair_string(p));
    return s;
}

Partition witness_partition(ChessCount p) {
    return to_distinct_partition(witness_castelnuovo(p));
}

std::optional<ChessCount> bw_from_nc(NCPair q) {
    if ((q.n + q.c) % 2 != 0) return std::nullopt;
    Int b = (q.n + q.c) / 2;
    Int w = (q.n - q.c) / 2;
    if (b < 0 || w < 0) return std::nullopt;
    return ChessCount{b, w};
}

NCPair nc_from_bw(ChessCount p) {
    return {p.b + p.w, p.b - p.w};
}

bool is_realizable_nc(NCPair q) {
    if (q.n < 0) return false;
    // Parity: n and c differ by 2w, so n + c even means n - c even too.
    if ((q.n + q.c) % 2 != 0) return false;
    return q.c * (2 * q.c - 1) <= q.n;
}

StaircaseWitness equality_staircase(Int c) {
    StaircaseWitness sw;
    sw.m = c >= 1 ? 2 * c - 1 : -2 * c;
    sw.partition = staircase(sw.m);
    if (sw.partition.weight() != c * (2 * c - 1))
        throw std::logic_error("staircase witness misses the weight for c=" + std::to_string(c));
    if (signed_sum(sw.partition) != c)
        throw std::logic_error("staircase witness misses the signed sum for c=" + std::to_string(c));
    return sw;
}

}  // namespace ferrers
