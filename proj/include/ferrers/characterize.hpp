#pragma once

#include <optional>

#include "ferrers/castelnuovo.hpp"
#include "ferrers/partition.hpp"

namespace ferrers {

/// True when some partition has exactly b black and w white squares:
/// b, w >= 0 and (b - w)^2 <= b. The same set is achieved by distinct-part
/// partitions alone.
bool is_realizable_bw(ChessCount p);

/// The two-family parameterization of the realizable pairs:
///   plus  (c = b - w >= 1):  (b, w) = ((k+1)^2 + l, k(k+1) + l), k = c - 1
///   minus (c = b - w <= 0):  (b, w) = (k^2 + l,     k(k+1) + l), k = -c
/// with k, l >= 0. Exactly one form matches any realizable pair.
struct ThmBForm {
    enum class Family { plus, minus };
    Family family = Family::minus;
    Int k = 0;
    Int l = 0;

    friend bool operator==(const ThmBForm&, const ThmBForm&) = default;
};

/// The (b, w) pair of a parameter form.
ChessCount thmb_compose(const ThmBForm& f);

/// Inverse of thmb_compose; std::nullopt when p is not realizable.
/// For realizable p, the l returned always equals b - (b-w)^2.
std::optional<ThmBForm> thmb_decompose(ChessCount p);

/// The split used to build a witness Castelnuovo polynomial for a
/// realizable pair. l is the largest j >= 0 with j^2 <= b and j(j+1) <= w.
///   case one: b = l^2 + b_rem,     w = l(l+1) + w_rem, b_rem < 2l+1, w_rem <= b_rem
///   case two: b = (l+1)^2 + b_rem, w = l(l+1) + w_rem, w_rem < 2l+2, b_rem <= w_rem
struct WitnessDecomposition {
    enum class Case { one, two };
    Int l = 0;
    Case which = Case::one;
    Int b_rem = 0;
    Int w_rem = 0;

    friend bool operator==(const WitnessDecomposition&, const WitnessDecomposition&) = default;
};

/// Splits a realizable pair as above; case one applies iff b < (l+1)^2.
/// Throws std::domain_error when p is not realizable.
WitnessDecomposition witness_decompose(ChessCount p);

/// A Castelnuovo polynomial s with bw(s) == p (checked; std::logic_error on
/// violation). The zero polynomial for (0,0); otherwise, with
/// (l, b', w') = witness_decompose(p):
///   case one: 1 + 2t + ... + (2l)t^(2l-1) + b't^(2l)   + w't^(2l+1)
///   case two: 1 + 2t + ... + (2l+1)t^(2l) + w't^(2l+1) + b't^(2l+2)
/// (trailing zero coefficients trimmed). Throws std::domain_error when p is
/// not realizable.
CastelnuovoPoly witness_castelnuovo(ChessCount p);

/// A distinct-part partition with chess_count == p:
/// to_distinct_partition(witness_castelnuovo(p)). Throws std::domain_error
/// when p is not realizable.
Partition witness_partition(ChessCount p);

/// Total squares n = b + w and signed difference c = b - w.
struct NCPair {
    Int n = 0;
    Int c = 0;

    friend bool operator==(const NCPair&, const NCPair&) = default;
};

/// (b, w) = ((n+c)/2, (n-c)/2); std::nullopt when n + c is odd or either
/// count would be negative.
std::optional<ChessCount> bw_from_nc(NCPair q);

/// (n, c) = (b + w, b - w).
NCPair nc_from_bw(ChessCount p);

/// True when some partition of n has signed_sum c: n and c have the same
/// parity and c(2c - 1) <= n. Equivalent to bw_from_nc(q) being present and
/// realizable.
bool is_realizable_nc(NCPair q);

/// The unique partition achieving weight == c(2c - 1) with signed_sum == c:
/// the staircase with m = 2c - 1 parts for c >= 1, m = -2c parts for c <= 0.
/// Both identities are checked before returning (std::logic_error).
struct StaircaseWitness {
    Int m = 0;
    Partition partition;
};

StaircaseWitness equality_staircase(Int c);

}  // namespace ferrers
