#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ferrers/partition.hpp"

namespace ferrers {

/// A polynomial with nonnegative integer coefficients, stored low degree
/// first with no trailing zeros. The zero polynomial has an empty
/// coefficient vector and degree() == -1.
class CoeffPoly {
  public:
    /// The zero polynomial.
    CoeffPoly() = default;

    /// Trims trailing zeros. Throws std::invalid_argument on a negative
    /// coefficient.
    explicit CoeffPoly(std::vector<Int> coeffs);

    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Int degree() const { return static_cast<Int>(coeffs_.size()) - 1; }

    /// Coefficient of t^m; 0 beyond the degree. Throws for m < 0.
    Int at(Int m) const;

    /// Sum of the coefficients.
    Int weight() const;

    friend bool operator==(const CoeffPoly&, const CoeffPoly&) = default;

  private:
    std::vector<Int> coeffs_;
};

/// "[1,2,3,4,4,4,1]"; "[]" for the zero polynomial.
std::string to_string(const CoeffPoly& f);

/// True when f is a Castelnuovo polynomial: either zero, or its coefficient
/// sequence climbs 1, 2, ..., sigma for some sigma >= 1 and is nonincreasing
/// (and nonnegative) from position sigma-1 onward.
bool is_castelnuovo(const CoeffPoly& f);

/// A CoeffPoly validated to satisfy is_castelnuovo.
class CastelnuovoPoly {
  public:
    /// The zero polynomial.
    CastelnuovoPoly() = default;

    /// Throws std::invalid_argument unless is_castelnuovo(f).
    explicit CastelnuovoPoly(CoeffPoly f);
    explicit CastelnuovoPoly(std::vector<Int> coeffs) : CastelnuovoPoly(CoeffPoly(std::move(coeffs))) {}

    const CoeffPoly& poly() const { return poly_; }
    const std::vector<Int>& coeffs() const { return poly_.coeffs(); }
    bool is_zero() const { return poly_.is_zero(); }
    Int degree() const { return poly_.degree(); }
    Int at(Int m) const { return poly_.at(m); }
    Int weight() const { return poly_.weight(); }

    friend bool operator==(const CastelnuovoPoly&, const CastelnuovoPoly&) = default;

  private:
    CoeffPoly poly_;
};

inline std::string to_string(const CastelnuovoPoly& s) { return to_string(s.poly()); }

/// The diagonal profile of a partition: coefficient m counts the squares of
/// the Ferrers diagram on the diagonal row + col = m. The result is always a
/// Castelnuovo polynomial of the same weight, with coefficient m at most
/// m + 1 (both checked; violations throw std::logic_error). Preserves the
/// chess counts: bw(from_partition(p)) == chess_count(p).
CastelnuovoPoly from_partition(const Partition& p);

/// Chess counts of the column diagram of s (column m, height s(m), coloured
/// black iff m is even): b sums the even-index coefficients, w the odd.
ChessCount bw(const CastelnuovoPoly& s);

/// Subtracts t^(d-1) + t^d from f, where d = deg f, then trims trailing
/// zeros. Identity on the zero polynomial and on degree 0. Throws
/// std::invalid_argument if a coefficient would go negative.
CoeffPoly star(const CoeffPoly& f);

/// Terminal shape of the star reduction.
enum class TerminalKind { zero, one, staircase };

struct Terminal {
    TerminalKind kind = TerminalKind::zero;
    /// For kind == staircase: the degree u >= 1 of the full staircase
    /// 1 + 2t + ... + (u+1)t^u. Zero otherwise.
    Int u = 0;

    friend bool operator==(const Terminal&, const Terminal&) = default;
};

/// Chess counts of a terminal: zero -> (0,0); one -> (1,0); the full
/// staircase of degree u -> ((u+2)^2/4, u(u+2)/4) for even u and
/// ((u+1)^2/4, (u+1)(u+3)/4) for odd u. All divisions are exact.
ChessCount terminal_bw(const Terminal& t);

struct ReductionResult {
    Int steps = 0;
    Terminal terminal;
    /// Present only when requested: s itself, then every intermediate
    /// polynomial through the terminal.
    std::optional<std::vector<CastelnuovoPoly>> trace;
};

/// Applies star repeatedly while the result is still a Castelnuovo
/// polynomial, stopping at the zero polynomial, at 1, or at a full staircase
/// (the only polynomials star maps outside the Castelnuovo set, or fixes).
/// Each step removes weight exactly 2, so
/// steps == (s.weight() - terminal weight) / 2, and with (b,w) = bw(s),
/// steps == b - (b-w)^2 and terminal_bw + steps recovers (b,w) coordinatewise.
ReductionResult reduce_classify(const CastelnuovoPoly& s, bool keep_trace = false);

/// The inverse of from_partition on distinct-part partitions: part j is the
/// number of coefficients >= j, for j = 1..max coefficient. The result is
/// checked to have distinct parts and weight s.weight() (std::logic_error
/// otherwise).
Partition to_distinct_partition(const CastelnuovoPoly& s);

}  // namespace ferrers
