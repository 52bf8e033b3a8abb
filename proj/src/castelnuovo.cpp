#include "ferrers/castelnuovo.hpp"

#include <algorithm>
#include <sstream>

namespace ferrers {

CoeffPoly::CoeffPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    for (Int c : coeffs_)
        if (c < 0) throw std::invalid_argument("polynomial coefficients must be >= 0");
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int CoeffPoly::at(Int m) const {
    if (m < 0) throw std::invalid_argument("coefficient index must be >= 0");
    if (m > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(m)];
}

Int CoeffPoly::weight() const {
    Int total = 0;
    for (Int c : coeffs_) total += c;
    return total;
}

std::string to_string(const CoeffPoly& f) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i > 0) out << ',';
        out << f.coeffs()[i];
    }
    out << ']';
    return out.str();
}

bool is_castelnuovo(const CoeffPoly& f) {
    const auto& s = f.coeffs();
    if (s.empty()) return true;
    if (s[0] != 1) return false;
    // Longest prefix of the form 1, 2, ..., sigma. Any valid climb must stop
    // exactly where this one does, so checking the nonincreasing tail from
    // position sigma-1 decides membership.
    std::size_t sigma = 1;
    while (sigma < s.size() && s[sigma] == static_cast<Int>(sigma) + 1) ++sigma;
    for (std::size_t i = sigma; i < s.size(); ++i)
        if (s[i - 1] < s[i]) return false;
    // No trailing zeros and a nonincreasing tail imply every tail value >= 1.
    return true;
}

CastelnuovoPoly::CastelnuovoPoly(CoeffPoly f) : poly_(std::move(f)) {
    if (!is_castelnuovo(poly_))
        throw std::invalid_argument("not a Castelnuovo polynomial: " + to_string(poly_));
}

CastelnuovoPoly from_partition(const Partition& p) {
    // Row i (0-indexed, bottom-up, length q) covers diagonals i .. i+q-1, so
    // the diagonal profile is a sum of interval indicators.
    std::vector<Int> s;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        std::size_t hi = i + static_cast<std::size_t>(p.parts()[i]);
        if (s.size() < hi) s.resize(hi, 0);
        for (std::size_t m = i; m < hi; ++m) ++s[m];
    }
    for (std::size_t m = 0; m < s.size(); ++m)
        if (s[m] > static_cast<Int>(m) + 1)
            throw std::logic_error("diagonal count exceeds its bound on " + to_string(p));
    CoeffPoly poly{std::move(s)};
    if (!is_castelnuovo(poly))
        throw std::logic_error("diagonal profile of " + to_string(p) + " is not Castelnuovo");
    CastelnuovoPoly result{std::move(poly)};
    if (result.weight() != p.weight())
        throw std::logic_error("diagonal profile drops weight on " + to_string(p));
    return result;
}

ChessCount bw(const CastelnuovoPoly& s) {
    ChessCount counts;
    for (std::size_t m = 0; m < s.coeffs().size(); ++m)
        (m % 2 == 0 ? counts.b : counts.w) += s.coeffs()[m];
    return counts;
}

CoeffPoly star(const CoeffPoly& f) {
    if (f.is_zero() || f.degree() == 0) return f;
    std::vector<Int> s = f.coeffs();
    std::size_t d = s.size() - 1;
    if (s[d - 1] < 1 || s[d] < 1)
        throw std::invalid_argument("star would make a coefficient negative in " + to_string(f));
    s[d - 1] -= 1;
    s[d] -= 1;
    return CoeffPoly{std::move(s)};
}

namespace {

/// Degree u >= 0 when f is the full staircase 1 + 2t + ... + (u+1)t^u.
std::optional<Int> full_staircase_degree(const CoeffPoly& f) {
    const auto& s = f.coeffs();
    if (s.empty()) return std::nullopt;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != static_cast<Int>(i) + 1) return std::nullopt;
    return static_cast<Int>(s.size()) - 1;
}

}  // namespace

ChessCount terminal_bw(const Terminal& t) {
    switch (t.kind) {
        case TerminalKind::zero:
            return {0, 0};
        case TerminalKind::one:
            return {1, 0};
        case TerminalKind::staircase: {
            Int u = t.u;
            if (u % 2 == 0) return {(u + 2) * (u + 2) / 4, u * (u + 2) / 4};
            return {(u + 1) * (u + 1) / 4, (u + 1) * (u + 3) / 4};
        }
    }
    throw std::logic_error("unreachable terminal kind");
}

ReductionResult reduce_classify(const CastelnuovoPoly& s, bool keep_trace) {
    ReductionResult result;
    if (keep_trace) result.trace.emplace({s});

    CoeffPoly current = s.poly();
    while (true) {
        if (current.is_zero()) {
            result.terminal = {TerminalKind::zero, 0};
            break;
        }
        if (current.degree() == 0) {
            // A degree-0 Castelnuovo polynomial is exactly 1, a fixed point.
            result.terminal = {TerminalKind::one, 0};
            break;
        }
        if (auto u = full_staircase_degree(current); u && *u >= 1) {
            // star maps the full staircase outside the Castelnuovo set.
            result.terminal = {TerminalKind::staircase, *u};
            break;
        }
        current = star(current);
        result.steps += 1;
        if (keep_trace) result.trace->push_back(CastelnuovoPoly{current});
    }

    if (s.weight() - current.weight() != 2 * result.steps)
        throw std::logic_error("reduction dropped the wrong weight on " + to_string(s));
    return result;
}

Partition to_distinct_partition(const CastelnuovoPoly& s) {
    Int max_coeff = 0;
    for (Int c : s.coeffs()) max_coeff = std::max(max_coeff, c);
    std::vector<Int> parts;
    parts.reserve(static_cast<std::size_t>(max_coeff));
    for (Int j = 1; j <= max_coeff; ++j) {
        Int count = 0;
        for (Int c : s.coeffs())
            if (c >= j) ++count;
        parts.push_back(count);
    }
    Partition result{std::move(parts)};
    if (!result.is_distinct())
        throw std::logic_error("inverse of " + to_string(s) + " has repeated parts");
    if (result.weight() != s.weight())
        throw std::logic_error("inverse of " + to_string(s) + " drops weight");
    return result;
}

}  // namespace ferrers
