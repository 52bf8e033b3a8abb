#include "ferrers/partition.hpp"

#include <cassert>
#include <numeric>
#include <sstream>

namespace ferrers {

namespace {

bool valid_parts(const std::vector<Int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return false;
        if (i > 0 && parts[i - 1] < parts[i]) return false;
    }
    return true;
}

std::string format_sequence(const std::vector<Int>& values, char open, char close) {
    std::ostringstream out;
    out << open;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out << ',';
        out << values[i];
    }
    out << close;
    return out.str();
}

}  // namespace

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    if (!valid_parts(parts_))
        throw std::invalid_argument("partition parts must be nonincreasing and >= 1: " +
                                    format_sequence(parts_, '(', ')'));
}

Partition Partition::unchecked(std::vector<Int> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    assert(valid_parts(p.parts_));
    return p;
}

Int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<Int> cols(static_cast<std::size_t>(parts_[0]), 0);
    for (Int part : parts_)
        for (Int i = 0; i < part; ++i) ++cols[static_cast<std::size_t>(i)];
    return unchecked(std::move(cols));
}

bool Partition::is_distinct() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] == parts_[i]) return false;
    return true;
}

std::string to_string(const Partition& p) {
    return format_sequence(p.parts(), '(', ')');
}

ChessCount chess_count(const Partition& p) {
    // Literal walk: row i (bottom-up) holds parts()[i] cells, black iff
    // row + col is even.
    ChessCount walk;
    for (std::size_t i = 0; i < p.parts().size(); ++i)
        for (Int col = 0; col < p.parts()[i]; ++col)
            (is_black({static_cast<Int>(i), col}) ? walk.b : walk.w) += 1;

    // Closed form: odd-indexed rows (1-based) start black and contribute
    // ceil(part/2) black squares; even-indexed rows start white.
    ChessCount closed;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        Int part = p.parts()[i];
        Int ceil_half = (part + 1) / 2;
        Int floor_half = part / 2;
        if (i % 2 == 0) {
            closed.b += ceil_half;
            closed.w += floor_half;
        } else {
            closed.b += floor_half;
            closed.w += ceil_half;
        }
    }

    if (walk != closed)
        throw std::logic_error("chess_count routes disagree on " + to_string(p));
    return walk;
}

Int signed_sum(const Partition& p) {
    // Top-justified: the first part is the top row, +1 in the top-left.
    // A row of length q sums to 0 when q is even, otherwise to its leading
    // label, which alternates +1/-1 down the rows.
    Int total = 0;
    for (std::size_t i = 0; i < p.parts().size(); ++i)
        if (p.parts()[i] % 2 != 0) total += (i % 2 == 0) ? 1 : -1;
    return total;
}

Partition staircase(Int m) {
    if (m < 0) throw std::invalid_argument("staircase size must be >= 0");
    std::vector<Int> parts;
    parts.reserve(static_cast<std::size_t>(m));
    for (Int part = m; part >= 1; --part) parts.push_back(part);
    return Partition::unchecked(std::move(parts));
}

PartitionsOf::PartitionsOf(Int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative number");
}

PartitionsOf::iterator::iterator(Int n) {
    if (n > 0) current_ = Partition::unchecked({n});
    // n == 0: current_ stays empty, the single partition of 0.
}

PartitionsOf::iterator& PartitionsOf::iterator::operator++() {
    // Reverse-lexicographic successor: find the last part > 1, decrement it,
    // then redistribute everything after it into parts of that size plus one
    // remainder part. After (1,...,1) the range is exhausted.
    std::vector<Int> parts = (*this)->parts();
    std::size_t k = parts.size();
    while (k > 0 && parts[k - 1] == 1) --k;
    if (k == 0) {
        done_ = true;
        current_ = Partition();
        return *this;
    }
    Int rest = static_cast<Int>(parts.size() - k);  // the 1s being absorbed
    parts.resize(k);
    parts[k - 1] -= 1;
    Int fill = parts[k - 1];
    rest += 1;  // the decremented unit joins the absorbed 1s
    while (rest > 0) {
        Int next = rest < fill ? rest : fill;
        parts.push_back(next);
        rest -= next;
    }
    current_ = Partition::unchecked(std::move(parts));
    return *this;
}

DistinctPartitionsOf::iterator::iterator(PartitionsOf::iterator it, PartitionsOf::iterator end)
    : it_(it), end_(end) {
    while (it_ != end_ && !it_->is_distinct()) ++it_;
}

DistinctPartitionsOf::iterator& DistinctPartitionsOf::iterator::operator++() {
    do {
        ++it_;
    } while (it_ != end_ && !it_->is_distinct());
    return *this;
}

}  // namespace ferrers
