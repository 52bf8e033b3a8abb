#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ferrers {

using Int = long long;

/// One square of a diagram, 0-indexed. Row 0 is the bottom row of a Ferrers
/// diagram; column 0 is the left edge. The square is black iff row+col is even.
struct Cell {
    Int row = 0;
    Int col = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

inline bool is_black(Cell c) { return (c.row + c.col) % 2 == 0; }

/// Black/white square counts of a chess-coloured diagram.
struct ChessCount {
    Int b = 0;
    Int w = 0;

    friend bool operator==(const ChessCount&, const ChessCount&) = default;
    friend bool operator<(const ChessCount& x, const ChessCount& y) {
        return x.b != y.b ? x.b < y.b : x.w < y.w;
    }
};

/// An integer partition: a nonincreasing sequence of positive parts.
/// The empty sequence is the unique partition of 0.
class Partition {
  public:
    /// The empty partition.
    Partition() = default;

    /// Validates that `parts` is nonincreasing with every entry >= 1.
    /// Throws std::invalid_argument otherwise.
    explicit Partition(std::vector<Int> parts);

    /// Wraps `parts` without validation (asserted in debug builds). For
    /// callers that construct parts already in valid form, e.g. enumerators.
    static Partition unchecked(std::vector<Int> parts);

    const std::vector<Int>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// Sum of the parts; 0 for the empty partition.
    Int weight() const;

    /// The conjugate partition: column lengths of the diagram, i.e.
    /// conjugate()[i-1] = #{ j : parts()[j-1] >= i } for i = 1..parts()[0].
    Partition conjugate() const;

    /// True when all parts are pairwise distinct (vacuously true when empty).
    bool is_distinct() const;

    friend bool operator==(const Partition&, const Partition&) = default;

  private:
    std::vector<Int> parts_;
};

/// "(6,6,4,1,1,1)"; "()" for the empty partition.
std::string to_string(const Partition& p);

/// Counts black and white squares of the chess-coloured Ferrers diagram of
/// `p`. Computed two ways (literal cell walk and per-row closed form) with
/// the results checked against each other; throws std::logic_error if the
/// two routes ever disagree. Always b + w = p.weight().
ChessCount chess_count(const Partition& p);

/// Sum of +/-1 labels over the top-justified diagram of `p` (first part on
/// top), chess-coloured with +1 in the top-left corner. Equals b - w.
Int signed_sum(const Partition& p);

/// The staircase partition (m, m-1, ..., 1); empty for m = 0.
/// Throws std::invalid_argument for m < 0.
Partition staircase(Int m);

/// All partitions of n in reverse-lexicographic order (first part
/// nonincreasing from (n) down to (1,...,1)); the single empty partition for
/// n = 0. Forward-iterable; each range instance iterates independently.
///
///     for (const Partition& p : PartitionsOf(5)) { ... }
class PartitionsOf {
  public:
    explicit PartitionsOf(Int n);

    class iterator {
      public:
        using value_type = Partition;

        const Partition& operator*() const { return current_; }
        const Partition* operator->() const { return &current_; }
        iterator& operator++();
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
        }
        friend bool operator!=(const iterator& a, const iterator& b) { return !(a == b); }

      private:
        friend class PartitionsOf;
        iterator() : done_(true) {}
        explicit iterator(Int n);

        Partition current_;
        bool done_ = false;
    };

    iterator begin() const { return iterator(n_); }
    iterator end() const { return iterator(); }

  private:
    Int n_;
};

/// The partitions of n with pairwise distinct parts, in the same order as
/// PartitionsOf. A filtering wrapper over PartitionsOf.
class DistinctPartitionsOf {
  public:
    explicit DistinctPartitionsOf(Int n) : all_(n) {}

    class iterator {
      public:
        using value_type = Partition;

        const Partition& operator*() const { return *it_; }
        const Partition* operator->() const { return it_.operator->(); }
        iterator& operator++();
        friend bool operator==(const iterator& a, const iterator& b) { return a.it_ == b.it_; }
        friend bool operator!=(const iterator& a, const iterator& b) { return !(a == b); }

      private:
        friend class DistinctPartitionsOf;
        iterator(PartitionsOf::iterator it, PartitionsOf::iterator end);

        PartitionsOf::iterator it_;
        PartitionsOf::iterator end_;
    };

    iterator begin() const { return iterator(all_.begin(), all_.end()); }
    iterator end() const { return iterator(all_.end(), all_.end()); }

  private:
    PartitionsOf all_;
};

}  // namespace ferrers
