#include "ferrers/partition.hpp"

#include <set>

#include "doctest.h"
#include "oracles.hpp"

using ferrers::ChessCount;
using ferrers::Int;
using ferrers::Partition;

TEST_CASE("partition construction validates shape") {
    Partition p{{6, 6, 4, 1, 1, 1}};
    CHECK(p.parts() == std::vector<Int>{6, 6, 4, 1, 1, 1});
    CHECK(p.size() == 6);
    CHECK_FALSE(p.empty());

    Partition empty;
    CHECK(empty.empty());
    CHECK(empty.weight() == 0);
    CHECK(empty.is_distinct());
    CHECK(empty.conjugate() == Partition{});

    CHECK_THROWS_AS((Partition{std::vector<Int>{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS((Partition{std::vector<Int>{0}}), std::invalid_argument);
    CHECK_THROWS_AS((Partition{std::vector<Int>{3, -1}}), std::invalid_argument);
}

TEST_CASE("weight sums the parts") {
    CHECK(Partition{{6, 6, 4, 1, 1, 1}}.weight() == 19);
    CHECK(Partition{{5}}.weight() == 5);
    CHECK(Partition{}.weight() == 0);
}

TEST_CASE("conjugate transposes the diagram") {
    CHECK(Partition{{6, 6, 4, 1, 1, 1}}.conjugate() == Partition{{6, 3, 3, 3, 2, 2}});
    CHECK(Partition{{4, 3, 3, 1}}.conjugate() == Partition{{4, 3, 3, 1}});
    CHECK(Partition{{5}}.conjugate() == Partition{{1, 1, 1, 1, 1}});
    CHECK(Partition{{1}}.conjugate() == Partition{{1}});

    // Involution, weight preservation, and chess-count invariance: the
    // transpose maps (r, c) to (c, r), which keeps r + c.
    for (Int n = 0; n <= 12; ++n) {
        for (const auto& parts : oracles::partitions(n)) {
            Partition p{parts};
            Partition q = p.conjugate();
            CHECK(q.conjugate() == p);
            CHECK(q.weight() == n);
            CHECK(chess_count(q) == chess_count(p));
        }
    }
}

TEST_CASE("distinct flag") {
    CHECK(Partition{{5, 3, 1}}.is_distinct());
    CHECK_FALSE(Partition{{3, 3}}.is_distinct());
    CHECK(Partition{{1}}.is_distinct());
}

TEST_CASE("chess counts of reference partitions") {
    CHECK(chess_count(Partition{{6, 6, 4, 1, 1, 1}}) == ChessCount{9, 10});
    CHECK(chess_count(Partition{{8, 6, 6, 5, 2, 1, 1}}) == ChessCount{14, 15});
    CHECK(chess_count(Partition{}) == ChessCount{0, 0});
    CHECK(chess_count(Partition{{1}}) == ChessCount{1, 0});
    CHECK(chess_count(Partition{{2}}) == ChessCount{1, 1});
    CHECK(chess_count(ferrers::staircase(3)) == ChessCount{4, 2});
}

TEST_CASE("chess counts match the square-by-square oracle") {
    for (Int n = 0; n <= 12; ++n) {
        for (const auto& parts : oracles::partitions(n)) {
            Partition p{parts};
            ChessCount counts = chess_count(p);
            auto [b, w] = oracles::cell_walk(parts);
            CHECK(counts == ChessCount{b, w});
            CHECK(counts.b + counts.w == n);
        }
    }
}

TEST_CASE("signed sum of reference partitions") {
    CHECK(ferrers::signed_sum(Partition{{3, 2, 1}}) == 2);
    CHECK(ferrers::signed_sum(Partition{{4, 3, 3, 1}}) == -1);
    CHECK(ferrers::signed_sum(Partition{}) == 0);
    CHECK(ferrers::signed_sum(Partition{{1}}) == 1);
    CHECK(ferrers::signed_sum(Partition{{2, 1}}) == -1);
}

TEST_CASE("signed sum matches the label oracle and b - w") {
    for (Int n = 0; n <= 12; ++n) {
        for (const auto& parts : oracles::partitions(n)) {
            Partition p{parts};
            Int s = ferrers::signed_sum(p);
            CHECK(s == oracles::label_walk(parts));
            ChessCount counts = chess_count(p);
            CHECK(s == counts.b - counts.w);
        }
    }
}

TEST_CASE("staircase partitions") {
    CHECK(ferrers::staircase(0) == Partition{});
    CHECK(ferrers::staircase(1) == Partition{{1}});
    CHECK(ferrers::staircase(4) == Partition{{4, 3, 2, 1}});
    CHECK_THROWS_AS(ferrers::staircase(-1), std::invalid_argument);
}

TEST_CASE("partition enumeration order") {
    std::vector<Partition> got;
    for (const Partition& p : ferrers::PartitionsOf(4)) got.push_back(p);
    std::vector<Partition> want = {
        Partition{{4}}, Partition{{3, 1}}, Partition{{2, 2}}, Partition{{2, 1, 1}},
        Partition{{1, 1, 1, 1}},
    };
    CHECK(got == want);

    std::size_t zero_count = 0;
    for (const Partition& p : ferrers::PartitionsOf(0)) {
        CHECK(p.empty());
        ++zero_count;
    }
    CHECK(zero_count == 1);
}

TEST_CASE("partition enumeration counts and coverage") {
    for (Int n = 0; n <= 18; ++n) {
        Int count = 0;
        for (const Partition& p : ferrers::PartitionsOf(n)) {
            CHECK(p.weight() == n);
            ++count;
        }
        CHECK(count == oracles::kPartitionCounts[n]);
    }
    // Same set as the recursive oracle, not just the same count.
    for (Int n = 0; n <= 10; ++n) {
        std::set<std::vector<Int>> seen;
        for (const Partition& p : ferrers::PartitionsOf(n)) seen.insert(p.parts());
        std::set<std::vector<Int>> expected;
        for (const auto& parts : oracles::partitions(n)) expected.insert(parts);
        CHECK(seen == expected);
    }
}

TEST_CASE("distinct-part enumeration") {
    std::vector<Partition> got;
    for (const Partition& p : ferrers::DistinctPartitionsOf(6)) got.push_back(p);
    std::vector<Partition> want = {
        Partition{{6}}, Partition{{5, 1}}, Partition{{4, 2}}, Partition{{3, 2, 1}},
    };
    CHECK(got == want);

    for (Int n = 0; n <= 18; ++n) {
        Int count = 0;
        for (const Partition& p : ferrers::DistinctPartitionsOf(n)) {
            CHECK(p.is_distinct());
            ++count;
        }
        CHECK(count == oracles::kDistinctCounts[n]);
    }
}

TEST_CASE("enumeration streams do not share state") {
    ferrers::PartitionsOf range(5);
    auto a = range.begin();
    auto b = range.begin();
    ++a;
    ++a;
    CHECK(*b == Partition{{5}});  // untouched by advancing a
    ++b;
    CHECK(*a == Partition{{3, 2}});
    CHECK(*b == Partition{{4, 1}});
}
