#include "ferrers/characterize.hpp"

#include "doctest.h"
#include "oracles.hpp"

using ferrers::ChessCount;
using ferrers::Int;
using ferrers::NCPair;
using ferrers::Partition;
using ferrers::ThmBForm;
using ferrers::WitnessDecomposition;

TEST_CASE("realizability predicate") {
    CHECK(ferrers::is_realizable_bw({9, 10}));
    CHECK(ferrers::is_realizable_bw({14, 15}));
    CHECK(ferrers::is_realizable_bw({0, 0}));
    CHECK(ferrers::is_realizable_bw({1, 0}));
    CHECK_FALSE(ferrers::is_realizable_bw({0, 1}));
    CHECK_FALSE(ferrers::is_realizable_bw({2, 0}));
    CHECK_FALSE(ferrers::is_realizable_bw({3, 5}));
    CHECK_FALSE(ferrers::is_realizable_bw({-1, 1}));
    CHECK_FALSE(ferrers::is_realizable_bw({1, -1}));
}

TEST_CASE("parameter form of reference pairs") {
    auto f = ferrers::thmb_decompose({9, 10});
    REQUIRE(f.has_value());
    CHECK(f->family == ThmBForm::Family::minus);
    CHECK(f->k == 1);
    CHECK(f->l == 8);

    f = ferrers::thmb_decompose({4, 2});
    REQUIRE(f.has_value());
    CHECK(f->family == ThmBForm::Family::plus);
    CHECK(f->k == 1);
    CHECK(f->l == 0);

    f = ferrers::thmb_decompose({14, 15});
    REQUIRE(f.has_value());
    CHECK(f->family == ThmBForm::Family::minus);
    CHECK(f->k == 1);
    CHECK(f->l == 13);

    f = ferrers::thmb_decompose({1, 0});
    REQUIRE(f.has_value());
    CHECK(f->family == ThmBForm::Family::plus);
    CHECK(f->k == 0);
    CHECK(f->l == 0);

    f = ferrers::thmb_decompose({0, 0});
    REQUIRE(f.has_value());
    CHECK(f->family == ThmBForm::Family::minus);
    CHECK(f->k == 0);
    CHECK(f->l == 0);

    CHECK_FALSE(ferrers::thmb_decompose({2, 0}).has_value());
    CHECK_FALSE(ferrers::thmb_decompose({3, 5}).has_value());
}

TEST_CASE("parameter form round-trips") {
    CHECK(ferrers::thmb_compose({ThmBForm::Family::plus, 0, 0}) == ChessCount{1, 0});
    CHECK(ferrers::thmb_compose({ThmBForm::Family::minus, 1, 8}) == ChessCount{9, 10});

    for (int fam = 0; fam < 2; ++fam) {
        for (Int k = 0; k <= 10; ++k) {
            for (Int l = 0; l <= 10; ++l) {
                ThmBForm form{fam == 0 ? ThmBForm::Family::plus : ThmBForm::Family::minus, k, l};
                ChessCount p = ferrers::thmb_compose(form);
                CHECK(ferrers::is_realizable_bw(p));
                auto back = ferrers::thmb_decompose(p);
                REQUIRE(back.has_value());
                CHECK(*back == form);
            }
        }
    }
    for (Int b = 0; b <= 20; ++b) {
        for (Int w = 0; w <= 20; ++w) {
            if (!ferrers::is_realizable_bw({b, w})) continue;
            auto form = ferrers::thmb_decompose({b, w});
            REQUIRE(form.has_value());
            CHECK(ferrers::thmb_compose(*form) == ChessCount{b, w});
            CHECK(form->l == b - (b - w) * (b - w));
        }
    }
}

TEST_CASE("witness decomposition of reference pairs") {
    WitnessDecomposition d = ferrers::witness_decompose({9, 10});
    CHECK(d.l == 2);
    CHECK(d.which == WitnessDecomposition::Case::two);
    CHECK(d.b_rem == 0);
    CHECK(d.w_rem == 4);

    d = ferrers::witness_decompose({14, 15});
    CHECK(d.l == 3);
    CHECK(d.which == WitnessDecomposition::Case::one);
    CHECK(d.b_rem == 5);
    CHECK(d.w_rem == 3);

    d = ferrers::witness_decompose({1, 1});
    CHECK(d.l == 0);
    CHECK(d.which == WitnessDecomposition::Case::two);
    CHECK(d.b_rem == 0);
    CHECK(d.w_rem == 1);

    d = ferrers::witness_decompose({2, 2});
    CHECK(d.l == 1);
    CHECK(d.which == WitnessDecomposition::Case::one);
    CHECK(d.b_rem == 1);
    CHECK(d.w_rem == 0);

    d = ferrers::witness_decompose({1, 0});
    CHECK(d.l == 0);
    CHECK(d.which == WitnessDecomposition::Case::two);
    CHECK(d.b_rem == 0);
    CHECK(d.w_rem == 0);

    CHECK_THROWS_AS(ferrers::witness_decompose({2, 0}), std::domain_error);
}

TEST_CASE("witness polynomials of reference pairs") {
    CHECK(ferrers::witness_castelnuovo({9, 10}).coeffs() == std::vector<Int>{1, 2, 3, 4, 5, 4});
    CHECK(ferrers::witness_castelnuovo({14, 15}).coeffs() ==
          std::vector<Int>{1, 2, 3, 4, 5, 6, 5, 3});
    CHECK(ferrers::witness_castelnuovo({1, 0}).coeffs() == std::vector<Int>{1});
    CHECK(ferrers::witness_castelnuovo({1, 1}).coeffs() == std::vector<Int>{1, 1});
    CHECK(ferrers::witness_castelnuovo({2, 2}).coeffs() == std::vector<Int>{1, 2, 1});
    CHECK(ferrers::witness_castelnuovo({4, 2}).coeffs() == std::vector<Int>{1, 2, 3});
    CHECK(ferrers::witness_castelnuovo({0, 0}).is_zero());
    CHECK_THROWS_AS(ferrers::witness_castelnuovo({0, 1}), std::domain_error);
}

TEST_CASE("witness partitions") {
    CHECK(ferrers::witness_partition({9, 10}) == Partition{{6, 5, 4, 3, 1}});
    CHECK(chess_count(ferrers::witness_partition({9, 10})) == ChessCount{9, 10});
    CHECK(ferrers::witness_partition({0, 0}) == Partition{});
    CHECK_THROWS_AS(ferrers::witness_partition({2, 0}), std::domain_error);
}

TEST_CASE("witness soundness for every small realizable pair") {
    for (Int b = 0; b <= 20; ++b) {
        for (Int w = 0; w <= 20; ++w) {
            if (!ferrers::is_realizable_bw({b, w})) continue;
            ferrers::CastelnuovoPoly s = ferrers::witness_castelnuovo({b, w});
            CHECK(ferrers::is_castelnuovo(s.poly()));
            CHECK(bw(s) == ChessCount{b, w});
            Partition p = ferrers::witness_partition({b, w});
            CHECK(p.is_distinct());
            CHECK(p.weight() == b + w);
            CHECK(chess_count(p) == ChessCount{b, w});
        }
    }
}

TEST_CASE("coordinate conversions") {
    auto p = ferrers::bw_from_nc({19, -1});
    REQUIRE(p.has_value());
    CHECK(*p == ChessCount{9, 10});
    CHECK(ferrers::nc_from_bw({9, 10}) == NCPair{19, -1});

    CHECK_FALSE(ferrers::bw_from_nc({4, 1}).has_value());   // parity mismatch
    CHECK_FALSE(ferrers::bw_from_nc({1, -3}).has_value());  // negative count
    CHECK_FALSE(ferrers::bw_from_nc({1, 3}).has_value());

    for (Int b = 0; b <= 10; ++b) {
        for (Int w = 0; w <= 10; ++w) {
            auto back = ferrers::bw_from_nc(ferrers::nc_from_bw({b, w}));
            REQUIRE(back.has_value());
            CHECK(*back == ChessCount{b, w});
        }
    }
}

TEST_CASE("signed-sum realizability") {
    CHECK(ferrers::is_realizable_nc({19, -1}));
    CHECK(ferrers::is_realizable_nc({11, -1}));
    CHECK(ferrers::is_realizable_nc({15, 3}));
    CHECK(ferrers::is_realizable_nc({0, 0}));
    CHECK_FALSE(ferrers::is_realizable_nc({4, 1}));   // parity
    CHECK_FALSE(ferrers::is_realizable_nc({11, 3}));  // 3*5 > 11
    CHECK_FALSE(ferrers::is_realizable_nc({-2, 0}));

    // Agreement with the (b, w) route everywhere small.
    for (Int n = 0; n <= 30; ++n) {
        for (Int c = -n - 2; c <= n + 2; ++c) {
            auto bw_pair = ferrers::bw_from_nc({n, c});
            bool via_bw = bw_pair.has_value() && ferrers::is_realizable_bw(*bw_pair);
            CHECK(via_bw == ferrers::is_realizable_nc({n, c}));
        }
    }
}

TEST_CASE("equality staircases") {
    ferrers::StaircaseWitness sw = ferrers::equality_staircase(1);
    CHECK(sw.m == 1);
    CHECK(sw.partition == Partition{{1}});

    sw = ferrers::equality_staircase(2);
    CHECK(sw.m == 3);
    CHECK(sw.partition == Partition{{3, 2, 1}});

    sw = ferrers::equality_staircase(-1);
    CHECK(sw.m == 2);
    CHECK(sw.partition == Partition{{2, 1}});

    sw = ferrers::equality_staircase(-2);
    CHECK(sw.m == 4);
    CHECK(sw.partition == Partition{{4, 3, 2, 1}});

    sw = ferrers::equality_staircase(0);
    CHECK(sw.m == 0);
    CHECK(sw.partition == Partition{});

    for (Int c = -9; c <= 9; ++c) {
        ferrers::StaircaseWitness w = ferrers::equality_staircase(c);
        CHECK(w.partition.weight() == c * (2 * c - 1));
        CHECK(ferrers::signed_sum(w.partition) == c);
    }
}
