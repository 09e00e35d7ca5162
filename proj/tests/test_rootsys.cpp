#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hdsbranch/rootsystem.hpp"

using namespace hdsb;

namespace {
Weight pl(std::initializer_list<long long> v) { return Weight::from_plain(v); }
}

TEST_CASE("A1 inside two coordinates") {
    RootSystem rs = build_root_system({{FactorType::A, 1}});
    CHECK(rs.ambient_rank() == 2);
    REQUIRE(rs.positive_roots().size() == 1);
    CHECK(rs.positive_roots()[0] == pl({1, -1}));
    CHECK(rs.simple_roots().size() == 1);
}

TEST_CASE("C2 has eight roots") {
    RootSystem rs = build_root_system({{FactorType::C, 2}});
    CHECK(rs.positive_roots().size() == 4);
    std::set<Weight> expect{pl({1, -1}), pl({1, 1}), pl({2, 0}), pl({0, 2})};
    std::set<Weight> got(rs.positive_roots().begin(), rs.positive_roots().end());
    CHECK(got == expect);
}

TEST_CASE("A3 has twelve roots") {
    RootSystem rs = build_root_system({{FactorType::A, 3}});
    CHECK(rs.ambient_rank() == 4);
    CHECK(rs.positive_roots().size() == 6);
}

TEST_CASE("root set closure and simple cone") {
    for (auto f : {Factor{FactorType::B, 3}, Factor{FactorType::C, 3}, Factor{FactorType::D, 3},
                   Factor{FactorType::A, 2}}) {
        RootSystem rs = build_root_system({f});
        for (const auto& a : rs.positive_roots()) {
            CHECK(rs.is_root(a));
            CHECK(rs.is_root(-a));
            CHECK(rs.simple_root_coords(a).has_value());
        }
    }
}

TEST_CASE("pairing examples") {
    Weight a = pl({1, -1}), b = pl({2, 0}), c = pl({1, 1});
    CHECK(pairing(a, a) == Rat(2));
    CHECK(pairing(b, c) == Rat(2));
    CHECK(pairing(Weight(2), c) == Rat(0));
    CHECK_THROWS_AS((void)pairing(a, Weight(3)), std::invalid_argument);
}

TEST_CASE("pairing is bilinear and symmetric") {
    Weight a = pl({1, -2}), b = pl({0, 3}), c = pl({2, 1});
    CHECK(pairing(a, b) == pairing(b, a));
    CHECK(pairing4(a + b, c) == pairing4(a, c) + pairing4(b, c));
}

TEST_CASE("make_dominant on C2") {
    RootSystem rs = build_root_system({{FactorType::C, 2}});
    WeylChamberResult r = rs.make_dominant(pl({0, 2}));
    CHECK(r.dominant == pl({2, 0}));
    CHECK(r.sign == -1);
    CHECK(r.singular); // lies on the 2e_2 wall
}

TEST_CASE("make_dominant identity and singular flag") {
    RootSystem rs = build_root_system({{FactorType::C, 2}});
    Weight w = pl({3, 1});
    WeylChamberResult r = rs.make_dominant(w);
    CHECK(r.dominant == w);
    CHECK(r.sign == 1);
    CHECK_FALSE(r.singular);

    WeylChamberResult s = rs.make_dominant(pl({2, 2})); // on the e1-e2 wall
    CHECK(s.singular);
}

TEST_CASE("make_dominant is idempotent and reflection flips parity") {
    RootSystem rs = build_root_system({{FactorType::C, 2}});
    Weight w = pl({-3, 1});
    WeylChamberResult r = rs.make_dominant(w);
    WeylChamberResult again = rs.make_dominant(r.dominant);
    CHECK(again.dominant == r.dominant);
    CHECK(again.sign == 1);
    for (const auto& a : rs.simple_roots()) {
        Weight flipped = rs.reflect(r.dominant, a);
        WeylChamberResult back = rs.make_dominant(flipped);
        CHECK(back.dominant == r.dominant);
        if (!(flipped == r.dominant)) CHECK(back.sign == -1);
    }
}

TEST_CASE("dominant_p") {
    RootSystem rs = build_root_system({{FactorType::C, 2}});
    CHECK(rs.dominant_p(pl({3, 1})));
    CHECK(rs.dominant_p(Weight(2)));
    RootSystem a1 = build_root_system({{FactorType::A, 1}});
    CHECK_FALSE(a1.dominant_p(pl({-1, 1})));
}

TEST_CASE("Weyl group orders via orbit closure") {
    RootSystem c2 = build_root_system({{FactorType::C, 2}});
    CHECK(c2.orbit(pl({3, 1})).size() == 8);
    RootSystem a2 = build_root_system({{FactorType::A, 2}});
    CHECK(a2.orbit(pl({3, 1, 0})).size() == 6);
}

TEST_CASE("torus factors contribute rootless coordinates") {
    RootSystem rs = build_root_system({{FactorType::A, 1}, {FactorType::Torus, 2}});
    CHECK(rs.ambient_rank() == 4);
    CHECK(rs.positive_roots().size() == 1);
    CHECK(rs.dominant_p(pl({1, -1, 5, -7})));
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(build_root_system({{FactorType::C, 0}}), std::invalid_argument);
}

TEST_CASE("weyl_dim basics") {
    RootSystem a1 = build_root_system({{FactorType::A, 1}});
    CHECK(a1.weyl_dim(pl({1, 0})) == 2);
    CHECK(a1.weyl_dim(pl({1, -1})) == 3);
    RootSystem a2 = build_root_system({{FactorType::A, 2}});
    CHECK(a2.weyl_dim(pl({1, 0, -1})) == 8);
}

TEST_CASE("half-integral weights stay exact") {
    RootSystem c2 = build_root_system({{FactorType::C, 2}});
    Weight half(std::vector<long long>{3, 1}); // (3/2, 1/2)
    CHECK(c2.dominant_p(half));
    Weight refl = c2.reflect(half, pl({1, -1}));
    CHECK(refl == Weight(std::vector<long long>{1, 3}));
}
