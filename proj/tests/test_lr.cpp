#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hdsbranch/lr.hpp"
#include "hdsbranch/rootsystem.hpp"

using namespace hdsb;

TEST_CASE("small Littlewood-Richardson coefficients") {
    CHECK(lr_coefficient({2, 1}, {1}, {1, 1}) == 1);
    CHECK(lr_coefficient({2, 1}, {1}, {2}) == 1);
    CHECK(lr_coefficient({2, 2}, {1}, {2, 1}) == 1);
    CHECK(lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}) == 2); // the classic c = 2 case
    CHECK(lr_coefficient({2, 1}, {2, 1}, {}) == 1);        // empty complement
    CHECK(lr_coefficient({2, 1}, {1, 1}, {2}) == 0);       // row constraint kills it
}

TEST_CASE("malformed partitions are rejected") {
    CHECK_THROWS_AS(lr_coefficient({1, 2}, {}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(lr_coefficient({2, -1}, {}, {1}), std::invalid_argument);
}

TEST_CASE("Pieri rule: stripping one box") {
    // c^lam_{mu,(1)} = number of ways to remove one box, i.e. 1 whenever
    // lam/mu is a single box
    CHECK(lr_coefficient({3, 1}, {3}, {1}) == 1);
    CHECK(lr_coefficient({3, 1}, {2, 1}, {1}) == 1);
    CHECK(lr_coefficient({3, 1}, {2}, {1}) == 0); // two boxes left
}

TEST_CASE("gl_levi_branch dimensions add up") {
    RootSystem a3 = build_root_system({{FactorType::A, 3}});
    RootSystem a1a1 = build_root_system({{FactorType::A, 1}, {FactorType::A, 1}});
    std::vector<long long> hw{2, 1, 0, -1};
    auto dec = gl_levi_branch(hw, 2, 2);
    long long total = 0;
    for (const auto& [key, c] : dec) {
        CHECK(c > 0);
        total += c * a1a1.weyl_dim(key);
    }
    CHECK(total == a3.weyl_dim(Weight::from_plain(hw)));
}

TEST_CASE("gl_levi_branch of (2,2,0^6) under GL(4) x GL(4) is multiplicity-free") {
    auto dec = gl_levi_branch({2, 2, 0, 0, 0, 0, 0, 0}, 4, 4);
    CHECK(!dec.empty());
    for (const auto& [key, c] : dec) CHECK(c == 1);
    // total dimension check against GL(8)
    RootSystem a7 = build_root_system({{FactorType::A, 7}});
    RootSystem levi = build_root_system({{FactorType::A, 3}, {FactorType::A, 3}});
    long long total = 0;
    for (const auto& [key, c] : dec) total += c * levi.weyl_dim(key);
    CHECK(total == a7.weyl_dim(Weight::from_plain({2, 2, 0, 0, 0, 0, 0, 0})));
    CHECK(total == 336);
}

TEST_CASE("example 5.2 values") {
    auto [ch, cl] = example_52_check();
    CHECK(ch == 1);
    CHECK(cl == 2);
}

TEST_CASE("example 5.2 internals: dim W and the doubled character") {
    auto classes = example_52_l_classes();
    long long dim = 0;
    for (const auto& [cls, m] : classes) dim += m;
    CHECK(dim == 20); // 21 - 1
    // the class shared by e1^e2*e3^e4 and e1^e3*e2^e4
    CHECK(classes.at(Weight::from_plain({1, 1, 1, 1})) >= 2);
}
