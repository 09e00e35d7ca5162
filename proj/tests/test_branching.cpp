#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hdsbranch/branching.hpp"
#include "oracle.hpp"

using namespace hdsb;

namespace {
Weight pl(std::initializer_list<long long> v) { return Weight::from_plain(v); }
}

TEST_CASE("branch (sp2R, u11) at hw = (-3,-4): everything multiplicity one") {
    HermitianPair pair = Catalog::builtin().pair("sp2R:u11");
    MultiplicityTable t = hds_branch(pair, pl({-3, -4}), 4);
    CHECK(t.ktype_dim == 2);
    for (const auto& [key, m] : t.entries) CHECK(m == 1);
    // degree d holds the two K-type weights shifted by even steps
    CHECK(t.at(0, pl({-3, -4})) == 1);
    CHECK(t.at(1, pl({-5, -4})) == 1);
    CHECK(t.at(1, pl({-3, -6})) == 1);
}

TEST_CASE("branch (sp2R, u11) at hw = (-3,-5): the degree-1 collision") {
    HermitianPair pair = Catalog::builtin().pair("sp2R:u11");
    MultiplicityTable t = hds_branch(pair, pl({-3, -5}), 4);
    CHECK(t.at(1, pl({-5, -5})) == 2);
    CHECK(t.at(0, pl({-4, -4})) == 1);
    CHECK(sup_multiplicity(t) == 2);
}

TEST_CASE("max_degree 0 is the K-type decomposition over k^tau") {
    HermitianPair pair = Catalog::builtin().pair("sp2R:u11");
    Weight hw = pl({-3, -4});
    MultiplicityTable t = hds_branch(pair, hw, 0);
    CHECK(t.entries.size() == 2); // the two torus weights of V_hw
    CHECK(t.at(0, pl({-3, -4})) == 1);
    CHECK(t.at(0, pl({-4, -3})) == 1);
}

TEST_CASE("hds_branch validates its input") {
    HermitianPair pair = Catalog::builtin().pair("sp2R:u11");
    CHECK_THROWS_AS(hds_branch(pair, pl({-5, -3}), 2), std::invalid_argument);
    CHECK_THROWS_AS(hds_branch(pair, pl({-3, -4}), -1), std::invalid_argument);
}

TEST_CASE("monotonicity holds, and a corrupted table fails it") {
    HermitianPair pair = Catalog::builtin().pair("sp2R:u11");
    MultiplicityTable t = hds_branch(pair, pl({-3, -5}), 8);
    KhsCone cone = pair.cone();
    CHECK(monotonicity_check(t, cone));

    MultiplicityTable bad = t;
    bad.entries[{1, pl({-5, -5})}] = 0; // zero out an interior entry
    CHECK_FALSE(monotonicity_check(bad, cone));
}

TEST_CASE("stability scan: scalar highest weight stabilizes at zero") {
    HermitianPair pair = Catalog::builtin().pair("sp2R:u11");
    StableComparison cmp = stable_comparison(pair, pl({0, 0}), 10);
    REQUIRE(cmp.report.stabilized);
    CHECK(cmp.report.lambda0 == Weight(2));
    for (const auto& [cls, v] : cmp.report.stable_values) CHECK(v == 1);
    CHECK(cmp.values_match);
}

TEST_CASE("stability scan: hw = (-3,-5) stabilizes onto the isotropy values") {
    HermitianPair pair = Catalog::builtin().pair("sp2R:u11");
    StableComparison cmp = stable_comparison(pair, pl({-3, -5}), 10);
    REQUIRE(cmp.report.stabilized);
    CHECK(cmp.report.lambda0 == pl({-2, -2}));
    CHECK(cmp.report.stable_values.at(pl({1, 1})) == 2);
    CHECK(cmp.report.stable_values.at(pl({0, 0})) == 1);
    CHECK(cmp.values_match);
}

TEST_CASE("stability scan: one-shell window is inconclusive") {
    HermitianPair pair = Catalog::builtin().pair("sp2R:u11");
    MultiplicityTable t = hds_branch(pair, pl({-3, -5}), 1);
    StabilityReport rep = stability_scan(t, pair.cone(), pair.l_datum.restriction);
    CHECK_FALSE(rep.stabilized);
}

TEST_CASE("isotropy multiplicities for (sp2R, u11)") {
    HermitianPair pair = Catalog::builtin().pair("sp2R:u11");
    auto iso34 = isotropy_multiplicity(pair, pl({-3, -4}));
    CHECK(iso34.size() == 2);
    CHECK(iso34.at(pl({1, 0})) == 1);
    CHECK(iso34.at(pl({0, 1})) == 1);

    auto iso35 = isotropy_multiplicity(pair, pl({-3, -5}));
    CHECK(iso35.at(pl({1, 1})) == 2);
    CHECK(iso35.at(pl({0, 0})) == 1);

    auto iso0 = isotropy_multiplicity(pair, pl({0, 0}));
    CHECK(iso0.size() == 1);
    CHECK(iso0.at(pl({0, 0})) == 1);
}

TEST_CASE("multiplicity-freeness on both paths") {
    HermitianPair pair = Catalog::builtin().pair("sp2R:u11");
    MfReport mf34 = multiplicity_free_check(pair, pl({-3, -4}), 10);
    CHECK(mf34.multiplicity_free);
    CHECK(mf34.sup_table == 1);
    CHECK(mf34.sup_isotropy == 1);

    MfReport mf35 = multiplicity_free_check(pair, pl({-3, -5}), 10);
    CHECK_FALSE(mf35.multiplicity_free);
    CHECK(mf35.sup_table == 2);
    CHECK(mf35.sup_isotropy == 2);

    MfReport mf0 = multiplicity_free_check(pair, pl({0, 0}), 10);
    CHECK(mf0.multiplicity_free);
}

TEST_CASE("uniform bound and dimension conservation on random weights") {
    std::mt19937 rng(31);
    const Catalog& cat = Catalog::builtin();
    for (std::string label : {"sp2R:u11", "su22:u11u11", "su22:so_star4", "so23:so22so1"}) {
        HermitianPair pair = cat.pair(label);
        RootSystem kc = pair.g.compact_system();
        for (int t = 0; t < 3; ++t) {
            Weight hw = oracle::random_dominant(kc, rng, -5, 0);
            MultiplicityTable table = hds_branch(pair, hw, 5);
            for (const auto& [key, m] : table.entries) {
                CHECK(m >= 1);
                CHECK(m <= table.ktype_dim);
            }
            CHECK(monotonicity_check(table, pair.cone()));
        }
    }
}

TEST_CASE("non-equal-rank extension entry su22:so_star4 branches consistently") {
    HermitianPair pair = Catalog::builtin().pair("su22:so_star4");
    CHECK_FALSE(pair.equal_rank);
    CHECK(pair.target_rank() == 2);
    Weight hw = pl({0, 0, 0, 0});
    MultiplicityTable t = hds_branch(pair, hw, 6);
    // scalar case: the table is the KHS-style multiplicity-free fan of sp(2,R)
    for (const auto& [key, m] : t.entries) CHECK(m == 1);
    StableComparison cmp = stable_comparison(pair, hw, 8);
    CHECK(cmp.report.stabilized);
    CHECK(cmp.values_match);
}

TEST_CASE("torus-k^tau tables equal brute-force weight counting") {
    // when k^tau has no roots the table entry at (d, w) is literally the
    // number of ways to reach w from a K-type weight by d generator steps
    std::mt19937 rng(57);
    for (std::string label : {"sp2R:u11", "su22:u11u11", "sp2R:sp1Rsp1R"}) {
        HermitianPair pair = Catalog::builtin().pair(label);
        REQUIRE_FALSE(pair.k_tau.has_roots());
        RootSystem kc = pair.g.compact_system();
        Weight hw = oracle::random_dominant(kc, rng, -5, 0);
        int D = 5;
        MultiplicityTable table = hds_branch(pair, hw, D);

        FormalCharacter chV = restrict_character(irreducible_character(kc, hw), pair.restriction);
        std::map<std::pair<int, Weight>, long long> expect;
        std::vector<Weight> gens;
        for (const auto& b : pair.p_plus_minus_tau) gens.push_back(-b);
        // enumerate all degree-<=D monomials in the generators
        std::vector<long long> exps(gens.size(), 0);
        auto rec = [&](auto&& self, std::size_t k, int left, Weight acc) -> void {
            if (k == gens.size()) {
                int d = D - left;
                for (const auto& [w, m] : chV.entries()) expect[{d, w + acc}] += m;
                return;
            }
            for (int e = 0; e <= left; ++e) {
                Weight next = acc;
                for (int i = 0; i < e; ++i) next = next + gens[k];
                self(self, k + 1, left - e, next);
            }
        };
        rec(rec, 0, D, Weight(pair.target_rank()));
        CHECK(table.entries == expect);
    }
}

TEST_CASE("stable values equal the isotropy representation on every catalog pair") {
    const Catalog& cat = Catalog::builtin();
    for (const auto& label : cat.pair_labels()) {
        HermitianPair pair = cat.pair(label);
        StableComparison cmp = stable_comparison(pair, Weight(pair.g.rs.ambient_rank()), 8);
        CHECK(cmp.report.stabilized);
        CHECK(cmp.values_match);
    }
}

TEST_CASE("serial reference and parallel tables agree") {
    HermitianPair pair = Catalog::builtin().pair("su22:u11u11");
    Weight hw = pl({0, -1, -2, -3});
    MultiplicityTable a = hds_branch(pair, hw, 6);
    MultiplicityTable b = reference::hds_branch(pair, hw, 6);
    CHECK(a.entries == b.entries);
}
