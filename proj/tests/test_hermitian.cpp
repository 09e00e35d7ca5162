#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hdsbranch/pairs.hpp"

using namespace hdsb;

namespace {
Weight pl(std::initializer_list<long long> v) { return Weight::from_plain(v); }

std::set<Weight> wset(const std::vector<Weight>& v) { return {v.begin(), v.end()}; }
}

TEST_CASE("sp(2,R) split") {
    const auto& hd = Catalog::builtin().datum("sp2R");
    CHECK(wset(hd.compact_pos) == std::set<Weight>{pl({1, -1})});
    CHECK(wset(hd.noncompact_pos) == std::set<Weight>{pl({2, 0}), pl({1, 1}), pl({0, 2})});
    for (const auto& a : hd.compact_pos) CHECK(hd.z_value(a) == 0);
    for (const auto& b : hd.noncompact_pos) CHECK(hd.z_value(b) == 1);
}

TEST_CASE("su(1,1) and su(2,1) splits") {
    const auto& s11 = Catalog::builtin().datum("su11");
    CHECK(s11.compact_pos.empty());
    CHECK(wset(s11.noncompact_pos) == std::set<Weight>{pl({1, -1})});

    const auto& s21 = Catalog::builtin().datum("su21");
    CHECK(wset(s21.noncompact_pos) == std::set<Weight>{pl({1, 0, -1}), pl({0, 1, -1})});
    CHECK(wset(s21.compact_pos) == std::set<Weight>{pl({1, -1, 0})});
}

TEST_CASE("unknown labels are rejected") {
    CHECK_THROWS_AS(Catalog::builtin().datum("e6"), std::invalid_argument);
    CHECK_THROWS_AS(Catalog::builtin().pair("sp2R:nope"), std::invalid_argument);
}

TEST_CASE("cascades") {
    const Catalog& cat = Catalog::builtin();
    CHECK(strongly_orthogonal_cascade(cat.datum("su11")).gammas ==
          std::vector<Weight>{pl({1, -1})});
    CHECK(strongly_orthogonal_cascade(cat.datum("sp2R")).gammas ==
          std::vector<Weight>{pl({0, 2}), pl({2, 0})});
    CHECK(strongly_orthogonal_cascade(cat.datum("su22")).gammas ==
          std::vector<Weight>{pl({0, 1, -1, 0}), pl({1, 0, 0, -1})});
    CHECK(strongly_orthogonal_cascade(cat.datum("su21")).gammas ==
          std::vector<Weight>{pl({0, 1, -1})});
}

TEST_CASE("cascade is strongly orthogonal and maximal") {
    const Catalog& cat = Catalog::builtin();
    for (const auto& gl : cat.g_labels()) {
        const auto& hd = cat.datum(gl);
        CascadeResult cas = strongly_orthogonal_cascade(hd);
        auto so = [&](const Weight& a, const Weight& b) {
            return !hd.rs.is_root(a + b) && !hd.rs.is_root(a - b);
        };
        for (std::size_t i = 0; i < cas.gammas.size(); ++i)
            for (std::size_t j = i + 1; j < cas.gammas.size(); ++j)
                CHECK(so(cas.gammas[i], cas.gammas[j]));
        // maximality: nothing else is strongly orthogonal to all of them
        for (const auto& b : hd.noncompact_pos) {
            bool chosen = false;
            for (const auto& g : cas.gammas) chosen = chosen || g == b;
            if (chosen) continue;
            bool all = true;
            for (const auto& g : cas.gammas) all = all && so(b, g);
            CHECK_FALSE(all);
        }
    }
}

TEST_CASE("moore buckets for sp(2,R)") {
    const auto& hd = Catalog::builtin().datum("sp2R");
    CascadeResult cas = strongly_orthogonal_cascade(hd);
    MooreData md = moore_decomposition(hd, cas);
    REQUIRE(md.C_ij.count({1, 2}));
    CHECK(wset(md.C_ij.at({1, 2})) == std::set<Weight>{pl({1, -1})});
    REQUIRE(md.P_ij.count({1, 2}));
    CHECK(wset(md.P_ij.at({1, 2})) == std::set<Weight>{pl({1, 1})});
    CHECK(wset(md.P_0) == std::set<Weight>{pl({0, 2}), pl({2, 0})});
    CHECK(md.C_i.empty());
    CHECK(md.P_i.empty());
}

TEST_CASE("moore buckets for su(1,1) and su(2,1)") {
    const Catalog& cat = Catalog::builtin();
    {
        const auto& hd = cat.datum("su11");
        MooreData md = moore_decomposition(hd, strongly_orthogonal_cascade(hd));
        CHECK(wset(md.P_0) == std::set<Weight>{pl({1, -1})});
        CHECK(md.C_ij.empty());
        CHECK(md.P_ij.empty());
    }
    {
        const auto& hd = cat.datum("su21");
        MooreData md = moore_decomposition(hd, strongly_orthogonal_cascade(hd));
        CHECK(md.P_i.count(1)); // non-tube type
        CHECK(md.C_i.count(1));
        CHECK(wset(md.P_i.at(1)) == std::set<Weight>{pl({1, 0, -1})});
    }
}

TEST_CASE("moore partition covers and the bijection gamma + gamma_i") {
    const Catalog& cat = Catalog::builtin();
    for (const auto& gl : cat.g_labels()) {
        const auto& hd = cat.datum(gl);
        CascadeResult cas = strongly_orthogonal_cascade(hd);
        MooreData md = moore_decomposition(hd, cas);
        std::size_t ctotal = md.C_0.size(), ptotal = md.P_0.size();
        for (const auto& [k, v] : md.C_ij) ctotal += v.size();
        for (const auto& [k, v] : md.C_i) ctotal += v.size();
        for (const auto& [k, v] : md.P_ij) ptotal += v.size();
        for (const auto& [k, v] : md.P_i) ptotal += v.size();
        CHECK(ctotal == hd.compact_pos.size());
        CHECK(ptotal == hd.noncompact_pos.size());

        for (const auto& [ij, roots] : md.C_ij) {
            REQUIRE(md.P_ij.count(ij));
            CHECK(roots.size() == md.P_ij.at(ij).size());
            std::set<Weight> target = wset(md.P_ij.at(ij));
            for (const auto& a : roots)
                CHECK(target.count(a + cas.gammas[ij.first - 1]));
        }
        for (const auto& [i, roots] : md.C_i) {
            REQUIRE(md.P_i.count(i));
            CHECK(roots.size() == md.P_i.at(i).size());
            std::set<Weight> target = wset(md.P_i.at(i));
            for (const auto& a : roots)
                CHECK(target.count(a + cas.gammas[i - 1]));
        }
    }
}

TEST_CASE("khs cone basics") {
    const auto& hd = Catalog::builtin().datum("sp2R");
    CascadeResult cas = strongly_orthogonal_cascade(hd);

    KhsCone ray = khs_cone(cas, 1);
    CHECK(ray.generators() == std::vector<Weight>{pl({0, -2})});
    CHECK(ray.membership(pl({0, -6})).has_value());
    CHECK_FALSE(ray.membership(pl({-2, 0})).has_value());

    KhsCone cone = khs_cone(cas, 2);
    CHECK(cone.enumerate(3).size() == 10);
    CHECK_FALSE(cone.membership(cone.point({2, 3})).has_value()); // violates c1 >= c2
    CHECK(cone.membership(cone.point({3, 2})).has_value());

    CHECK_THROWS_AS(khs_cone(cas, 3), std::invalid_argument);
    CHECK_THROWS_AS(khs_cone(cas, 0), std::invalid_argument);
}

TEST_CASE("orbit stratification chain") {
    const auto& hd = Catalog::builtin().datum("sp2R");
    CascadeResult cas = strongly_orthogonal_cascade(hd);
    auto strata = orbit_stratification(cas);
    REQUIRE(strata.size() == 3); // r = 2
    for (int m = 0; m <= 2; ++m) {
        CHECK(strata[m].rank == m);
        for (int i = 0; i <= 2; ++i) {
            bool contained = std::find(strata[m].closure.begin(), strata[m].closure.end(), i) !=
                             strata[m].closure.end();
            CHECK(contained == (i <= m));
        }
    }
}

TEST_CASE("l_subgroup for sp(2,R), m = 2") {
    const auto& hd = Catalog::builtin().datum("sp2R");
    CascadeResult cas = strongly_orthogonal_cascade(hd);
    LSubgroupDatum l = l_subgroup(2, hd.compact_pos, cas, 2);
    CHECK_FALSE(l.root_subsystem.has_roots());
    CHECK(l.restriction.torsion_moduli == std::vector<long long>{2, 2});
}

TEST_CASE("l_subgroup for su(2,2), m = 2, and m = 0") {
    const auto& hd = Catalog::builtin().datum("su22");
    CascadeResult cas = strongly_orthogonal_cascade(hd);
    LSubgroupDatum l = l_subgroup(4, hd.compact_pos, cas, 2);
    // no compact root of s(u(2)+u(2)) is orthogonal to both gammas
    CHECK_FALSE(l.root_subsystem.has_roots());

    LSubgroupDatum l0 = l_subgroup(4, hd.compact_pos, cas, 0);
    CHECK(l0.root_subsystem.positive_roots().size() == hd.compact_pos.size());
    CHECK(l0.restriction.torsion_moduli.empty());
    Weight w = pl({3, 1, -2, 0});
    CHECK(l0.restriction.apply(w).rank() == 4);
}

TEST_CASE("l_subgroup roots vanish on the cascade") {
    const Catalog& cat = Catalog::builtin();
    for (const auto& gl : cat.g_labels()) {
        const auto& hd = cat.datum(gl);
        CascadeResult cas = strongly_orthogonal_cascade(hd);
        for (std::size_t m = 1; m <= cas.gammas.size(); ++m) {
            LSubgroupDatum l = l_subgroup(hd.rs.ambient_rank(), hd.compact_pos, cas, m);
            for (const auto& a : l.root_subsystem.positive_roots())
                for (std::size_t i = 0; i < m; ++i)
                    CHECK(pairing4(a, cas.gammas[i]) == 0);
        }
    }
}

TEST_CASE("Kostant-Hua-Schmid decomposition across the catalog, r <= 2") {
    const Catalog& cat = Catalog::builtin();
    for (const auto& gl : cat.g_labels()) {
        const auto& hd = cat.datum(gl);
        CascadeResult cas = strongly_orthogonal_cascade(hd);
        if (cas.gammas.size() > 2) continue;
        RootSystem kc = hd.compact_system();
        KhsCone cone = khs_cone(cas, cas.gammas.size());
        FormalCharacter gens(hd.rs.ambient_rank());
        for (const auto& b : hd.noncompact_pos) gens.add(-b, 1);
        auto sym = symmetric_algebra_character(gens, 12);
        for (int d = 0; d <= 12; ++d) {
            Decomposition dec = decompose_by_alternating_sum(kc, sym[d]);
            std::map<Weight, long long> expect;
            for (const auto& c : cone.enumerate(d)) {
                long long total = 0;
                for (long long x : c) total += x;
                if (total == d) expect[cone.point(c)] = 1;
            }
            CHECK(dec.terms == expect);
        }
    }
}
