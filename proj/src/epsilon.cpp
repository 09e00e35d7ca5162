#include "hdsbranch/epsilon.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace hdsb {

std::vector<long long> RestrictedRootSystem::basis_coords(const std::vector<long long>& c) const {
    if (c.size() != r) throw std::invalid_argument("RestrictedRootSystem: bad vector length");
    std::vector<long long> a(r, 0);
    if (type == Type::BC) {
        a = c; // basis {gamma_i / 2}
    } else {
        // basis {(gamma_i - gamma_{i+1})/2} + {gamma_r}: prefix sums, with the
        // last coordinate half the total
        long long total = 0;
        for (long long x : c) total += x;
        if (total % 2 != 0)
            throw std::invalid_argument("RestrictedRootSystem: vector outside the C-type lattice");
        long long prefix = 0;
        for (std::size_t i = 0; i + 1 < r; ++i) {
            prefix += c[i];
            a[i] = prefix;
        }
        a[r - 1] = total / 2;
    }
    return a;
}

int Signature::evaluate(const RestrictedRootSystem& rrs, const std::vector<long long>& c) const {
    auto a = rrs.basis_coords(c);
    int s = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] % 2 != 0 && on_basis[i] == -1) s = -s;
    return s;
}

RestrictedRootSystem restricted_roots(const MooreData& moore, std::size_t r) {
    RestrictedRootSystem rrs;
    rrs.r = r;
    auto vec = [&](std::initializer_list<std::pair<std::size_t, long long>> entries) {
        std::vector<long long> v(r, 0);
        for (auto [i, x] : entries) v[i] = x;
        return v;
    };
    auto add_pm = [&](const std::vector<long long>& v, long long mult) {
        if (mult == 0) return;
        rrs.roots[v] += mult;
        std::vector<long long> neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        rrs.roots[neg] += mult;
    };
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            auto Cit = moore.C_ij.find({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
            auto Pit = moore.P_ij.find({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
            long long nc = Cit == moore.C_ij.end() ? 0 : Cit->second.size();
            long long np = Pit == moore.P_ij.end() ? 0 : Pit->second.size();
            if (nc != np)
                throw std::invalid_argument("restricted_roots: |C_ij| != |P_ij|");
            add_pm(vec({{i, -1}, {j, 1}}), nc);
            add_pm(vec({{i, 1}, {j, 1}}), np);
        }
    bool bc = false;
    for (std::size_t i = 0; i < r; ++i) {
        auto Cit = moore.C_i.find(static_cast<int>(i) + 1);
        auto Pit = moore.P_i.find(static_cast<int>(i) + 1);
        long long nc = Cit == moore.C_i.end() ? 0 : Cit->second.size();
        long long np = Pit == moore.P_i.end() ? 0 : Pit->second.size();
        if (nc != np) throw std::invalid_argument("restricted_roots: |C_i| != |P_i|");
        if (nc + np > 0) bc = true;
        add_pm(vec({{i, 1}}), nc + np);
        add_pm(vec({{i, 2}}), 1);
    }
    rrs.type = bc ? RestrictedRootSystem::Type::BC : RestrictedRootSystem::Type::C;
    if (bc) {
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<long long> e(r, 0);
            e[i] = 1;
            rrs.basis.push_back(std::move(e));
        }
    } else {
        for (std::size_t i = 0; i + 1 < r; ++i) {
            std::vector<long long> v(r, 0);
            v[i] = 1;
            v[i + 1] = -1;
            rrs.basis.push_back(std::move(v));
        }
        std::vector<long long> last(r, 0);
        last[r - 1] = 2;
        rrs.basis.push_back(std::move(last));
    }
    // span assertion: every restricted root must decompose in the basis
    for (const auto& [c, m] : rrs.roots) rrs.basis_coords(c);
    return rrs;
}

std::vector<Signature> enumerate_signatures(const RestrictedRootSystem& rrs) {
    std::size_t k = rrs.basis.size();
    std::vector<Signature> out;
    for (std::size_t mask = 0; mask < (1u << k); ++mask) {
        Signature s;
        s.on_basis.resize(k);
        for (std::size_t i = 0; i < k; ++i) s.on_basis[i] = (mask >> i) & 1 ? -1 : 1;
        out.push_back(std::move(s));
    }
    return out;
}

bool holomorphic_p(const Signature& sig, const RestrictedRootSystem& rrs) {
    for (std::size_t i = 0; i < rrs.r; ++i) {
        std::vector<long long> g(rrs.r, 0);
        g[i] = 2;
        if (sig.evaluate(rrs, g) != 1) return false;
    }
    return true;
}

GammaPartition gamma_partition(const Signature& sig, const RestrictedRootSystem& rrs) {
    if (!holomorphic_p(sig, rrs))
        throw std::invalid_argument("gamma_partition: non-holomorphic signature");
    GammaPartition part;
    for (std::size_t i = 0; i < rrs.r; ++i) {
        std::vector<long long> v(rrs.r, 0);
        bool in_gamma1;
        if (rrs.is_type_bc()) {
            v[i] = 1; // gamma_i / 2
            in_gamma1 = sig.evaluate(rrs, v) == -1;
        } else {
            v[0] += 1;
            v[i] += 1; // (gamma_1 + gamma_i)/2
            in_gamma1 = sig.evaluate(rrs, v) == 1;
        }
        (in_gamma1 ? part.gamma1 : part.gamma2).push_back(i);
    }
    return part;
}

CascadeResult reorder_to_good(const CascadeResult& cas, const GammaPartition& part) {
    CascadeResult out;
    for (std::size_t i : part.gamma1) out.gammas.push_back(cas.gammas[i]);
    for (std::size_t i : part.gamma2) out.gammas.push_back(cas.gammas[i]);
    return out;
}

ZPrimeFunctional z_prime(const GammaPartition& part) {
    ZPrimeFunctional zp;
    zp.gamma1 = part.gamma1;
    return zp;
}

std::pair<std::vector<Weight>, std::vector<Weight>>
classify_compact_roots(const ZPrimeFunctional& zp, const MooreData& moore) {
    std::vector<Weight> plus, zero;
    for (const auto& [a, c] : moore.compact_restriction) {
        long long v = zp.value(c);
        if (v == 1) plus.push_back(a);
        else if (v == 0) zero.push_back(a);
        else throw std::invalid_argument("classify_compact_roots: alpha(Z') outside {0,1}; ordering violated");
    }
    return {plus, zero};
}

HermitianPair tau_epsilon_pair(const HermitianPair& base, const Signature& sig) {
    EpsilonContext ctx = make_epsilon_context(base, sig);
    return ctx.twisted;
}

EpsilonContext make_epsilon_context(const HermitianPair& base, const Signature& sig) {
    if (!base.equal_rank)
        throw std::invalid_argument("epsilon: base pair must be equal rank");
    EpsilonContext ctx;
    ctx.base = base;
    ctx.cascade = base.cascade;
    // Moore data over the base cascade; the strict bucket patterns are part
    // of the K-case contract this machinery relies on
    ctx.moore = moore_decomposition(base.g, ctx.cascade);
    ctx.rrs = restricted_roots(ctx.moore, ctx.cascade.gammas.size());
    ctx.sig = sig;
    if (!holomorphic_p(sig, ctx.rrs))
        throw std::invalid_argument("epsilon: non-holomorphic signature");
    ctx.partition = gamma_partition(sig, ctx.rrs);
    ctx.good_cascade = reorder_to_good(ctx.cascade, ctx.partition);
    ctx.zp = z_prime(ctx.partition);

    // twist the tau-split by epsilon on each restriction class
    std::set<Weight> in_ktau(base.k_tau.positive_roots().begin(), base.k_tau.positive_roots().end());
    std::set<Weight> in_ptau(base.p_plus_tau.begin(), base.p_plus_tau.end());
    HermitianPair tw;
    tw.label = base.label + "~eps";
    tw.g = base.g;
    tw.equal_rank = true;
    tw.restriction = LatticeMap::identity(base.g.rs.ambient_rank());
    std::vector<Weight> fixed_compact;
    for (const auto& a : base.g.compact_pos) {
        int s = in_ktau.count(a) ? 1 : -1;
        int e = sig.evaluate(ctx.rrs, cascade_restriction(a, ctx.cascade.gammas));
        if (e * s == 1) fixed_compact.push_back(a);
    }
    for (const auto& b : base.g.noncompact_pos) {
        int s = in_ptau.count(b) ? 1 : -1;
        int e = sig.evaluate(ctx.rrs, cascade_restriction(b, ctx.cascade.gammas));
        (e * s == 1 ? tw.p_plus_tau : tw.p_plus_minus_tau).push_back(b);
    }
    tw.k_tau = RootSystem::from_positive_roots(base.g.rs.ambient_rank(), fixed_compact);
    tw.finalize();
    ctx.twisted = std::move(tw);

    // alpha(Z') splits the compact positives: 1 on the flipped part, 0 on the
    // fixed part (anything else violates the good-ordering assumption)
    std::tie(ctx.plus_set, ctx.zero_set) = classify_compact_roots(ctx.zp, ctx.moore);
    ctx.k_sub = RootSystem::from_positive_roots(base.g.rs.ambient_rank(), ctx.zero_set);
    return ctx;
}

long long IndexSets::signed_sum_K() const {
    long long s = 0;
    for (const auto& e : I_K) s += e.sign * e.nu_mult;
    return s;
}
long long IndexSets::signed_sum_KH() const {
    long long s = 0;
    for (const auto& e : I_KH) s += e.sign * e.nu_mult;
    return s;
}

namespace {

// membership in the two-chain cone {-sum c_i gamma_i : c_1 >= ... >= c_{r1} >= 0,
// c_{r1+1} >= ... >= c_r >= 0} over the good ordering
bool two_chain_member(const Weight& w, const std::vector<Weight>& gammas, std::size_t r1) {
    std::vector<long long> c(gammas.size());
    for (std::size_t k = 0; k < gammas.size(); ++k) {
        long long num = -pairing4(w, gammas[k]); // gamma-basis coefficient
        long long den = pairing4(gammas[k], gammas[k]);
        if (num % den != 0) return false;
        c[k] = num / den;
        if (c[k] < 0) return false;
        bool chain_start = k == 0 || k == r1;
        if (!chain_start && c[k] > c[k - 1]) return false;
    }
    Weight check = w;
    for (std::size_t k = 0; k < gammas.size(); ++k) check = check + c[k] * gammas[k];
    return check.is_zero();
}

} // namespace

IndexSets index_sets(const EpsilonContext& ctx, const Weight& lam,
                     const FormalCharacter& nu_support) {
    IndexSets out;
    RootSystem rsK = ctx.base.k_tau;
    const Weight& rho = rsK.rho();
    KhsCone coneK = khs_cone(ctx.cascade, ctx.cascade.gammas.size());
    for (const auto& [nu, m] : nu_support.entries()) {
        Weight x = lam + nu + rho;
        WeylChamberResult rk = rsK.make_dominant(x);
        if (!rk.singular && coneK.membership(rk.dominant - rho)) {
            out.I_K.push_back({nu, m, rk.sign, rk.dominant, rk.dominant - rho});
        }
        WeylChamberResult rh = ctx.k_sub.make_dominant(x);
        if (!rh.singular && two_chain_member(rh.dominant - rho, ctx.good_cascade.gammas,
                                             ctx.partition.r1())) {
            out.I_KH.push_back({nu, m, rh.sign, rh.dominant, rh.dominant - rho});
        }
    }
    std::sort(out.I_K.begin(), out.I_K.end());
    std::sort(out.I_KH.begin(), out.I_KH.end());
    return out;
}

FamilyCheckReport family_equal_check(const HermitianPair& base, const Signature& sig,
                                     const Weight& hw, int max_degree,
                                     long long dominance_margin) {
    EpsilonContext ctx = make_epsilon_context(base, sig);
    MultiplicityTable tableA = hds_branch(base, hw, max_degree);
    MultiplicityTable tableB = hds_branch(ctx.twisted, hw, max_degree);
    auto byA = tableA.by_weight();
    auto byB = tableB.by_weight();

    // nu ranges over the weights of ch((H^{p_+})^*) = -support of ch(V_hw)
    FormalCharacter chV = irreducible_character(base.g.compact_system(), hw);
    FormalCharacter dual(chV.rank());
    for (const auto& [w, v] : chV.entries()) dual.add(-w, v);
    (void)dominance_margin; // the explicit condition below subsumes the margin

    auto dominant_enough = [&](const Weight& lam) {
        for (const auto& [nu, m] : dual.entries())
            for (const auto& a : ctx.plus_set)
                if (pairing4(lam + nu, a) < 0) return false;
        return true;
    };

    std::set<Weight> keys;
    for (const auto& [w, m] : byA) keys.insert(w);
    for (const auto& [w, m] : byB) keys.insert(w);

    FamilyCheckReport rep;
    for (const auto& lam : keys) {
        if (!dominant_enough(lam)) continue;
        long long a = byA.count(lam) ? byA[lam] : 0;
        long long b = byB.count(lam) ? byB[lam] : 0;
        rep.compared_keys.push_back(lam);
        rep.values[lam] = {a, b};
        if (a != b) rep.differing_keys.push_back(lam);
        IndexSets is = index_sets(ctx, lam, dual);
        if (!is.equal()) rep.index_sets_equal = false;
    }
    if (rep.compared_keys.empty())
        throw std::invalid_argument("family_equal_check: window too small, no dominant-enough keys");
    return rep;
}

} // namespace hdsb
