#include "hdsbranch/hermitian.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hdsbranch/smith.hpp"

namespace hdsb {

long long HermitianDatum::z_value(const Weight& root) const {
    long long s = 0;
    for (std::size_t i = 0; i < rs.ambient_rank(); ++i) s += zvec[i] * root[i];
    if (s % (2 * zden) != 0) throw std::logic_error("z_value: non-integral on a root");
    return s / (2 * zden);
}

void HermitianDatum::validate() const {
    std::set<Weight> pos(rs.positive_roots().begin(), rs.positive_roots().end());
    std::set<Weight> split;
    for (const auto& a : compact_pos) {
        if (!pos.count(a) || !split.insert(a).second)
            throw std::invalid_argument("HermitianDatum: bad compact split");
        if (z_value(a) != 0) throw std::invalid_argument("HermitianDatum: z != 0 on a compact root");
    }
    for (const auto& a : noncompact_pos) {
        if (!pos.count(a) || !split.insert(a).second)
            throw std::invalid_argument("HermitianDatum: bad noncompact split");
        if (z_value(a) != 1) throw std::invalid_argument("HermitianDatum: z != 1 on a noncompact root");
    }
    if (split.size() != pos.size())
        throw std::invalid_argument("HermitianDatum: split does not cover the positive system");
}

CascadeResult cascade_in(const std::vector<Weight>& noncompact_pos,
                         const std::vector<Weight>& ambient_roots) {
    std::set<Weight> roots;
    for (const auto& a : ambient_roots) { roots.insert(a); roots.insert(-a); }
    auto strongly_orthogonal = [&](const Weight& a, const Weight& b) {
        return !roots.count(a + b) && !roots.count(a - b);
    };
    std::vector<Weight> pool(noncompact_pos.begin(), noncompact_pos.end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    CascadeResult cas;
    for (;;) {
        const Weight* pick = nullptr;
        for (const auto& cand : pool) { // pool is sorted: first fit is the minimum
            bool ok = true;
            for (const auto& g : cas.gammas)
                if (!strongly_orthogonal(cand, g)) { ok = false; break; }
            bool chosen = false;
            for (const auto& g : cas.gammas) if (g == cand) chosen = true;
            if (ok && !chosen) { pick = &cand; break; }
        }
        if (!pick) break;
        cas.gammas.push_back(*pick);
    }
    return cas;
}

CascadeResult strongly_orthogonal_cascade(const HermitianDatum& hd) {
    return cascade_in(hd.noncompact_pos, hd.rs.positive_roots());
}

std::vector<long long> cascade_restriction(const Weight& root, const std::vector<Weight>& gammas) {
    std::vector<long long> c(gammas.size());
    for (std::size_t k = 0; k < gammas.size(); ++k) {
        long long num = 2 * pairing4(root, gammas[k]);
        long long den = pairing4(gammas[k], gammas[k]);
        if (num % den != 0) throw std::logic_error("cascade_restriction: non-integral coefficient");
        c[k] = num / den;
    }
    return c;
}

namespace {

// restriction patterns in the gamma_i/2 basis
enum class Pattern { Zero, MinusEi, EjMinusEi, Ei, EiPlusEj, Gamma, Invalid };

Pattern classify(const std::vector<long long>& c, int& i, int& j) {
    std::vector<std::pair<int, long long>> nz;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) nz.push_back({static_cast<int>(k), c[k]});
    if (nz.empty()) return Pattern::Zero;
    if (nz.size() == 1) {
        i = nz[0].first;
        if (nz[0].second == -1) return Pattern::MinusEi;
        if (nz[0].second == 1) return Pattern::Ei;
        if (nz[0].second == 2) return Pattern::Gamma;
        return Pattern::Invalid;
    }
    if (nz.size() == 2) {
        if (nz[0].second == 1 && nz[1].second == 1) {
            i = nz[0].first; j = nz[1].first;
            return Pattern::EiPlusEj;
        }
        if (nz[0].second == -1 && nz[1].second == 1) {
            i = nz[0].first; j = nz[1].first;
            return Pattern::EjMinusEi;
        }
        if (nz[0].second == 1 && nz[1].second == -1) {
            i = nz[1].first; j = nz[0].first;
            return Pattern::EjMinusEi; // orientation (gamma_j - gamma_i)/2 with j < i
        }
    }
    return Pattern::Invalid;
}

} // namespace

MooreData moore_decomposition(const HermitianDatum& hd, const CascadeResult& cas) {
    MooreData md;
    for (const auto& a : hd.compact_pos) {
        auto c = cascade_restriction(a, cas.gammas);
        int i = -1, j = -1;
        switch (classify(c, i, j)) {
        case Pattern::Zero: md.C_0.push_back(a); break;
        case Pattern::MinusEi: md.C_i[i + 1].push_back(a); break;
        case Pattern::EjMinusEi:
            if (i > j)
                throw std::invalid_argument("moore_decomposition: compact root with reversed restriction");
            md.C_ij[{i + 1, j + 1}].push_back(a);
            break;
        default:
            throw std::invalid_argument("moore_decomposition: compact root outside the bucket patterns");
        }
        md.compact_restriction[a] = std::move(c);
    }
    for (const auto& a : hd.noncompact_pos) {
        auto c = cascade_restriction(a, cas.gammas);
        int i = -1, j = -1;
        switch (classify(c, i, j)) {
        case Pattern::Ei: md.P_i[i + 1].push_back(a); break;
        case Pattern::EiPlusEj: md.P_ij[{i + 1, j + 1}].push_back(a); break;
        case Pattern::Gamma:
            if (!(a == cas.gammas[static_cast<std::size_t>(i)]))
                throw std::invalid_argument("moore_decomposition: non-cascade root restricts like a gamma");
            md.P_0.push_back(a);
            break;
        default:
            throw std::invalid_argument("moore_decomposition: noncompact root outside the bucket patterns");
        }
        md.noncompact_restriction[a] = std::move(c);
    }
    return md;
}

std::vector<Weight> KhsCone::generators() const {
    std::vector<Weight> gens;
    Weight acc(gammas.empty() ? 0 : gammas[0].rank());
    for (const auto& g : gammas) {
        acc = acc - g;
        gens.push_back(acc);
    }
    return gens;
}

Weight KhsCone::point(const std::vector<long long>& c) const {
    if (c.size() != gammas.size()) throw std::invalid_argument("KhsCone: bad coefficient count");
    Weight w(gammas[0].rank());
    for (std::size_t i = 0; i < c.size(); ++i) w = w - c[i] * gammas[i];
    return w;
}

std::optional<std::vector<long long>> KhsCone::membership(const Weight& w) const {
    // the gammas are pairwise orthogonal, so the coefficient along gamma_k is
    // -(w, gamma_k) / (gamma_k, gamma_k)
    std::vector<long long> c(gammas.size());
    for (std::size_t k = 0; k < gammas.size(); ++k) {
        long long num = -pairing4(w, gammas[k]);
        long long den = pairing4(gammas[k], gammas[k]);
        if (num % den != 0) return std::nullopt;
        c[k] = num / den;
        if (c[k] < 0) return std::nullopt;
        if (k > 0 && c[k] > c[k - 1]) return std::nullopt;
    }
    // the component orthogonal to the cascade span must vanish
    Weight check = w;
    for (std::size_t k = 0; k < gammas.size(); ++k) check = check + c[k] * gammas[k];
    if (!check.is_zero()) return std::nullopt;
    return c;
}

std::vector<std::vector<long long>> KhsCone::enumerate(long long c1_bound) const {
    std::vector<std::vector<long long>> out;
    std::vector<long long> c(gammas.size(), 0);
    auto rec = [&](auto&& self, std::size_t k, long long cap) -> void {
        if (k == c.size()) { out.push_back(c); return; }
        for (long long v = 0; v <= cap; ++v) {
            c[k] = v;
            self(self, k + 1, v);
        }
    };
    if (!gammas.empty()) rec(rec, 0, c1_bound);
    else out.push_back({});
    return out;
}

KhsCone khs_cone(const CascadeResult& cas, std::size_t m) {
    if (m < 1 || m > cas.gammas.size()) throw std::invalid_argument("khs_cone: m out of range");
    KhsCone cone;
    cone.gammas.assign(cas.gammas.begin(), cas.gammas.begin() + m);
    return cone;
}

std::vector<OrbitStratum> orbit_stratification(const CascadeResult& cas) {
    std::vector<OrbitStratum> strata;
    for (int i = 0; i <= static_cast<int>(cas.gammas.size()); ++i) {
        OrbitStratum s;
        s.rank = i;
        for (int k = 0; k <= i; ++k) s.closure.push_back(k);
        strata.push_back(std::move(s));
    }
    return strata;
}

LSubgroupDatum l_subgroup(std::size_t ambient_rank,
                          const std::vector<Weight>& ambient_compact_pos,
                          const CascadeResult& cas, std::size_t m) {
    if (m > cas.gammas.size()) throw std::invalid_argument("l_subgroup: m out of range");
    std::vector<Weight> kept;
    for (const auto& a : ambient_compact_pos) {
        bool orth = true;
        for (std::size_t i = 0; i < m; ++i)
            if (pairing4(a, cas.gammas[i]) != 0) { orth = false; break; }
        if (orth) kept.push_back(a);
    }
    LSubgroupDatum out;
    out.root_subsystem = RootSystem::from_positive_roots(ambient_rank, kept);
    std::vector<std::vector<long long>> rows;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<long long> row(ambient_rank);
        for (std::size_t c = 0; c < ambient_rank; ++c) {
            if (cas.gammas[i][c] % 2 != 0) throw std::logic_error("l_subgroup: non-integral gamma");
            row[c] = cas.gammas[i][c] / 2;
        }
        rows.push_back(std::move(row));
    }
    out.restriction = lattice_quotient_map(ambient_rank, rows);
    return out;
}

} // namespace hdsb
