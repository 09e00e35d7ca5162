#include "hdsbranch/character.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hdsb {

bool FormalCharacter::weyl_invariant(const RootSystem& rs) const {
    for (const auto& [w, v] : m_)
        for (const auto& a : rs.simple_roots())
            if (at(rs.reflect(w, a)) != v) return false;
    return true;
}

LatticeMap LatticeMap::identity(std::size_t n) {
    LatticeMap m;
    m.src_rank = n;
    m.rows.assign(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m.rows[i][i] = 1;
    return m;
}

Weight LatticeMap::apply(const Weight& w) const {
    if (w.rank() != src_rank) throw std::invalid_argument("LatticeMap: rank mismatch");
    Weight out(target_rank());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        long long s = 0;
        for (std::size_t j = 0; j < src_rank; ++j) s += rows[i][j] * w[j];
        out[i] = s;
    }
    std::size_t f = free_rank();
    for (std::size_t k = 0; k < torsion_moduli.size(); ++k) {
        long long M = 2 * torsion_moduli[k];
        out[f + k] = ((out[f + k] % M) + M) % M;
    }
    return out;
}

LatticeMap LatticeMap::compose(const LatticeMap& inner) const {
    if (!inner.torsion_moduli.empty())
        throw std::invalid_argument("LatticeMap: cannot compose through a torsion map");
    if (src_rank != inner.target_rank()) throw std::invalid_argument("LatticeMap: rank mismatch");
    LatticeMap out;
    out.src_rank = inner.src_rank;
    out.torsion_moduli = torsion_moduli;
    out.rows.assign(target_rank(), std::vector<long long>(inner.src_rank, 0));
    for (std::size_t i = 0; i < target_rank(); ++i)
        for (std::size_t j = 0; j < inner.src_rank; ++j)
            for (std::size_t k = 0; k < src_rank; ++k)
                out.rows[i][j] += rows[i][k] * inner.rows[k][j];
    return out;
}

FormalCharacter delta_character(std::size_t rank) {
    FormalCharacter ch(rank);
    ch.add(Weight(rank), 1);
    return ch;
}

FormalCharacter irreducible_character(const RootSystem& rs, const Weight& hw) {
    if (!rs.dominant_p(hw)) throw std::invalid_argument("irreducible_character: non-dominant weight");

    // Dominant weights of V_hw: dominant mu with hw - mu in the positive
    // simple-root cone.  BFS downward by simple-root steps, pruning anything
    // whose dominant representative escapes the cone under hw.
    std::set<Weight> visited{hw};
    std::set<Weight> dominants{hw};
    std::vector<Weight> frontier{hw};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& w : frontier) {
            for (const auto& a : rs.simple_roots()) {
                Weight v = w - a;
                if (visited.count(v)) continue;
                Weight dom = rs.make_dominant(v).dominant;
                if (!rs.simple_root_coords(hw - dom)) continue;
                visited.insert(v);
                if (rs.dominant_p(v)) dominants.insert(v);
                next.push_back(v);
            }
        }
        frontier = std::move(next);
    }

    // Freudenthal, processed by increasing height of hw - mu.
    std::vector<std::pair<long long, Weight>> order;
    for (const auto& mu : dominants) {
        auto c = rs.simple_root_coords(hw - mu);
        long long h = 0;
        for (long long x : *c) h += x;
        order.push_back({h, mu});
    }
    std::sort(order.begin(), order.end());

    std::map<Weight, long long> mult;
    const Weight& rho = rs.rho();
    long long top4 = pairing4(hw + rho, hw + rho);
    auto mult_of = [&](const Weight& w) -> long long {
        Weight dom = rs.make_dominant(w).dominant;
        auto it = mult.find(dom);
        return it == mult.end() ? 0 : it->second;
    };
    for (const auto& [h, mu] : order) {
        if (h == 0) { mult[mu] = 1; continue; }
        long long num4 = 0;
        for (const auto& a : rs.positive_roots()) {
            // root strings through the weight system are unbroken, so the
            // first zero multiplicity ends the string
            for (long long k = 1;; ++k) {
                Weight w = mu + k * a;
                long long m = mult_of(w);
                if (m == 0) break;
                num4 += m * pairing4(w, a);
            }
        }
        long long den4 = top4 - pairing4(mu + rho, mu + rho);
        if (den4 <= 0 || (2 * num4) % den4 != 0)
            throw std::logic_error("Freudenthal: non-integral multiplicity");
        mult[mu] = 2 * num4 / den4;
    }

    FormalCharacter ch(rs.ambient_rank());
    for (const auto& [mu, m] : mult)
        for (const auto& w : rs.orbit(mu)) ch.add(w, m);
    return ch;
}

namespace reference {

FormalCharacter tensor_character(const FormalCharacter& a, const FormalCharacter& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("tensor_character: rank mismatch");
    FormalCharacter out(a.rank());
    for (const auto& [wa, va] : a.entries())
        for (const auto& [wb, vb] : b.entries())
            out.add(wa + wb, va * vb);
    return out;
}

Decomposition decompose_by_alternating_sum(const RootSystem& rs, const FormalCharacter& ch) {
    if (!ch.genuine()) throw std::invalid_argument("decompose: negative entries");
    Decomposition dec;
    const Weight& rho = rs.rho();
    for (const auto& [nu, v] : ch.entries()) {
        WeylChamberResult r = rs.make_dominant(nu + rho);
        if (r.singular) continue;
        Weight key = r.dominant - rho;
        auto [it, fresh] = dec.terms.emplace(key, r.sign * v);
        if (!fresh && (it->second += r.sign * v) == 0) dec.terms.erase(it);
    }
    for (const auto& [w, m] : dec.terms)
        if (m < 0) throw std::invalid_argument("decompose: negative multiplicity (input not Weyl-invariant)");
    return dec;
}

} // namespace reference

FormalCharacter tensor_character(const FormalCharacter& a, const FormalCharacter& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("tensor_character: rank mismatch");
    const FormalCharacter& big = a.support_size() >= b.support_size() ? a : b;
    const FormalCharacter& small = a.support_size() >= b.support_size() ? b : a;
    std::vector<std::pair<Weight, long long>> items(big.entries().begin(), big.entries().end());
    FormalCharacter out(a.rank());

#ifdef _OPENMP
    int nt = omp_get_max_threads();
#else
    int nt = 1;
#endif
    std::vector<FormalCharacter::Map> partial(nt);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(items.size()); ++i) {
#ifdef _OPENMP
        auto& mine = partial[omp_get_thread_num()];
#else
        auto& mine = partial[0];
#endif
        for (const auto& [wb, vb] : small.entries()) {
            Weight w = items[i].first + wb;
            auto [it, fresh] = mine.emplace(w, items[i].second * vb);
            if (!fresh) it->second += items[i].second * vb;
        }
    }
    for (const auto& part : partial)
        for (const auto& [w, v] : part) out.add(w, v);
    return out;
}

std::vector<FormalCharacter> symmetric_algebra_character(const FormalCharacter& generators,
                                                         int max_degree) {
    if (!generators.genuine())
        throw std::invalid_argument("symmetric_algebra_character: negative entries in generators");
    if (max_degree < 0) throw std::invalid_argument("symmetric_algebra_character: negative degree");
    std::size_t n = generators.rank();
    std::vector<FormalCharacter> s(max_degree + 1, FormalCharacter(n));
    s[0] = delta_character(n);
    // one generator at a time: S(V + g) degree d picks k copies of g
    for (const auto& [g, m] : generators.entries()) {
        for (long long copy = 0; copy < m; ++copy) {
            for (int d = 1; d <= max_degree; ++d) {
                // in-place ascending d: s[d] += e^g * s[d-1]
                FormalCharacter shifted(n);
                for (const auto& [w, v] : s[d - 1].entries()) shifted.add(w + g, v);
                for (const auto& [w, v] : shifted.entries()) s[d].add(w, v);
            }
        }
    }
    return s;
}

Decomposition decompose_by_stripping(const RootSystem& rs, const FormalCharacter& ch) {
    if (!ch.genuine()) throw std::invalid_argument("decompose: negative entries");
    Decomposition dec;
    FormalCharacter rem = ch;
    while (!rem.empty()) {
        // lexicographically maximal dominant support weight
        const Weight* top = nullptr;
        for (auto it = rem.entries().rbegin(); it != rem.entries().rend(); ++it) {
            if (rs.dominant_p(it->first)) { top = &it->first; break; }
        }
        if (!top)
            throw std::invalid_argument("decompose_by_stripping: no dominant weight in support");
        Weight hw = *top;
        long long m = rem.at(hw);
        FormalCharacter irr = irreducible_character(rs, hw);
        for (const auto& [w, v] : irr.entries()) {
            long long cur = rem.at(w) - m * v;
            if (cur < 0)
                throw std::invalid_argument("decompose_by_stripping: remainder negative (input not Weyl-invariant)");
            rem.add(w, -m * v);
        }
        dec.terms[hw] = m;
    }
    return dec;
}

Decomposition decompose_by_alternating_sum(const RootSystem& rs, const FormalCharacter& ch) {
    if (!ch.genuine()) throw std::invalid_argument("decompose: negative entries");
    std::vector<std::pair<Weight, long long>> items(ch.entries().begin(), ch.entries().end());
    const Weight& rho = rs.rho();

#ifdef _OPENMP
    int nt = omp_get_max_threads();
#else
    int nt = 1;
#endif
    std::vector<std::map<Weight, long long>> partial(nt);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(items.size()); ++i) {
#ifdef _OPENMP
        auto& mine = partial[omp_get_thread_num()];
#else
        auto& mine = partial[0];
#endif
        WeylChamberResult r = rs.make_dominant(items[i].first + rho);
        if (r.singular) continue;
        mine[r.dominant - rho] += r.sign * items[i].second;
    }
    Decomposition dec;
    for (const auto& part : partial)
        for (const auto& [w, v] : part) {
            auto [it, fresh] = dec.terms.emplace(w, v);
            if (!fresh && (it->second += v) == 0) dec.terms.erase(it);
        }
    for (auto it = dec.terms.begin(); it != dec.terms.end();) {
        if (it->second == 0) it = dec.terms.erase(it);
        else if (it->second < 0)
            throw std::invalid_argument("decompose: negative multiplicity (input not Weyl-invariant)");
        else ++it;
    }
    return dec;
}

FormalCharacter restrict_character(const FormalCharacter& ch, const LatticeMap& map) {
    if (ch.rank() != map.src_rank) throw std::invalid_argument("restrict_character: rank mismatch");
    FormalCharacter out(map.target_rank());
    for (const auto& [w, v] : ch.entries()) out.add(map.apply(w), v);
    return out;
}

long long decomposition_dimension(const RootSystem& rs, const Decomposition& d) {
    long long s = 0;
    for (const auto& [w, m] : d.terms) s += m * rs.weyl_dim(w);
    return s;
}

} // namespace hdsb
