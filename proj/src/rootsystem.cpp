#include "hdsbranch/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hdsb {

namespace {

// Append the standard positive system of one simple factor, offset into the
// ambient coordinates.  Positivity agrees with coordinate-lexicographic order.
void emit_factor(FactorType t, int rank, std::size_t offset, std::size_t ambient,
                 std::vector<Weight>& pos) {
    auto pair_root = [&](int i, int j, long long sj) { // e_i + sj*e_j
        Weight w(ambient);
        w[offset + i] = 2;
        w[offset + j] = 2 * sj;
        pos.push_back(w);
    };
    auto single_root = [&](int i, long long c) { // c*e_i
        Weight w(ambient);
        w[offset + i] = 2 * c;
        pos.push_back(w);
    };
    switch (t) {
    case FactorType::A:
        for (int i = 0; i <= rank; ++i)
            for (int j = i + 1; j <= rank; ++j)
                pair_root(i, j, -1);
        break;
    case FactorType::B:
        for (int i = 0; i < rank; ++i) {
            for (int j = i + 1; j < rank; ++j) {
                pair_root(i, j, -1);
                pair_root(i, j, 1);
            }
            single_root(i, 1);
        }
        break;
    case FactorType::C:
        for (int i = 0; i < rank; ++i) {
            for (int j = i + 1; j < rank; ++j) {
                pair_root(i, j, -1);
                pair_root(i, j, 1);
            }
            single_root(i, 2);
        }
        break;
    case FactorType::D:
        for (int i = 0; i < rank; ++i)
            for (int j = i + 1; j < rank; ++j) {
                pair_root(i, j, -1);
                pair_root(i, j, 1);
            }
        break;
    case FactorType::Torus:
        break;
    }
}

} // namespace

RootSystem RootSystem::build(const std::vector<Factor>& factors) {
    RootSystem rs;
    rs.factors_ = factors;
    std::size_t n = 0;
    for (const auto& f : factors) {
        if (f.type != FactorType::Torus && f.rank < 1)
            throw std::invalid_argument("RootSystem: rank must be >= 1 for a simple type");
        if (f.type == FactorType::D && f.rank < 2)
            throw std::invalid_argument("RootSystem: type D needs rank >= 2");
        n += (f.type == FactorType::A) ? f.rank + 1 : f.rank;
    }
    rs.ambient_rank_ = n;
    std::size_t off = 0;
    for (const auto& f : factors) {
        emit_factor(f.type, f.rank, off, n, rs.positive_);
        off += (f.type == FactorType::A) ? f.rank + 1 : f.rank;
    }
    rs.finish();
    return rs;
}

RootSystem RootSystem::from_positive_roots(std::size_t ambient_rank,
                                           std::vector<Weight> positives) {
    RootSystem rs;
    rs.ambient_rank_ = ambient_rank;
    rs.positive_ = std::move(positives);
    rs.finish();
    return rs;
}

void RootSystem::finish() {
    std::sort(positive_.begin(), positive_.end());
    positive_.erase(std::unique(positive_.begin(), positive_.end()), positive_.end());
    for (const auto& a : positive_) {
        if (a.rank() != ambient_rank_) throw std::invalid_argument("RootSystem: root rank mismatch");
        if (a.is_zero()) throw std::invalid_argument("RootSystem: zero root");
    }
    // simple roots: positives that are not the sum of two positives
    std::set<Weight> pos(positive_.begin(), positive_.end());
    for (const auto& a : positive_) {
        bool decomposable = false;
        for (const auto& b : positive_) {
            if (pos.count(a - b) && !(a - b).is_zero() && (a - b) != a) { decomposable = true; break; }
        }
        if (!decomposable) simple_.push_back(a);
    }
    // rho: half the sum of positive roots; sum of stored coords is 4*rho,
    // always even entrywise
    Weight four_rho(ambient_rank_);
    for (const auto& a : positive_) four_rho = four_rho + a;
    rho_ = Weight(ambient_rank_);
    for (std::size_t i = 0; i < ambient_rank_; ++i) {
        if (four_rho[i] % 2 != 0) throw std::logic_error("RootSystem: rho not representable");
        rho_[i] = four_rho[i] / 2;
    }
    // least-squares style exact solver: coords = Gram^-1 * A^T * diff, where A
    // has the simple roots as columns; validity is re-checked by substitution
    std::size_t m = simple_.size();
    if (m > 0) {
        std::vector<std::vector<Rat>> gram(m, std::vector<Rat>(2 * m));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) gram[i][j] = Rat(pairing4(simple_[i], simple_[j]));
            gram[i][m + i] = Rat(1);
        }
        for (std::size_t col = 0; col < m; ++col) {
            std::size_t p = col;
            while (p < m && gram[p][col] == Rat(0)) ++p;
            if (p == m) throw std::logic_error("RootSystem: dependent simple roots");
            std::swap(gram[p], gram[col]);
            Rat inv = Rat(1) / gram[col][col];
            for (std::size_t k = 0; k < 2 * m; ++k) gram[col][k] = gram[col][k] * inv;
            for (std::size_t r = 0; r < m; ++r) {
                if (r == col || gram[r][col] == Rat(0)) continue;
                Rat f = gram[r][col];
                for (std::size_t k = 0; k < 2 * m; ++k) gram[r][k] = gram[r][k] - f * gram[col][k];
            }
        }
        solve_.assign(m, std::vector<Rat>(ambient_rank_));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t c = 0; c < ambient_rank_; ++c) {
                Rat s(0);
                for (std::size_t j = 0; j < m; ++j)
                    s = s + gram[i][m + j] * Rat(simple_[j][c]);
                solve_[i][c] = s;
            }
    }

    // every positive root must be a nonnegative integer combination of simples
    for (const auto& a : positive_)
        if (!simple_root_coords(a))
            throw std::invalid_argument("RootSystem: positive root outside the simple cone");
}

bool RootSystem::is_root(const Weight& w) const {
    return std::binary_search(positive_.begin(), positive_.end(), w) ||
           std::binary_search(positive_.begin(), positive_.end(), -w);
}

Weight RootSystem::reflect(const Weight& w, const Weight& alpha) const {
    long long num = 2 * pairing4(w, alpha); // 2(w,a) scaled by 4
    long long den = pairing4(alpha, alpha); // (a,a) scaled by 4
    Weight r = w;
    for (std::size_t i = 0; i < w.rank(); ++i) {
        long long t = num * alpha[i];
        if (t % den != 0) throw std::logic_error("RootSystem: reflection leaves the lattice");
        r[i] -= t / den;
    }
    return r;
}

bool RootSystem::dominant_p(const Weight& w) const {
    for (const auto& a : simple_)
        if (pairing4(w, a) < 0) return false;
    return true;
}

WeylChamberResult RootSystem::make_dominant(const Weight& w) const {
    WeylChamberResult res;
    res.dominant = w;
    res.sign = 1;
    for (;;) {
        bool moved = false;
        for (const auto& a : simple_) {
            if (pairing4(res.dominant, a) < 0) {
                res.dominant = reflect(res.dominant, a);
                res.sign = -res.sign;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    res.singular = false;
    for (const auto& a : simple_)
        if (pairing4(res.dominant, a) == 0) { res.singular = true; break; }
    return res;
}

std::vector<Weight> RootSystem::orbit(const Weight& w) const {
    std::set<Weight> seen{w};
    std::vector<Weight> frontier{w};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& v : frontier)
            for (const auto& a : simple_) {
                Weight u = reflect(v, a);
                if (seen.insert(u).second) next.push_back(u);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

long long RootSystem::weyl_dim(const Weight& hw) const {
    if (!dominant_p(hw)) throw std::invalid_argument("weyl_dim: non-dominant weight");
    __int128 num = 1, den = 1;
    Weight lr = hw + rho_;
    for (const auto& a : positive_) {
        num *= pairing4(lr, a);
        den *= pairing4(rho_, a);
        // keep the running fraction reduced
        __int128 x = num < 0 ? -num : num, y = den;
        while (y) { __int128 t = x % y; x = y; y = t; }
        if (x > 1) { num /= x; den /= x; }
    }
    if (den != 1 || num <= 0) throw std::logic_error("weyl_dim: non-integral result");
    return static_cast<long long>(num);
}

std::optional<std::vector<long long>> RootSystem::simple_root_coords(const Weight& diff) const {
    std::size_t m = simple_.size();
    if (m == 0) return diff.is_zero() ? std::optional<std::vector<long long>>{std::vector<long long>{}}
                                      : std::nullopt;
    std::vector<long long> coords(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rat s(0);
        for (std::size_t c = 0; c < ambient_rank_; ++c)
            if (diff[c] != 0) s = s + solve_[i][c] * Rat(diff[c]);
        if (!s.is_integer() || s.num() < 0) return std::nullopt;
        coords[i] = s.num();
    }
    // substitute back: diff must lie in the span
    Weight check(ambient_rank_);
    for (std::size_t i = 0; i < m; ++i) check = check + coords[i] * simple_[i];
    if (!(check == diff)) return std::nullopt;
    return coords;
}

RootSystem build_root_system(const std::vector<Factor>& factors) {
    return RootSystem::build(factors);
}

} // namespace hdsb
