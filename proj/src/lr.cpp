#include "hdsbranch/lr.hpp"

#include <algorithm>
#include <numeric>
#include <array>
#include <stdexcept>

namespace hdsb {

namespace {

bool weakly_decreasing(const Partition& p) {
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] > p[i - 1]) return false;
    return true;
}

long long psum(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0LL); }

bool contains(const Partition& outer, const Partition& inner) {
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > (i < outer.size() ? outer[i] : 0)) return false;
    return true;
}

// Backtracking over the skew cells in reading order (rows top to bottom,
// right to left within a row), with the lattice condition kept as running
// content counts.
struct LrCounter {
    const Partition& lam;
    Partition mu;
    const Partition& nu;
    std::vector<std::vector<long long>> fill; // 0 = empty
    std::vector<long long> count;
    long long total = 0;

    LrCounter(const Partition& l, Partition m, const Partition& n) : lam(l), mu(std::move(m)), nu(n) {
        mu.resize(lam.size(), 0);
        fill.resize(lam.size());
        for (std::size_t r = 0; r < lam.size(); ++r) fill[r].assign(lam[r], 0);
        count.assign(nu.size() + 1, 0);
    }

    void rec(std::size_t r, long long c) {
        while (r < lam.size() && c < mu[r]) { ++r, c = r < lam.size() ? lam[r] - 1 : 0; }
        if (r == lam.size()) {
            for (std::size_t v = 0; v < nu.size(); ++v)
                if (count[v + 1] != nu[v]) return;
            ++total;
            return;
        }
        std::size_t nr = r;
        long long nc = c - 1;
        if (nc < mu[r]) { nr = r + 1; nc = nr < lam.size() ? lam[nr] - 1 : 0; }
        for (long long v = 1; v <= static_cast<long long>(nu.size()); ++v) {
            if (count[v] >= nu[v - 1]) continue;                // content bound
            if (v > 1 && count[v] + 1 > count[v - 1]) continue; // lattice word
            if (c + 1 < lam[r] && v > fill[r][c + 1]) continue; // weak rows (right neighbor known)
            if (r > 0 && c < lam[r - 1] && mu[r - 1] <= c && fill[r - 1][c] >= v) continue; // strict cols
            fill[r][c] = v;
            ++count[v];
            rec(nr, nc);
            --count[v];
            fill[r][c] = 0;
        }
    }
};

} // namespace

long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (!weakly_decreasing(lam) || !weakly_decreasing(mu) || !weakly_decreasing(nu))
        throw std::invalid_argument("lr_coefficient: malformed partition");
    for (const Partition* p : {&lam, &mu, &nu})
        for (long long x : *p)
            if (x < 0) throw std::invalid_argument("lr_coefficient: negative part");
    if (!contains(lam, mu)) return 0;
    if (psum(mu) + psum(nu) != psum(lam)) return 0;
    if (psum(nu) == 0) return 1; // empty complement
    LrCounter counter(lam, mu, nu);
    counter.rec(0, lam.empty() ? 0 : lam[0] - 1);
    return counter.total;
}

std::map<Weight, long long> gl_levi_branch(const std::vector<long long>& hw, int m, int n) {
    if (static_cast<int>(hw.size()) != m + n)
        throw std::invalid_argument("gl_levi_branch: highest weight length mismatch");
    if (!weakly_decreasing(hw)) throw std::invalid_argument("gl_levi_branch: non-dominant weight");
    long long shift = 0;
    for (long long x : hw) shift = std::min(shift, x);
    shift = -shift;
    Partition lam(hw.size());
    for (std::size_t i = 0; i < hw.size(); ++i) lam[i] = hw[i] + shift;

    // enumerate partitions mu subseteq lam with at most m rows, nu gets the rest
    std::map<Weight, long long> out;
    std::vector<long long> mu(m, 0);
    auto emit = [&]() {
        Partition muP(mu.begin(), mu.end());
        while (!muP.empty() && muP.back() == 0) muP.pop_back();
        long long rest = psum(lam) - psum(muP);
        if (rest < 0) return;
        // enumerate partitions nu of `rest` with at most n rows and parts <= lam_1
        std::vector<long long> nu(n, 0);
        auto rec_nu = [&](auto&& self, int row, long long remaining, long long cap) -> void {
            if (row == n) {
                if (remaining) return;
                Partition nuP(nu.begin(), nu.end());
                while (!nuP.empty() && nuP.back() == 0) nuP.pop_back();
                long long c = lr_coefficient(lam, muP, nuP);
                if (!c) return;
                std::vector<long long> key(m + n);
                for (int i = 0; i < m; ++i) key[i] = mu[i] - shift;
                for (int i = 0; i < n; ++i) key[m + i] = nu[i] - shift;
                out[Weight::from_plain(key)] += c;
                return;
            }
            for (long long v = std::min(cap, remaining); v >= 0; --v) {
                nu[row] = v;
                self(self, row + 1, remaining - v, v);
            }
            nu[row] = 0;
        };
        rec_nu(rec_nu, 0, rest, lam.empty() ? 0 : lam[0]);
    };
    auto rec_mu = [&](auto&& self, int row, long long cap) -> void {
        if (row == m) { emit(); return; }
        long long top = std::min<long long>(cap, row < static_cast<int>(lam.size()) ? lam[row] : 0);
        for (long long v = top; v >= 0; --v) {
            mu[row] = v;
            self(self, row + 1, v);
        }
        mu[row] = 0;
    };
    rec_mu(rec_mu, 0, lam.empty() ? 0 : lam[0]);
    return out;
}

std::map<Weight, long long> example_52_l_classes() {
    // B_{x_0}-characters here are full torus weights of the first GL(4): the
    // stabilizer torus is {(diag(t), diag(t reversed))}, injective in the
    // first component.  Count the weight multiset of S^2(L^2 C^4) minus the
    // determinant weight.
    std::vector<std::array<int, 4>> wedge;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            std::array<int, 4> w{0, 0, 0, 0};
            w[i] = w[j] = 1;
            wedge.push_back(w);
        }
    std::map<Weight, long long> classes;
    for (std::size_t a = 0; a < wedge.size(); ++a)
        for (std::size_t b = a; b < wedge.size(); ++b) {
            std::vector<long long> m(4);
            for (int k = 0; k < 4; ++k) m[k] = wedge[a][k] + wedge[b][k];
            classes[Weight::from_plain(m)] += 1;
        }
    Weight det = Weight::from_plain({1, 1, 1, 1});
    if (--classes[det] == 0) classes.erase(det);
    return classes;
}

std::pair<long long, long long> example_52_check() {
    std::vector<long long> hw{2, 2, 0, 0, 0, 0, 0, 0};
    long long c_h = 0;
    for (const auto& [w, m] : gl_levi_branch(hw, 4, 4)) c_h = std::max(c_h, m);
    long long c_l = 0;
    for (const auto& [cls, m] : example_52_l_classes()) c_l = std::max(c_l, m);
    return {c_h, c_l};
}

} // namespace hdsb
