#include "hdsbranch/smith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hdsb {

namespace {

void swap_cols(std::vector<std::vector<long long>>& M, std::size_t i, std::size_t j) {
    for (auto& row : M) std::swap(row[i], row[j]);
}
// col j += k * col i
void add_col(std::vector<std::vector<long long>>& M, std::size_t i, std::size_t j, long long k) {
    for (auto& row : M) row[j] += k * row[i];
}
void negate_col(std::vector<std::vector<long long>>& M, std::size_t i) {
    for (auto& row : M) row[i] = -row[i];
}

} // namespace

SmithResult smith_normal_form(std::vector<std::vector<long long>> A) {
    std::size_t m = A.size();
    std::size_t n = m ? A[0].size() : 0;
    SmithResult res;
    res.V.assign(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) res.V[i][i] = 1;
    if (m == 0 || n == 0) return res;

    std::size_t t = 0;
    while (t < m && t < n) {
        // find a nonzero pivot in the remaining block
        std::size_t pr = t, pc = t;
        bool found = false;
        for (std::size_t r = t; r < m && !found; ++r)
            for (std::size_t c = t; c < n && !found; ++c)
                if (A[r][c] != 0) { pr = r; pc = c; found = true; }
        if (!found) break;
        std::swap(A[pr], A[t]);
        if (pc != t) { swap_cols(A, pc, t); swap_cols(res.V, pc, t); }

        // euclid out the pivot row and column
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t r = t + 1; r < m; ++r) {
                if (A[r][t] == 0) continue;
                long long q = A[r][t] / A[t][t];
                for (std::size_t c = t; c < n; ++c) A[r][c] -= q * A[t][c];
                if (A[r][t] != 0) { std::swap(A[r], A[t]); clean = false; }
            }
            for (std::size_t c = t + 1; c < n; ++c) {
                if (A[t][c] == 0) continue;
                long long q = A[t][c] / A[t][t];
                add_col(A, t, c, -q);
                add_col(res.V, t, c, -q);
                if (A[t][c] != 0) {
                    swap_cols(A, c, t);
                    swap_cols(res.V, c, t);
                    clean = false;
                }
            }
        }
        if (A[t][t] < 0) { negate_col(A, t); negate_col(res.V, t); }

        // divisibility: fold any non-multiple entry into the pivot block
        bool redo = false;
        for (std::size_t r = t + 1; r < m && !redo; ++r)
            for (std::size_t c = t + 1; c < n && !redo; ++c)
                if (A[r][c] % A[t][t] != 0) {
                    // add column c to column t, which re-opens the pivot
                    add_col(A, c, t, 1);
                    add_col(res.V, c, t, 1);
                    redo = true;
                }
        if (!redo) ++t;
    }
    for (std::size_t i = 0; i < std::min(m, n); ++i) res.divisors.push_back(A[i][i]);
    return res;
}

LatticeMap lattice_quotient_map(std::size_t n, const std::vector<std::vector<long long>>& rows) {
    for (const auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("lattice_quotient_map: bad row length");
    if (rows.empty()) return LatticeMap::identity(n);
    SmithResult snf = smith_normal_form(rows);
    // In y = x*V coordinates the row lattice is  +d_i Z e_i,  so the quotient
    // keeps y_i mod d_i (d_i > 1), drops d_i == 1, and keeps y_i free where
    // d_i == 0 or i beyond the divisor list.
    std::vector<std::size_t> free_cols, tor_cols;
    std::vector<long long> moduli;
    for (std::size_t i = 0; i < n; ++i) {
        long long d = i < snf.divisors.size() ? snf.divisors[i] : 0;
        if (d == 0) free_cols.push_back(i);
        else if (d > 1) { tor_cols.push_back(i); moduli.push_back(d); }
    }
    LatticeMap map;
    map.src_rank = n;
    map.torsion_moduli = moduli;
    for (std::size_t i : free_cols) {
        std::vector<long long> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = snf.V[j][i]; // column i of V
        map.rows.push_back(std::move(row));
    }
    for (std::size_t i : tor_cols) {
        std::vector<long long> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = snf.V[j][i];
        map.rows.push_back(std::move(row));
    }
    return map;
}

} // namespace hdsb
