#pragma once

#include <vector>

#include "hdsbranch/character.hpp"

namespace hdsb {

struct SmithResult {
    std::vector<long long> divisors;             // diagonal of D, d1 | d2 | ...
    std::vector<std::vector<long long>> V;       // unimodular, U*A*V = D
};

// Smith normal form of an integer matrix; only the right transform V is
// tracked (it carries the coordinate change on the character lattice).
SmithResult smith_normal_form(std::vector<std::vector<long long>> A);

// Quotient map Z^n -> Z^n / <rows of A>, as a LatticeMap on doubled
// coordinates: free coordinates first, then one finite coordinate per
// nontrivial elementary divisor.  Rows of A are given undoubled.
LatticeMap lattice_quotient_map(std::size_t n, const std::vector<std::vector<long long>>& rows);

} // namespace hdsb
