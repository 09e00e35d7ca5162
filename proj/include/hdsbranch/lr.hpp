#pragma once

#include <map>
#include <vector>

#include "hdsbranch/weight.hpp"

namespace hdsb {

using Partition = std::vector<long long>; // weakly decreasing, nonnegative

// c^lam_{mu nu} by enumeration of Littlewood-Richardson skew tableaux of
// shape lam/mu and content nu.
long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

// V_hw of GL(m+n) restricted to GL(m) x GL(n); keys are the concatenated
// (mu, nu) highest weights.  hw may have negative entries (determinant
// twists are shifted through).
std::map<Weight, long long> gl_levi_branch(const std::vector<long long>& hw, int m, int n);

// The flag-variety counterexample: C_H for Ind_P^G(W) with W = S^2(L^2 C^4)
// mod L^4 C^4 over GL(8) | GL(4) x GL(4), against C_L(W) for the
// two-dimensional stabilizer torus.  Returns (1, 2).
std::pair<long long, long long> example_52_check();

// weight multiplicities of W under the stabilizer torus of the example
std::map<Weight, long long> example_52_l_classes();

} // namespace hdsb
