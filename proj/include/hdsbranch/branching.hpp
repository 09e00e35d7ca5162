#pragma once

#include <optional>

#include "hdsbranch/pairs.hpp"

namespace hdsb {

// Graded branching table of a holomorphic discrete series with minimal
// K-type hw: entry (d, w) is the multiplicity of the lowest K cap H-type w
// inside S^d(p_-^{-tau}) tensor H^{p_+}, decomposed over k^tau.
struct MultiplicityTable {
    std::map<std::pair<int, Weight>, long long> entries;
    int degree_bound = 0;
    Weight lambda;
    long long ktype_dim = 0; // dim H^{p_+}, the uniform bound

    long long at(int d, const Weight& w) const {
        auto it = entries.find({d, w});
        return it == entries.end() ? 0 : it->second;
    }
    // total multiplicity of w across degrees (each w occurs in one degree)
    std::map<Weight, long long> by_weight() const;
};

struct StabilityReport {
    bool stabilized = false;
    std::vector<long long> lambda0_coeffs; // cone coordinates of lambda_0
    Weight lambda0;
    std::map<Weight, long long> stable_values; // keyed by restricted class
    int window_first = 0, window_last = 0;
};

MultiplicityTable hds_branch(const HermitianPair& pair, const Weight& hw, int max_degree);

// eq-style cone monotonicity: m(key) <= m(key + generator) on in-window pairs
bool monotonicity_check(const MultiplicityTable& table, const KhsCone& cone);

// Smallest cone shift (degree, then lexicographic) after which the table is
// constant along every cone generator inside the window; needs two shells of
// headroom to say anything.
StabilityReport stability_scan(const MultiplicityTable& table, const KhsCone& cone,
                               const LatticeMap& residue_map);

// L-decomposition of the minimal K-type: B_{x_0}-character -> multiplicity.
std::map<Weight, long long> isotropy_multiplicity(const HermitianPair& pair, const Weight& hw);

long long sup_multiplicity(const MultiplicityTable& table);

struct MfReport {
    bool multiplicity_free = false;
    long long sup_table = 0, sup_isotropy = 0;
    bool stabilized = false;
};

// Both computation paths of the multiplicity-freeness criterion; a path
// disagreement inside a stabilized window throws cross_check_error.
MfReport multiplicity_free_check(const HermitianPair& pair, const Weight& hw, int max_degree);

struct StableComparison {
    MultiplicityTable table;
    StabilityReport report;
    std::map<Weight, long long> isotropy;
    bool values_match = false;
};
StableComparison stable_comparison(const HermitianPair& pair, const Weight& hw, int max_degree);

namespace reference {
MultiplicityTable hds_branch(const HermitianPair& pair, const Weight& hw, int max_degree);
}

} // namespace hdsb
