#pragma once

#include <map>
#include <string>
#include <vector>

#include "hdsbranch/character.hpp"
#include "hdsbranch/rootsystem.hpp"

namespace hdsb {

// Hermitian symmetric datum for a simple g of Hermitian type: compact /
// noncompact split of the positive system and the characteristic functional
// (value 1 on noncompact positives, 0 on compact roots).
struct HermitianDatum {
    std::string label;
    RootSystem rs;
    std::vector<Weight> compact_pos;
    std::vector<Weight> noncompact_pos;
    std::vector<long long> zvec; // z(w) = <zvec, stored(w)> / (2 * zden)
    long long zden = 1;

    RootSystem compact_system() const {
        return RootSystem::from_positive_roots(rs.ambient_rank(), compact_pos);
    }
    long long z_value(const Weight& root) const;
    void validate() const;
};

struct CascadeResult {
    std::vector<Weight> gammas; // ordered strongly orthogonal roots
    std::size_t real_rank() const { return gammas.size(); }
};

// Restriction data of all roots to the cascade span.  The vector at a root
// lists its coefficients in the basis {gamma_i / 2}; buckets are the derived
// views of Prop.-style coordinates (C_ij keyed by (i,j), 1-based, i < j).
struct MooreData {
    std::map<Weight, std::vector<long long>> compact_restriction;
    std::map<Weight, std::vector<long long>> noncompact_restriction;
    std::map<std::pair<int, int>, std::vector<Weight>> C_ij, P_ij;
    std::map<int, std::vector<Weight>> C_i, P_i;
    std::vector<Weight> C_0, P_0;
};

// Monoid {-sum c_i gamma_i : c_1 >= c_2 >= ... >= c_m >= 0}.
struct KhsCone {
    std::vector<Weight> gammas; // first m cascade roots

    std::size_t m() const { return gammas.size(); }
    // free monoid generators: partial sums -(gamma_1 + ... + gamma_k)
    std::vector<Weight> generators() const;
    Weight point(const std::vector<long long>& c) const;
    // coefficients if w is a cone point, empty otherwise
    std::optional<std::vector<long long>> membership(const Weight& w) const;
    // all cone points with c_1 <= c1_bound
    std::vector<std::vector<long long>> enumerate(long long c1_bound) const;
};

struct OrbitStratum {
    int rank;                 // 0..r
    std::vector<int> closure; // orbit ranks contained in the closure
};

struct LSubgroupDatum {
    RootSystem root_subsystem; // compact roots vanishing on the cascade span
    LatticeMap restriction;    // characters of the stabilizer torus, with torsion
};

// Greedy cascade: repeatedly the order-minimal noncompact positive root
// strongly orthogonal (within the given root set) to everything chosen.
CascadeResult strongly_orthogonal_cascade(const HermitianDatum& hd);
CascadeResult cascade_in(const std::vector<Weight>& noncompact_pos,
                         const std::vector<Weight>& ambient_roots);

MooreData moore_decomposition(const HermitianDatum& hd, const CascadeResult& cas);

// Raw restriction vector of one root over an arbitrary ordered gamma list.
std::vector<long long> cascade_restriction(const Weight& root, const std::vector<Weight>& gammas);

KhsCone khs_cone(const CascadeResult& cas, std::size_t m);

std::vector<OrbitStratum> orbit_stratification(const CascadeResult& cas);

LSubgroupDatum l_subgroup(std::size_t ambient_rank,
                          const std::vector<Weight>& ambient_compact_pos,
                          const CascadeResult& cas, std::size_t m);

} // namespace hdsb
