#pragma once

#include "hdsbranch/branching.hpp"

namespace hdsb {

// Restricted root system Sigma(a) in the combinatorial Cayley picture: a
// restricted weight is an integer vector of coefficients over {gamma_i / 2}.
struct RestrictedRootSystem {
    enum class Type { C, BC };
    Type type = Type::C;
    std::size_t r = 0;
    std::map<std::vector<long long>, long long> roots; // closed under negation
    std::vector<std::vector<long long>> basis;         // signature lattice basis

    bool is_type_bc() const { return type == Type::BC; }
    // basis coordinates of a lattice vector; throws outside the lattice
    std::vector<long long> basis_coords(const std::vector<long long>& c) const;
};

// Multiplicative sign assignment on the restricted root lattice.
struct Signature {
    std::vector<int> on_basis; // +-1 per basis element

    int evaluate(const RestrictedRootSystem& rrs, const std::vector<long long>& c) const;
    bool is_identity() const {
        for (int s : on_basis) if (s != 1) return false;
        return true;
    }
};

struct GammaPartition {
    std::vector<std::size_t> gamma1, gamma2; // cascade indices (0-based)
    std::size_t r1() const { return gamma1.size(); }
};

// Z' = -sum of the Gamma_1 coroots; alpha(Z') is read off restriction vectors.
struct ZPrimeFunctional {
    std::vector<std::size_t> gamma1; // indices with coefficient -1

    long long value(const std::vector<long long>& restriction) const {
        long long v = 0;
        for (std::size_t i : gamma1) v -= restriction[i];
        return v;
    }
};

RestrictedRootSystem restricted_roots(const MooreData& moore, std::size_t r);

std::vector<Signature> enumerate_signatures(const RestrictedRootSystem& rrs);

// epsilon(gamma_i) = +1 for every cascade root
bool holomorphic_p(const Signature& sig, const RestrictedRootSystem& rrs);

// C-type rule: gamma_i joins Gamma_1 iff eps((gamma_1 + gamma_i)/2) = +1.
// Applied literally this evaluates eps(gamma_1) at i = 1, which is +1 for
// every holomorphic signature, so gamma_1 always lands in Gamma_1.
// BC-type rule: gamma_i joins Gamma_1 iff eps(gamma_i / 2) = -1.
GammaPartition gamma_partition(const Signature& sig, const RestrictedRootSystem& rrs);

CascadeResult reorder_to_good(const CascadeResult& cas, const GammaPartition& part);

ZPrimeFunctional z_prime(const GammaPartition& part);

// Split the compact positives by alpha(Z'): value 1 is Delta^+(k^{-theta_eps}),
// value 0 is the positive part of Delta(k^{theta_eps}); any other value means
// the good-ordering assumption is violated.
std::pair<std::vector<Weight>, std::vector<Weight>>
classify_compact_roots(const ZPrimeFunctional& zp, const MooreData& moore);

// Everything family_equal_check and the index-set identity need, derived from
// an equal-rank base pair and a holomorphic signature.
struct EpsilonContext {
    HermitianPair base;
    CascadeResult cascade; // canonical order of the base pair
    MooreData moore;
    RestrictedRootSystem rrs;
    Signature sig;
    GammaPartition partition;
    CascadeResult good_cascade;
    ZPrimeFunctional zp;
    std::vector<Weight> plus_set; // Delta^+(k^{-tau tau_eps})
    std::vector<Weight> zero_set; // positive part of Delta(k^{tau tau_eps})
    HermitianPair twisted;        // the tau_epsilon pair
    RootSystem k_sub;             // zero_set subsystem, realizes W_{K cap H}
};

EpsilonContext make_epsilon_context(const HermitianPair& base, const Signature& sig);

// Flip the tau-split of an equal-rank pair by epsilon on each restriction
// class; the identity signature returns the input pair.
HermitianPair tau_epsilon_pair(const HermitianPair& base, const Signature& sig);

struct IndexEntry {
    Weight nu;
    long long nu_mult = 0;
    int sign = 1;
    Weight image;      // sigma(lambda + nu + rho_K)
    Weight cone_point; // image - rho_K

    friend bool operator<(const IndexEntry& a, const IndexEntry& b) {
        if (a.nu != b.nu) return a.nu < b.nu;
        return a.image < b.image;
    }
    friend bool operator==(const IndexEntry& a, const IndexEntry& b) {
        return a.nu == b.nu && a.nu_mult == b.nu_mult && a.sign == b.sign && a.image == b.image;
    }
};

struct IndexSets {
    std::vector<IndexEntry> I_K, I_KH;
    bool equal() const { return I_K == I_KH; }
    long long signed_sum_K() const;
    long long signed_sum_KH() const;
};

// The signed Weyl-chamber bookkeeping sets whose equality gives the
// epsilon-family multiplicity identity.
IndexSets index_sets(const EpsilonContext& ctx, const Weight& lam,
                     const FormalCharacter& nu_support);

struct FamilyCheckReport {
    std::vector<Weight> compared_keys;
    std::vector<Weight> differing_keys;
    std::map<Weight, std::pair<long long, long long>> values; // key -> (m_A, m_B)
    bool index_sets_equal = true;
};

// Branch hw through the base pair and its epsilon twist, compare entries at
// every key satisfying the dominance condition, and verify the index-set
// identity on the same grid.  dominance_margin < 0 means the default margin
// (the coordinate spread of the nu-support); the explicit per-key condition
// is always applied.
FamilyCheckReport family_equal_check(const HermitianPair& base, const Signature& sig,
                                     const Weight& hw, int max_degree,
                                     long long dominance_margin = -1);

} // namespace hdsb
