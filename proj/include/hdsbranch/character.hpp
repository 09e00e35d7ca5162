#pragma once

#include <map>
#include <vector>

#include "hdsbranch/rootsystem.hpp"
#include "hdsbranch/weight.hpp"

namespace hdsb {

// Raised when an internally re-verified identity fails to hold; the CLI maps
// this to exit code 2 so CI can tell bugs from bad input.
struct cross_check_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finitely supported map Weight -> integer.  Entries may be negative while a
// value is used as a virtual character; decomposition preconditions reject
// negative entries.
class FormalCharacter {
public:
    using Map = std::map<Weight, long long>;

    FormalCharacter() = default;
    explicit FormalCharacter(std::size_t rank) : rank_(rank) {}

    std::size_t rank() const { return rank_; }
    const Map& entries() const { return m_; }
    bool empty() const { return m_.empty(); }
    std::size_t support_size() const { return m_.size(); }

    long long at(const Weight& w) const {
        auto it = m_.find(w);
        return it == m_.end() ? 0 : it->second;
    }
    void add(const Weight& w, long long v) {
        if (w.rank() != rank_) throw std::invalid_argument("FormalCharacter: rank mismatch");
        if (v == 0) return;
        auto [it, fresh] = m_.emplace(w, v);
        if (!fresh && (it->second += v) == 0) m_.erase(it);
    }

    long long total_mass() const {
        long long s = 0;
        for (const auto& [w, v] : m_) s += v;
        return s;
    }
    bool genuine() const {
        for (const auto& [w, v] : m_) if (v < 0) return false;
        return true;
    }
    bool weyl_invariant(const RootSystem& rs) const;

    friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
        return a.rank_ == b.rank_ && a.m_ == b.m_;
    }

private:
    std::size_t rank_ = 0;
    Map m_;
};

// Multiplicities of irreducibles, keyed by dominant highest weight.
struct Decomposition {
    std::map<Weight, long long> terms;

    long long at(const Weight& w) const {
        auto it = terms.find(w);
        return it == terms.end() ? 0 : it->second;
    }
    friend bool operator==(const Decomposition& a, const Decomposition& b) {
        return a.terms == b.terms;
    }
};

// Integer-linear map between doubled weight lattices.  The last
// torsion_moduli.size() target coordinates are finite: a stored target value
// there is reduced modulo 2*modulus (the factor 2 is the doubling).
struct LatticeMap {
    std::size_t src_rank = 0;
    std::vector<std::vector<long long>> rows; // target coords as functionals of source
    std::vector<long long> torsion_moduli;    // aligned to the trailing rows

    std::size_t target_rank() const { return rows.size(); }
    std::size_t free_rank() const { return rows.size() - torsion_moduli.size(); }

    static LatticeMap identity(std::size_t n);

    Weight apply(const Weight& w) const;
    // this o inner; inner must be torsion-free.
    LatticeMap compose(const LatticeMap& inner) const;
};

FormalCharacter delta_character(std::size_t rank); // {0 -> 1}

// Weight multiplicities of the irreducible with highest weight hw, by
// Freudenthal recursion down the weight saturation.
FormalCharacter irreducible_character(const RootSystem& rs, const Weight& hw);

// Convolution of supports.  OpenMP over the larger factor.
FormalCharacter tensor_character(const FormalCharacter& a, const FormalCharacter& b);

// Characters of S^0..S^max_degree of the span of `generators` (a genuine
// character), by the generating-function recursion over the generator list.
std::vector<FormalCharacter> symmetric_algebra_character(const FormalCharacter& generators,
                                                         int max_degree);

// Oracle path: repeatedly strip the lexicographically maximal dominant
// support weight.  Deterministic; errors if a remainder goes negative.
Decomposition decompose_by_stripping(const RootSystem& rs, const FormalCharacter& ch);

// Production path: Weyl character inversion via signed dominant
// representatives of nu + rho.  Equals stripping on every valid input.
Decomposition decompose_by_alternating_sum(const RootSystem& rs, const FormalCharacter& ch);

// Pushforward of entries along a lattice map; equal images accumulate.
FormalCharacter restrict_character(const FormalCharacter& ch, const LatticeMap& map);

long long decomposition_dimension(const RootSystem& rs, const Decomposition& d);

// Plain serial twins of the OpenMP kernels, kept as the reference
// implementations for the equivalence tests and the benchmark.
namespace reference {
FormalCharacter tensor_character(const FormalCharacter& a, const FormalCharacter& b);
Decomposition decompose_by_alternating_sum(const RootSystem& rs, const FormalCharacter& ch);
} // namespace reference

} // namespace hdsb
