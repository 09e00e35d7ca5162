#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hdsbranch/weight.hpp"

namespace hdsb {

enum class FactorType { A, B, C, D, Torus };

struct Factor {
    FactorType type;
    int rank;
};

struct WeylChamberResult {
    Weight dominant;
    int sign = 1;          // parity of the reflection word
    bool singular = false; // some simple pairing vanishes on the result
};

// Classical root datum in orthonormal coordinates, doubled convention.
// Products of factors concatenate coordinates; Torus factors contribute
// coordinates with no roots.  A_n is realized inside n+1 coordinates.
class RootSystem {
public:
    static RootSystem build(const std::vector<Factor>& factors);
    // Subsystem of an ambient coordinate space given by its positive roots;
    // simple roots are the positives that are not sums of two positives.
    static RootSystem from_positive_roots(std::size_t ambient_rank,
                                          std::vector<Weight> positives);

    std::size_t ambient_rank() const { return ambient_rank_; }
    const std::vector<Factor>& factors() const { return factors_; }
    const std::vector<Weight>& positive_roots() const { return positive_; }
    const std::vector<Weight>& simple_roots() const { return simple_; }
    const Weight& rho() const { return rho_; }
    bool has_roots() const { return !positive_.empty(); }

    bool is_root(const Weight& w) const;

    // s_alpha(w) = w - <w, alpha~>(alpha), exact; throws if the result would
    // leave the doubled lattice.
    Weight reflect(const Weight& w, const Weight& alpha) const;

    bool dominant_p(const Weight& w) const;
    WeylChamberResult make_dominant(const Weight& w) const;

    // Full Weyl orbit of w (simple-reflection closure).
    std::vector<Weight> orbit(const Weight& w) const;

    // Weyl dimension formula for a dominant highest weight.
    long long weyl_dim(const Weight& hw) const;

    // lambda - mu as nonnegative integer combination of simple roots, if any.
    std::optional<std::vector<long long>> simple_root_coords(const Weight& diff) const;

private:
    std::size_t ambient_rank_ = 0;
    std::vector<Factor> factors_;
    std::vector<Weight> positive_;
    std::vector<Weight> simple_;
    Weight rho_;
    std::vector<std::vector<Rat>> solve_; // (Gram^-1 * A^T), maps diff -> simple coords

    void finish(); // sort positives, derive simples, rho, validate
};

RootSystem build_root_system(const std::vector<Factor>& factors);

} // namespace hdsb
