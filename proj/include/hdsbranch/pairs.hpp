#pragma once

#include <map>
#include <string>
#include <vector>

#include "hdsbranch/hermitian.hpp"

namespace hdsb {

// One side of a holomorphic symmetric pair (g, g^tau), everything expressed
// in t^tau coordinates (equal to t coordinates for equal-rank pairs).
// p-splits are weight multisets of p_+ restricted to t^tau.
struct HermitianPair {
    std::string label;
    HermitianDatum g;
    bool equal_rank = true;
    RootSystem k_tau;
    std::vector<Weight> p_plus_tau;
    std::vector<Weight> p_plus_minus_tau;
    LatticeMap restriction; // t -> t^tau

    // derived once at construction
    CascadeResult cascade; // minimum-root order, factors of g^{tau theta} blocked
    LSubgroupDatum l_datum; // L = Z_{K cap H}(a), m = real rank

    std::size_t target_rank() const { return k_tau.ambient_rank(); }
    KhsCone cone() const { return khs_cone(cascade, cascade.gammas.size()); }

    void finalize(); // derive cascade and L-data, check the pair invariants
};

class Catalog {
public:
    static const Catalog& builtin();
    static Catalog parse(const std::string& text);
    static Catalog load_file(const std::string& path);

    std::vector<std::string> g_labels() const;
    std::vector<std::string> pair_labels() const; // includes the implicit :k pairs

    const HermitianDatum& datum(const std::string& label) const;
    HermitianPair pair(const std::string& label) const;

private:
    std::map<std::string, HermitianDatum> data_;
    struct PairSpec {
        std::string label, g;
        std::string kind; // "k", "delta", "explicit"
        std::string delta;
        int twist = 1;
        std::size_t trank = 0;
        std::vector<std::vector<long long>> rest; // undoubled rows; empty = identity
        std::vector<Weight> ktau, ptau, pmtau;    // doubled on load
    };
    std::map<std::string, PairSpec> pairs_;

    HermitianPair build(const PairSpec& spec) const;
};

HermitianDatum make_hermitian_datum(const std::string& label, const std::string& family,
                                    const std::map<std::string, long long>& params);

} // namespace hdsb
