#include "hdsbranch/branching.hpp"

#include <algorithm>

namespace hdsb {

std::map<Weight, long long> MultiplicityTable::by_weight() const {
    std::map<Weight, long long> out;
    for (const auto& [key, v] : entries) out[key.second] += v;
    return out;
}

namespace {

// shared by the parallel and reference paths
struct BranchSetup {
    FormalCharacter ktype_restricted; // ch(V_hw) pushed to t^tau
    std::vector<FormalCharacter> sym; // S^0..S^D of p_-^{-tau}
    long long dim_ktype = 0;
};

BranchSetup branch_setup(const HermitianPair& pair, const Weight& hw, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("hds_branch: negative degree bound");
    RootSystem kc = pair.g.compact_system();
    if (!kc.dominant_p(hw))
        throw std::invalid_argument("hds_branch: highest weight not dominant for the compact system");
    BranchSetup s;
    FormalCharacter chV = irreducible_character(kc, hw);
    s.dim_ktype = chV.total_mass();
    s.ktype_restricted = restrict_character(chV, pair.restriction);
    FormalCharacter gens(pair.target_rank());
    for (const auto& b : pair.p_plus_minus_tau) gens.add(-b, 1);
    s.sym = symmetric_algebra_character(gens, max_degree);
    return s;
}

void check_degree(const HermitianPair& pair, const MultiplicityTable& table,
                  const BranchSetup& s, int d, const Decomposition& dec) {
    long long dim = decomposition_dimension(pair.k_tau, dec);
    long long expect = s.sym[d].total_mass() * s.dim_ktype;
    if (dim != expect)
        throw cross_check_error("hds_branch: dimension conservation failed at degree " + std::to_string(d));
    for (const auto& [w, m] : dec.terms)
        if (m > table.ktype_dim)
            throw cross_check_error("hds_branch: entry exceeds dim(H^{p_+}) at degree " + std::to_string(d));
}

} // namespace

MultiplicityTable hds_branch(const HermitianPair& pair, const Weight& hw, int max_degree) {
    BranchSetup s = branch_setup(pair, hw, max_degree);
    MultiplicityTable table;
    table.degree_bound = max_degree;
    table.lambda = hw;
    table.ktype_dim = s.dim_ktype;

    std::vector<Decomposition> per_degree(max_degree + 1);
    std::exception_ptr err = nullptr;
    // degrees are independent; each one is a tensor + alternating-sum pass
#pragma omp parallel for schedule(dynamic)
    for (int d = 0; d <= max_degree; ++d) {
        try {
            FormalCharacter chd = reference::tensor_character(s.ktype_restricted, s.sym[d]);
            per_degree[d] = reference::decompose_by_alternating_sum(pair.k_tau, chd);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    for (int d = 0; d <= max_degree; ++d) {
        check_degree(pair, table, s, d, per_degree[d]);
        for (const auto& [w, m] : per_degree[d].terms) table.entries[{d, w}] = m;
    }
    return table;
}

namespace reference {

MultiplicityTable hds_branch(const HermitianPair& pair, const Weight& hw, int max_degree) {
    BranchSetup s = branch_setup(pair, hw, max_degree);
    MultiplicityTable table;
    table.degree_bound = max_degree;
    table.lambda = hw;
    table.ktype_dim = s.dim_ktype;
    for (int d = 0; d <= max_degree; ++d) {
        FormalCharacter chd = reference::tensor_character(s.ktype_restricted, s.sym[d]);
        Decomposition dec = reference::decompose_by_alternating_sum(pair.k_tau, chd);
        check_degree(pair, table, s, d, dec);
        for (const auto& [w, m] : dec.terms) table.entries[{d, w}] = m;
    }
    return table;
}

} // namespace reference

bool monotonicity_check(const MultiplicityTable& table, const KhsCone& cone) {
    auto gens = cone.generators();
    for (const auto& [key, m] : table.entries) {
        for (std::size_t k = 0; k < gens.size(); ++k) {
            int d2 = key.first + static_cast<int>(k) + 1;
            if (d2 > table.degree_bound) continue;
            if (m > table.at(d2, key.second + gens[k])) return false;
        }
    }
    return true;
}

StabilityReport stability_scan(const MultiplicityTable& table, const KhsCone& cone,
                               const LatticeMap& residue_map) {
    StabilityReport rep;
    rep.window_first = 0;
    rep.window_last = table.degree_bound;
    auto gens = cone.generators();

    auto candidates = cone.enumerate(table.degree_bound);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const std::vector<long long>& a, const std::vector<long long>& b) {
                         long long sa = 0, sb = 0;
                         for (long long x : a) sa += x;
                         for (long long x : b) sb += x;
                         if (sa != sb) return sa < sb;
                         return a < b;
                     });

    for (const auto& c : candidates) {
        long long shift_deg = 0;
        for (long long x : c) shift_deg += x;
        if (table.degree_bound - shift_deg < 2) break; // needs two shells of evidence
        Weight lam0 = cone.point(c);

        bool ok = true;
        std::map<Weight, long long> values;
        for (const auto& [key, m] : table.entries) {
            if (m == 0) continue;
            int dA = key.first + static_cast<int>(shift_deg);
            Weight wA = key.second + lam0;
            long long vA = dA <= table.degree_bound ? table.at(dA, wA) : -1;
            for (std::size_t k = 0; k < gens.size() && ok; ++k) {
                int dB = dA + static_cast<int>(k) + 1;
                if (dA > table.degree_bound || dB > table.degree_bound) continue;
                if (vA != table.at(dB, wA + gens[k])) ok = false;
            }
            if (!ok) break;
            if (dA <= table.degree_bound) {
                Weight cls = residue_map.apply(wA);
                auto [it, fresh] = values.emplace(cls, vA);
                if (!fresh && it->second != vA) { ok = false; break; }
            }
        }
        if (ok) {
            rep.stabilized = true;
            rep.lambda0_coeffs = c;
            rep.lambda0 = lam0;
            rep.stable_values = std::move(values);
            return rep;
        }
    }
    return rep;
}

std::map<Weight, long long> isotropy_multiplicity(const HermitianPair& pair, const Weight& hw) {
    RootSystem kc = pair.g.compact_system();
    if (!kc.dominant_p(hw))
        throw std::invalid_argument("isotropy_multiplicity: non-dominant highest weight");
    FormalCharacter chV = irreducible_character(kc, hw);
    LatticeMap full = pair.l_datum.restriction.compose(pair.restriction);
    FormalCharacter chL = restrict_character(chV, full);

    // L-roots in quotient coordinates; their finite tags must vanish
    std::vector<Weight> lroots;
    for (const auto& a : pair.l_datum.root_subsystem.positive_roots()) {
        Weight img = pair.l_datum.restriction.apply(a);
        for (std::size_t k = full.free_rank(); k < full.target_rank(); ++k)
            if (img[k] != 0) throw std::logic_error("isotropy_multiplicity: L-root with nonzero torsion tag");
        lroots.push_back(img);
    }
    RootSystem lsys = RootSystem::from_positive_roots(full.target_rank(), lroots);
    Decomposition dec = decompose_by_alternating_sum(lsys, chL);
    return dec.terms;
}

long long sup_multiplicity(const MultiplicityTable& table) {
    long long s = 0;
    for (const auto& [k, m] : table.entries) s = std::max(s, m);
    return s;
}

StableComparison stable_comparison(const HermitianPair& pair, const Weight& hw, int max_degree) {
    StableComparison out;
    out.table = hds_branch(pair, hw, max_degree);
    out.report = stability_scan(out.table, pair.cone(), pair.l_datum.restriction);
    out.isotropy = isotropy_multiplicity(pair, hw);
    out.values_match = out.report.stabilized && out.report.stable_values == out.isotropy;
    return out;
}

MfReport multiplicity_free_check(const HermitianPair& pair, const Weight& hw, int max_degree) {
    StableComparison cmp = stable_comparison(pair, hw, max_degree);
    MfReport rep;
    rep.sup_table = sup_multiplicity(cmp.table);
    for (const auto& [w, m] : cmp.isotropy) rep.sup_isotropy = std::max(rep.sup_isotropy, m);
    rep.stabilized = cmp.report.stabilized;
    if (rep.stabilized && rep.sup_table != rep.sup_isotropy)
        throw cross_check_error("multiplicity_free_check: C_H(H) != C_L(H^{p_+}) in a stabilized window");
    if (rep.stabilized && !cmp.values_match)
        throw cross_check_error("multiplicity_free_check: stable values disagree with the isotropy representation");
    rep.multiplicity_free = rep.sup_table == 1 && rep.sup_isotropy == 1;
    return rep;
}

} // namespace hdsb
