#include "hdsbranch/pairs.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "catalog_data.hpp"

namespace hdsb {

HermitianDatum make_hermitian_datum(const std::string& label, const std::string& family,
                                    const std::map<std::string, long long>& params) {
    auto get = [&](const char* k) {
        auto it = params.find(k);
        if (it == params.end()) throw std::invalid_argument("catalog: missing param " + std::string(k));
        return it->second;
    };
    HermitianDatum hd;
    hd.label = label;

    auto is_sum_type = [](const Weight& a) {
        // sum-type noncompact in orthonormal coordinates: no negative entry
        for (std::size_t i = 0; i < a.rank(); ++i)
            if (a[i] < 0) return false;
        return true;
    };

    if (family == "sp") {
        long long n = get("n");
        hd.rs = build_root_system({{FactorType::C, static_cast<int>(n)}});
        for (const auto& a : hd.rs.positive_roots())
            (is_sum_type(a) ? hd.noncompact_pos : hd.compact_pos).push_back(a);
        hd.zvec.assign(n, 1);
        hd.zden = 2;
    } else if (family == "su") {
        long long p = get("p"), q = get("q");
        hd.rs = build_root_system({{FactorType::A, static_cast<int>(p + q - 1)}});
        for (const auto& a : hd.rs.positive_roots()) {
            // positive root e_i - e_j, i < j: noncompact iff i <= p < j
            std::size_t i = 0, j = 0;
            for (std::size_t k = 0; k < a.rank(); ++k) {
                if (a[k] > 0) i = k;
                if (a[k] < 0) j = k;
            }
            bool mixed = (i < static_cast<std::size_t>(p)) != (j < static_cast<std::size_t>(p));
            (mixed ? hd.noncompact_pos : hd.compact_pos).push_back(a);
        }
        hd.zvec.assign(p + q, 0);
        for (long long k = 0; k < p + q; ++k) hd.zvec[k] = k < p ? q : -p;
        hd.zden = p + q;
    } else if (family == "so_star") {
        long long n = get("n");
        hd.rs = build_root_system({{FactorType::D, static_cast<int>(n)}});
        for (const auto& a : hd.rs.positive_roots())
            (is_sum_type(a) ? hd.noncompact_pos : hd.compact_pos).push_back(a);
        hd.zvec.assign(n, 1);
        hd.zden = 2;
    } else if (family == "so2") {
        long long n = get("n");
        if (n < 3) throw std::invalid_argument("catalog: so2 needs n >= 3");
        if (n % 2)
            hd.rs = build_root_system({{FactorType::B, static_cast<int>((n + 1) / 2)}});
        else
            hd.rs = build_root_system({{FactorType::D, static_cast<int>(n / 2 + 1)}});
        for (const auto& a : hd.rs.positive_roots())
            (a[0] != 0 ? hd.noncompact_pos : hd.compact_pos).push_back(a);
        hd.zvec.assign(hd.rs.ambient_rank(), 0);
        hd.zvec[0] = 1;
        hd.zden = 1;
    } else {
        throw std::invalid_argument("catalog: unknown family " + family);
    }
    hd.validate();
    return hd;
}

namespace {

std::vector<long long> parse_ints(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
    return out;
}

std::vector<Weight> parse_weight_list(const std::string& s) {
    std::vector<Weight> out;
    if (s == "none") return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';')) out.push_back(Weight::from_plain(parse_ints(tok)));
    return out;
}

} // namespace

Catalog Catalog::parse(const std::string& text) {
    Catalog cat;
    std::stringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::stringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "g") {
            std::string label, family, kv;
            ls >> label >> family;
            std::map<std::string, long long> params;
            while (ls >> kv) {
                auto eq = kv.find('=');
                params[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
            }
            cat.data_.emplace(label, make_hermitian_datum(label, family, params));
        } else if (word == "pair") {
            PairSpec spec;
            ls >> spec.label;
            std::string kv;
            std::map<std::string, std::string> fields;
            while (ls >> kv) {
                auto eq = kv.find('=');
                fields[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            spec.g = fields.at("g");
            spec.kind = fields.at("kind");
            if (spec.kind == "delta") {
                spec.delta = fields.at("delta");
                spec.twist = fields.at("twist") == "-" ? -1 : 1;
            } else if (spec.kind == "explicit") {
                spec.trank = std::stoull(fields.at("trank"));
                if (fields.at("rest") != "id") {
                    std::stringstream rs(fields.at("rest"));
                    std::string row;
                    while (std::getline(rs, row, ';')) spec.rest.push_back(parse_ints(row));
                }
                spec.ktau = parse_weight_list(fields.at("ktau"));
                spec.ptau = parse_weight_list(fields.at("ptau"));
                spec.pmtau = parse_weight_list(fields.at("pmtau"));
            } else {
                throw std::invalid_argument("catalog: unknown pair kind " + spec.kind);
            }
            std::string key = spec.label;
            cat.pairs_.emplace(std::move(key), std::move(spec));
        } else {
            throw std::invalid_argument("catalog: unexpected directive " + word);
        }
    }
    return cat;
}

Catalog Catalog::load_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("catalog: cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

const Catalog& Catalog::builtin() {
    static Catalog cat = parse(builtin_catalog_text());
    return cat;
}

std::vector<std::string> Catalog::g_labels() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : data_) out.push_back(k);
    return out;
}

std::vector<std::string> Catalog::pair_labels() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : data_) out.push_back(k + ":k");
    for (const auto& [k, v] : pairs_) out.push_back(k);
    std::sort(out.begin(), out.end());
    return out;
}

const HermitianDatum& Catalog::datum(const std::string& label) const {
    auto it = data_.find(label);
    if (it == data_.end()) throw std::invalid_argument("catalog: unknown g label " + label);
    return it->second;
}

HermitianPair Catalog::pair(const std::string& label) const {
    auto it = pairs_.find(label);
    if (it != pairs_.end()) return build(it->second);
    auto colon = label.rfind(":k");
    if (colon != std::string::npos && colon + 2 == label.size()) {
        PairSpec spec;
        spec.label = label;
        spec.g = label.substr(0, colon);
        spec.kind = "k";
        if (data_.count(spec.g)) return build(spec);
    }
    throw std::invalid_argument("catalog: unknown pair " + label);
}

HermitianPair Catalog::build(const PairSpec& spec) const {
    HermitianPair pr;
    pr.label = spec.label;
    pr.g = datum(spec.g);
    std::size_t n = pr.g.rs.ambient_rank();

    if (spec.kind == "k") {
        pr.equal_rank = true;
        pr.k_tau = pr.g.compact_system();
        pr.p_plus_minus_tau = pr.g.noncompact_pos;
        pr.restriction = LatticeMap::identity(n);
    } else if (spec.kind == "delta") {
        if (spec.delta.size() != n) throw std::invalid_argument("catalog: delta length mismatch");
        std::vector<int> d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = spec.delta[i] == '-' ? -1 : 1;
        auto sign_of = [&](const Weight& a) {
            int s = 1;
            bool sum_type = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (a[i] < 0) sum_type = false;
                if (a[i] % 2 || std::abs(a[i]) > 4) throw std::logic_error("delta pair: unexpected root shape");
                for (long long k = 0; k < std::abs(a[i]) / 2; ++k) s *= d[i];
            }
            return sum_type ? spec.twist * s : s;
        };
        std::vector<Weight> fixed_compact;
        for (const auto& a : pr.g.compact_pos)
            if (sign_of(a) == 1) fixed_compact.push_back(a);
        for (const auto& b : pr.g.noncompact_pos)
            (sign_of(b) == 1 ? pr.p_plus_tau : pr.p_plus_minus_tau).push_back(b);
        pr.equal_rank = true;
        pr.k_tau = RootSystem::from_positive_roots(n, fixed_compact);
        pr.restriction = LatticeMap::identity(n);
    } else { // explicit
        pr.equal_rank = spec.rest.empty();
        LatticeMap rest;
        if (spec.rest.empty()) {
            if (spec.trank != n) throw std::invalid_argument("catalog: trank mismatch for rest=id");
            rest = LatticeMap::identity(n);
        } else {
            rest.src_rank = n;
            rest.rows = spec.rest;
            if (rest.rows.size() != spec.trank) throw std::invalid_argument("catalog: rest row count");
        }
        pr.restriction = rest;
        pr.k_tau = RootSystem::from_positive_roots(spec.trank, spec.ktau);
        pr.p_plus_tau = spec.ptau;
        pr.p_plus_minus_tau = spec.pmtau;
    }
    pr.finalize();
    return pr;
}

void HermitianPair::finalize() {
    // invariant: p_+^tau and p_+^{-tau} partition the restricted noncompacts
    std::multiset<Weight> lhs, rhs;
    for (const auto& b : g.noncompact_pos) lhs.insert(restriction.apply(b));
    for (const auto& b : p_plus_tau) rhs.insert(b);
    for (const auto& b : p_plus_minus_tau) rhs.insert(b);
    if (lhs != rhs)
        throw std::invalid_argument("HermitianPair: tau split does not partition the noncompact system");
    if (p_plus_minus_tau.empty())
        throw std::invalid_argument("HermitianPair: empty p_+^{-tau}");

    // invariant: k^tau roots occur among the restricted compact roots
    std::multiset<Weight> cimg;
    for (const auto& a : g.compact_pos) cimg.insert(restriction.apply(a));
    for (const auto& a : k_tau.positive_roots())
        if (!cimg.count(a))
            throw std::invalid_argument("HermitianPair: k^tau root missing from the compact image");

    // invariant: the splits are stable under the k^tau Weyl action
    auto stable = [&](const std::vector<Weight>& set) {
        std::multiset<Weight> ms(set.begin(), set.end());
        for (const auto& s : k_tau.simple_roots()) {
            std::multiset<Weight> ref;
            for (const auto& w : set) ref.insert(k_tau.reflect(w, s));
            if (ref != ms) return false;
        }
        return true;
    };
    if (!stable(p_plus_tau) || !stable(p_plus_minus_tau))
        throw std::invalid_argument("HermitianPair: tau split not k^tau-stable");

    // cascade: minimum-root order within each noncompact simple factor of
    // g^{tau theta}, factors ordered tube type first, then by minimal root
    std::vector<Weight> gtt; // root set of g^{tau theta} in t^tau coordinates
    for (const auto& a : k_tau.positive_roots()) gtt.push_back(a);
    {
        std::set<Weight> seen(gtt.begin(), gtt.end());
        for (const auto& b : p_plus_minus_tau)
            if (seen.insert(b).second) gtt.push_back(b);
    }
    // connected components under non-orthogonality
    std::vector<int> comp(gtt.size(), -1);
    int ncomp = 0;
    for (std::size_t i = 0; i < gtt.size(); ++i) {
        if (comp[i] >= 0) continue;
        std::vector<std::size_t> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < gtt.size(); ++v)
                if (comp[v] < 0 && pairing4(gtt[u], gtt[v]) != 0) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
        }
        ++ncomp;
    }
    std::set<Weight> pm_set(p_plus_minus_tau.begin(), p_plus_minus_tau.end());
    struct Block {
        std::vector<Weight> noncompact;
        CascadeResult cas;
        bool tube = true;
        Weight min_root;
    };
    std::vector<Block> blocks;
    for (int c = 0; c < ncomp; ++c) {
        Block blk;
        std::vector<Weight> all;
        for (std::size_t i = 0; i < gtt.size(); ++i)
            if (comp[i] == c) {
                all.push_back(gtt[i]);
                if (pm_set.count(gtt[i])) blk.noncompact.push_back(gtt[i]);
            }
        if (blk.noncompact.empty()) continue;
        blk.cas = cascade_in(blk.noncompact, all);
        std::sort(blk.noncompact.begin(), blk.noncompact.end());
        blk.min_root = blk.noncompact.front();
        for (const auto& b : blk.noncompact) {
            auto cv = cascade_restriction(b, blk.cas.gammas);
            int nonzero = 0;
            long long val = 0;
            for (long long x : cv)
                if (x != 0) { ++nonzero; val = x; }
            if (nonzero == 1 && (val == 1 || val == -1)) blk.tube = false; // P_i pattern
        }
        blocks.push_back(std::move(blk));
    }
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        if (a.tube != b.tube) return a.tube; // tube factors first
        return a.min_root < b.min_root;
    });
    cascade.gammas.clear();
    for (const auto& blk : blocks)
        cascade.gammas.insert(cascade.gammas.end(), blk.cas.gammas.begin(), blk.cas.gammas.end());
    if (cascade.gammas.empty())
        throw std::invalid_argument("HermitianPair: empty cascade");

    // stable isotropy data: L = Z_{K cap H}(a) over the full cascade
    l_datum = l_subgroup(target_rank(), k_tau.positive_roots(), cascade, cascade.gammas.size());
}

} // namespace hdsb
