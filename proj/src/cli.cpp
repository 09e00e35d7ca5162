#include "hdsbranch/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hdsbranch/branching.hpp"
#include "hdsbranch/epsilon.hpp"
#include "hdsbranch/lr.hpp"

namespace hdsb {

using nlohmann::json;

std::vector<long long> parse_cli_weight(const std::string& text) {
    std::vector<long long> doubled;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto slash = tok.find('/');
        if (slash == std::string::npos) {
            doubled.push_back(2 * std::stoll(tok));
        } else {
            long long num = std::stoll(tok.substr(0, slash));
            long long den = std::stoll(tok.substr(slash + 1));
            if (den != 2 && den != 1)
                throw std::invalid_argument("weights accept integers and halves only");
            doubled.push_back(den == 2 ? num : 2 * num);
        }
    }
    if (doubled.empty()) throw std::invalid_argument("empty weight");
    return doubled;
}

namespace {

json weight_json(const Weight& w) {
    json arr = json::array();
    for (std::size_t i = 0; i < w.rank(); ++i) {
        if (w[i] % 2 == 0) arr.push_back(w[i] / 2);
        else arr.push_back(std::to_string(w[i]) + "/2");
    }
    return arr;
}

Catalog catalog_for(const JobSpec& job) {
    std::string path = job.catalog_path;
    if (path.empty()) {
        const char* env = std::getenv("HDSBRANCH_CATALOG");
        if (env) path = env;
    }
    if (path.empty()) return Catalog::builtin();
    return Catalog::load_file(path);
}

void emit(const JobSpec& job, const json& doc, std::ostream& out) {
    if (job.format == "json") {
        out << doc.dump(2) << '\n';
        return;
    }
    // TSV: one entry per line under a fixed header per command
    std::string cmd = doc.at("command");
    if (cmd == "branch") {
        out << "degree\tweight\tmult\n";
        for (const auto& e : doc.at("entries"))
            out << e.at("degree") << '\t' << e.at("weight").dump() << '\t' << e.at("mult") << '\n';
    } else if (cmd == "isotropy") {
        out << "character\tmult\n";
        for (const auto& e : doc.at("entries"))
            out << e.at("character").dump() << '\t' << e.at("mult") << '\n';
    } else if (cmd == "khs") {
        out << "coefficients\tweight\n";
        for (const auto& e : doc.at("cone_points"))
            out << e.at("c").dump() << '\t' << e.at("weight").dump() << '\n';
    } else if (cmd == "list-pairs") {
        out << "kind\tlabel\n";
        for (const auto& e : doc.at("g")) out << "g\t" << e.at("label").get<std::string>() << '\n';
        for (const auto& e : doc.at("pairs")) out << "pair\t" << e.get<std::string>() << '\n';
    } else {
        out << "key\tvalue\n";
        for (const auto& [k, v] : doc.items())
            out << k << '\t' << v.dump() << '\n';
    }
}

json table_json(const MultiplicityTable& table) {
    json entries = json::array();
    for (const auto& [key, m] : table.entries)
        entries.push_back({{"degree", key.first}, {"weight", weight_json(key.second)}, {"mult", m}});
    return entries;
}

int run_checked(const JobSpec& job, std::ostream& out, std::ostream& err) {
    json doc;
    doc["command"] = job.command;
    doc["seed"] = job.seed;
    int status = 0;

    if (job.command == "example52") {
        auto [ch, cl] = example_52_check();
        doc["C_H"] = ch;
        doc["C_L"] = cl;
        emit(job, doc, out);
        return 0;
    }
    if (job.command == "list-pairs") {
        const Catalog& cat = catalog_for(job);
        json gs = json::array();
        for (const auto& gl : cat.g_labels()) {
            const auto& hd = cat.datum(gl);
            gs.push_back({{"label", gl},
                          {"rank", hd.rs.ambient_rank()},
                          {"compact_roots", hd.compact_pos.size()},
                          {"noncompact_roots", hd.noncompact_pos.size()},
                          {"real_rank", strongly_orthogonal_cascade(hd).gammas.size()}});
        }
        doc["g"] = gs;
        doc["pairs"] = cat.pair_labels();
        emit(job, doc, out);
        return 0;
    }

    const Catalog& cat = catalog_for(job);

    if (job.command == "khs") {
        // pair argument names a g datum; the cone lives on its K-case cascade
        std::string g = job.pair_label;
        auto colon = g.find(':');
        if (colon != std::string::npos) g = g.substr(0, colon);
        const auto& hd = cat.datum(g);
        CascadeResult cas = strongly_orthogonal_cascade(hd);
        std::size_t m = job.khs_m ? job.khs_m : cas.gammas.size();
        KhsCone cone = khs_cone(cas, m);
        json pts = json::array();
        for (const auto& c : cone.enumerate(job.max_degree))
            pts.push_back({{"c", c}, {"weight", weight_json(cone.point(c))}});
        doc["pair"] = g;
        doc["m"] = m;
        doc["cone_points"] = pts;
        doc["count"] = pts.size();
        // at full rank, S^d(p_-) must match the cone degree slices exactly
        if (m == cas.gammas.size()) {
            RootSystem kc = hd.compact_system();
            FormalCharacter gens(hd.rs.ambient_rank());
            for (const auto& b : hd.noncompact_pos) gens.add(-b, 1);
            auto sym = symmetric_algebra_character(gens, job.max_degree);
            bool exact = true;
            for (int d = 0; d <= job.max_degree && exact; ++d) {
                Decomposition dec = decompose_by_alternating_sum(kc, sym[d]);
                std::map<Weight, long long> expect;
                for (const auto& c : cone.enumerate(d)) {
                    long long total = 0;
                    for (long long x : c) total += x;
                    if (total == d) expect[cone.point(c)] = 1;
                }
                if (dec.terms != expect) exact = false;
            }
            doc["verified_degrees"] = job.max_degree;
            doc["khs_exact"] = exact;
            if (!exact) {
                err << "khs: decomposition disagrees with the cone\n";
                status = 2;
            }
        }
        emit(job, doc, out);
        return status;
    }

    HermitianPair pair = cat.pair(job.pair_label);
    Weight hw(parse_cli_weight(job.hw));
    if (hw.rank() != pair.g.rs.ambient_rank())
        throw std::invalid_argument("hw length does not match the ambient rank of " + pair.g.label);

    if (job.command == "branch") {
        MultiplicityTable table = hds_branch(pair, hw, job.max_degree);
        doc["pair"] = pair.label;
        doc["hw"] = weight_json(hw);
        doc["max_degree"] = job.max_degree;
        doc["ktype_dim"] = table.ktype_dim;
        doc["entries"] = table_json(table);
        emit(job, doc, out);
        return 0;
    }
    if (job.command == "isotropy") {
        auto iso = isotropy_multiplicity(pair, hw);
        json entries = json::array();
        for (const auto& [w, m] : iso)
            entries.push_back({{"character", weight_json(w)}, {"mult", m}});
        doc["pair"] = pair.label;
        doc["hw"] = weight_json(hw);
        doc["torsion_moduli"] = pair.l_datum.restriction.torsion_moduli;
        doc["entries"] = entries;
        emit(job, doc, out);
        return 0;
    }
    if (job.command == "stability") {
        StableComparison cmp = stable_comparison(pair, hw, job.max_degree);
        doc["pair"] = pair.label;
        doc["hw"] = weight_json(hw);
        doc["window"] = {cmp.report.window_first, cmp.report.window_last};
        doc["verdict"] = cmp.report.stabilized ? "stabilized" : "not-yet-stabilized-within-window";
        if (cmp.report.stabilized) {
            doc["lambda0"] = weight_json(cmp.report.lambda0);
            doc["lambda0_coefficients"] = cmp.report.lambda0_coeffs;
            json sv = json::array();
            for (const auto& [cls, v] : cmp.report.stable_values)
                sv.push_back({{"class", weight_json(cls)}, {"value", v}});
            doc["stable_values"] = sv;
            doc["matches_isotropy"] = cmp.values_match;
            if (!cmp.values_match) {
                err << "stability: stable values disagree with the isotropy representation\n";
                status = 2;
            }
        }
        emit(job, doc, out);
        return status;
    }
    if (job.command == "mf-check") {
        MfReport rep = multiplicity_free_check(pair, hw, job.max_degree);
        doc["pair"] = pair.label;
        doc["hw"] = weight_json(hw);
        doc["multiplicity_free"] = rep.multiplicity_free;
        doc["sup_table"] = rep.sup_table;
        doc["sup_isotropy"] = rep.sup_isotropy;
        doc["stabilized"] = rep.stabilized;
        emit(job, doc, out);
        return 0;
    }
    if (job.command == "epsilon-check") {
        // base is the K-case of the pair's g
        HermitianPair base = cat.pair(pair.g.label + ":k");
        MooreData md = moore_decomposition(base.g, base.cascade);
        RestrictedRootSystem rrs = restricted_roots(md, base.cascade.gammas.size());
        std::vector<Signature> sigs;
        if (!job.sig.empty()) {
            Signature s;
            std::stringstream ss(job.sig);
            std::string tok;
            while (std::getline(ss, tok, ',')) s.on_basis.push_back(std::stoll(tok) < 0 ? -1 : 1);
            if (s.on_basis.size() != rrs.basis.size())
                throw std::invalid_argument("signature length does not match the basis");
            if (!holomorphic_p(s, rrs))
                throw std::invalid_argument("epsilon-check: non-holomorphic signature");
            sigs.push_back(std::move(s));
        } else {
            for (const auto& s : enumerate_signatures(rrs))
                if (holomorphic_p(s, rrs)) sigs.push_back(s);
        }
        json checks = json::array();
        for (const auto& s : sigs) {
            FamilyCheckReport rep = family_equal_check(base, s, hw, job.max_degree);
            json diffs = json::array();
            for (const auto& w : rep.differing_keys) diffs.push_back(weight_json(w));
            checks.push_back({{"signature", s.on_basis},
                              {"compared_keys", rep.compared_keys.size()},
                              {"differing_keys", diffs},
                              {"index_sets_equal", rep.index_sets_equal}});
            if (!rep.differing_keys.empty() || !rep.index_sets_equal) status = 2;
        }
        doc["pair"] = base.label;
        doc["hw"] = weight_json(hw);
        doc["max_degree"] = job.max_degree;
        doc["checks"] = checks;
        if (status == 2) err << "epsilon-check: family equality violated (bug)\n";
        emit(job, doc, out);
        return status;
    }
    throw std::invalid_argument("unknown command " + job.command);
}

} // namespace

int run_job(const JobSpec& job, std::ostream& out, std::ostream& err) {
    try {
        return run_checked(job, out, err);
    } catch (const cross_check_error& e) {
        err << "cross-check failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace hdsb
