#include <iostream>

#include <CLI11.hpp>

#include "hdsbranch/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"hdsbranch: exact branching tables of holomorphic discrete series "
                 "along holomorphic symmetric pairs"};
    app.require_subcommand(1);
    app.fallthrough();

    hdsb::JobSpec job;
    app.add_option("--format", job.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--catalog", job.catalog_path, "catalog file override (default: built-in)");
    app.add_option("--seed", job.seed, "seed recorded in the report");

    auto* list = app.add_subcommand("list-pairs", "catalog summary");
    auto* khs = app.add_subcommand("khs", "orbit-closure cone points and the exactness check");
    khs->add_option("--pair", job.pair_label, "g label (or pair; the g part is used)")->required();
    khs->add_option("--m", job.khs_m, "orbit rank (default: real rank)");
    khs->add_option("--max-degree", job.max_degree, "bound on c_1 and on verified degrees");
    auto* branch = app.add_subcommand("branch", "graded branching multiplicity table");
    auto* stability = app.add_subcommand("stability", "stability scan and isotropy comparison");
    auto* isotropy = app.add_subcommand("isotropy", "L-decomposition of the minimal K-type");
    auto* mf = app.add_subcommand("mf-check", "multiplicity-freeness, both computation paths");
    auto* eps = app.add_subcommand("epsilon-check", "epsilon-family multiplicity equality");
    eps->add_option("--sig", job.sig, "signature on the basis, e.g. -1,1 (default: all holomorphic)");
    for (CLI::App* sub : {branch, stability, isotropy, mf, eps}) {
        sub->add_option("--pair", job.pair_label, "catalog pair label")->required();
        sub->add_option("--hw", job.hw, "highest weight, undoubled, /2 permitted")->required();
        if (sub != isotropy)
            sub->add_option("--max-degree", job.max_degree, "degree window bound");
    }
    auto* ex52 = app.add_subcommand("example52", "the GL(8) flag-variety counterexample");
    (void)list;
    (void)ex52;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    job.command = app.get_subcommands().front()->get_name();
    return hdsb::run_job(job, std::cout, std::cerr);
}
