#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hdsb {

// One batch job per process invocation.
struct JobSpec {
    std::string command; // list-pairs, khs, branch, stability, isotropy,
                         // mf-check, epsilon-check, example52
    std::string pair_label;
    std::string hw;            // undoubled rationals, "/2" permitted
    int max_degree = 8;
    std::size_t khs_m = 0;     // 0 = real rank
    std::string format = "json"; // or "tsv"
    long long seed = 0;
    std::string sig;           // epsilon-check: signs on the signature basis
    std::string catalog_path;  // empty = builtin
};

// exit status: 0 ok, 1 validation error, 2 internal cross-check failure
int run_job(const JobSpec& job, std::ostream& out, std::ostream& err);

std::vector<long long> parse_cli_weight(const std::string& text);

} // namespace hdsb
