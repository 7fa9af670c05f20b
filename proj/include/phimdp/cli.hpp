#ifndef PHIMDP_CLI_HPP
#define PHIMDP_CLI_HPP

#include <cstdint>
#include <string>

#include "phimdp/cost.hpp"
#include "phimdp/phi_search.hpp"

namespace phimdp {

// Flag bundle shared by the subcommands; defaults mirror the stationary
// two-symbol fixture (exact coding, successor-keyed rewards, no map penalty).
struct CliCostFlags {
    std::string code_mode = "exact";
    std::string reward_model = "state-only";
    bool phi_penalty = false;
    double alpha = 0.5;
    std::string criterion = "cost";

    CostConfig cost_config() const;
    Criterion criterion_value() const;
};

struct RunAgentOptions {
    std::string env = "tiny";
    long long cycles = 1000;
    std::uint64_t seed = 1;
    int budget = 10;
    double gamma_cap = 0.99;
    bool exploration = true;
    int replicas = 1;
    CliCostFlags flags;
};

struct EvalCostOptions {
    std::string history_path;
    std::string phi_path;
    CliCostFlags flags;
};

struct SearchPhiOptions {
    std::string history_path;
    int iterations = 100;
    std::uint64_t seed = 1;
    CliCostFlags flags;
    std::string out_phi_path; // optional: write the best set here
};

struct TinyTableOptions {
    long long cycles = 100000;
    std::uint64_t seed = 1;
    int max_depth = 4;
    CliCostFlags flags;
};

// Each command returns its full text output; main() routes it to stdout or
// the --out file.
std::string cmd_run_agent(const RunAgentOptions& opt);
std::string cmd_eval_cost(const EvalCostOptions& opt);
std::string cmd_search_phi(const SearchPhiOptions& opt);
std::string cmd_tiny_table(const TinyTableOptions& opt);

// closed-form description length of the depth-k window map on the two-symbol
// stationary source, as a function of the coded transition count
double tiny_closed_form(int depth, long long transitions);

int cli_main(int argc, char** argv);

} // namespace phimdp

#endif
