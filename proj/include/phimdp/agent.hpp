#ifndef PHIMDP_AGENT_HPP
#define PHIMDP_AGENT_HPP

#include <cstdint>
#include <optional>

#include "phimdp/environment.hpp"
#include "phimdp/phi_search.hpp"
#include "phimdp/value_iteration.hpp"

namespace phimdp {

struct AgentConfig {
    std::uint64_t seed = 1;
    int budget = 10;          // map-improvement proposals per cycle
    double gamma_cap = 0.99;  // schedule is min(1 - 1/n, cap)
    CostConfig cost;
    Criterion criterion = Criterion::cost;
    ExplorationConfig exploration;
    ViConfig vi;
    std::optional<SuffixSet> initial_phi; // default: the one-state map
};

// The full perceive-search-plan-act loop. Each observed cycle appends to the
// history, spends the budget on candidate-map proposals (adopting the
// candidate whenever it beats the working map), refits the MDP on the
// realized states, optionally extends it with the exploration bonus, solves
// it, and returns the greedy action for the present state.
class Agent {
public:
    struct CycleInfo {
        long long cycle = 0;
        int action = 0;
        int states = 0;         // realized states of the working map
        double cost_bits = 0.0; // description length under the working map
        double icost_bits = 0.0;
        double value = 0.0; // planner value of the present state
        double gamma = 0.0;
    };

    Agent(AgentConfig cfg, Alphabets alphabets);

    int observe(int observation, int reward); // returns the action to take

    const SuffixSet& phi() const { return phi_; }
    const SuffixSet& candidate() const { return candidate_; }
    const History& history() const { return history_; }
    const CycleInfo& last() const { return last_; }
    // criterion value at each adoption of the candidate, in event order
    const std::vector<double>& adoption_bits() const { return adoption_bits_; }

private:
    AgentConfig cfg_;
    History history_;
    SuffixSet phi_;
    SuffixSet candidate_;
    std::mt19937_64 search_rng_;
    int pending_action_ = -1;
    CycleInfo last_;
    std::vector<double> adoption_bits_;
};

struct RunLogRow {
    long long cycle = 0;
    int observation = 0;
    int reward = 0;
    int action = 0;
    int states = 0;
    double cost_bits = 0.0;
    double icost_bits = 0.0;
    double value = 0.0;
};

struct RunLog {
    std::string env_name;
    std::uint64_t seed = 0;
    std::vector<RunLogRow> rows;
    std::optional<SuffixSet> final_phi;
    std::vector<double> adoption_bits;
};

// Drives the agent against the environment for the given number of cycles.
RunLog run_experiment(const AgentConfig& cfg, Environment& env, long long cycles,
                      const std::string& env_name = "");

} // namespace phimdp

#endif
