#ifndef PHIMDP_COST_HPP
#define PHIMDP_COST_HPP

#include <string>
#include <vector>

#include "phimdp/coding.hpp"
#include "phimdp/count_tensor.hpp"

namespace phimdp {

// How transition rewards are coded: one block per (state, action, successor),
// or one block per successor state only (rewards assumed to depend on where
// the process lands).
enum class RewardModel { full, state_only };

struct CostConfig {
    CodeSpec code;
    RewardModel reward_model = RewardModel::state_only;
    bool phi_penalty = true;    // charge the map one bit per tree node
    bool icost_literal_m = false; // see icost.hpp
};

struct CostReport {
    double state_bits = 0.0;
    double reward_bits = 0.0;
    double phi_bits = 0.0;
    double total_bits = 0.0;
    int states = 0;
    long long transitions = 0;
    // per-block breakdowns, labels like "(s,a)" and "(s,a,s')" or "(s')"
    std::vector<std::pair<std::string, double>> state_blocks;
    std::vector<std::pair<std::string, double>> reward_blocks;
};

// code length of the state sequence given actions: one i.i.d. block of
// successor counts per (state, action), category dimension = state count
double state_code_length(const CountTensor& ct, const CodeSpec& spec);

// code length of the rewards given states and actions, per the reward model
double reward_code_length(const CountTensor& ct, RewardModel model,
                          const CodeSpec& spec);

// total description length of the history under the map: state bits +
// reward bits + map bits
CostReport cost(const SuffixSet& phi, const History& h, const CostConfig& cfg);
double cost_bits(const SuffixSet& phi, const History& h, const CostConfig& cfg);
double cost_bits(const CountTensor& ct, const SuffixSet& phi, const CostConfig& cfg);

// cost(split(phi, member)) - cost(phi), computed from the existing tensor and
// the history without a full rebuild; exact up to float roundoff
double cost_delta_split(const CountTensor& ct, const SuffixSet& phi,
                        const std::string& member, const History& h,
                        const CostConfig& cfg);

// cost(merge(phi, parent)) - cost(phi), same contract
double cost_delta_merge(const CountTensor& ct, const SuffixSet& phi,
                        const std::string& parent, const History& h,
                        const CostConfig& cfg);

} // namespace phimdp

#endif
