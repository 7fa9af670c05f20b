#ifndef PHIMDP_MDP_ESTIMATE_HPP
#define PHIMDP_MDP_ESTIMATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "phimdp/count_tensor.hpp"

namespace phimdp {

// Dense frequency-estimated MDP over the realized states. Rows with no data
// are all-zero. When extended for exploration, one extra absorbing state is
// appended and every (state, action) receives a virtual transition into it.
struct MdpEstimate {
    std::vector<std::string> states;
    int actions = 0;
    int explore_state = -1; // index of the bonus state, -1 if not extended
    std::vector<double> transition; // [s][a][s'] probabilities
    std::vector<double> reward;     // [s][a][s'] expected reward on arrival

    int size() const { return static_cast<int>(states.size()); }
    double t(int s, int a, int s2) const {
        return transition[(static_cast<std::size_t>(s) * actions + a) * states.size() + s2];
    }
    double r(int s, int a, int s2) const {
        return reward[(static_cast<std::size_t>(s) * actions + a) * states.size() + s2];
    }
    int state_index(const std::string& label) const; // throws if unknown
};

// Plain relative-frequency estimates; no exploration state.
MdpEstimate estimate_mdp(const CountTensor& ct, const std::vector<double>& reward_values);

struct ExplorationConfig {
    bool enabled = true;
    // explicit bonus reward; when absent it defaults to
    // (1-gamma)^-1 * (m+1) * |A| * max(max reward value, 1)
    std::optional<double> bonus;
};

// Frequency estimates with the optimistic extension: every (s, a) gets one
// virtual visit to the bonus state (shrinking real rows by n/(n+1)), the
// bonus state absorbs, and arriving at or staying in it pays the bonus.
MdpEstimate extend_exploration(const CountTensor& ct,
                               const std::vector<double>& reward_values, double gamma,
                               const ExplorationConfig& cfg);

} // namespace phimdp

#endif
