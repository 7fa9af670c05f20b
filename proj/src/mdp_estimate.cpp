#include "phimdp/mdp_estimate.hpp"

#include <algorithm>
#include <stdexcept>

namespace phimdp {

int MdpEstimate::state_index(const std::string& label) const {
    for (int s = 0; s < size(); ++s)
        if (states[s] == label) return s;
    throw std::invalid_argument("mdp estimate: unknown state label");
}

namespace {

void check_rewards(const CountTensor& ct, const std::vector<double>& reward_values) {
    if (static_cast<int>(reward_values.size()) != ct.reward_count())
        throw std::invalid_argument("mdp estimate: reward value list size mismatch");
}

double expected_reward(const std::vector<long long>& counts,
                       const std::vector<double>& values) {
    long long total = 0;
    double sum = 0.0;
    for (std::size_t r = 0; r < counts.size(); ++r) {
        total += counts[r];
        sum += static_cast<double>(counts[r]) * values[r];
    }
    return total > 0 ? sum / static_cast<double>(total) : 0.0;
}

} // namespace

MdpEstimate estimate_mdp(const CountTensor& ct, const std::vector<double>& reward_values) {
    check_rewards(ct, reward_values);
    MdpEstimate est;
    est.states = ct.labels();
    est.actions = ct.action_count();
    const std::size_t m = est.states.size();
    est.transition.assign(m * est.actions * m, 0.0);
    est.reward.assign(m * est.actions * m, 0.0);

    for (int s = 0; s < ct.state_count(); ++s)
        for (int a = 0; a < ct.action_count(); ++a) {
            const long long total = ct.sa_total(s, a);
            if (total == 0) continue; // unvisited pairs keep an all-zero row
            for (const auto& [s2, rewards] : ct.block(s, a)) {
                long long n = 0;
                for (long long c : rewards) n += c;
                const std::size_t at = (static_cast<std::size_t>(s) * est.actions + a) * m + s2;
                est.transition[at] = static_cast<double>(n) / static_cast<double>(total);
                est.reward[at] = expected_reward(rewards, reward_values);
            }
        }
    return est;
}

MdpEstimate extend_exploration(const CountTensor& ct,
                               const std::vector<double>& reward_values, double gamma,
                               const ExplorationConfig& cfg) {
    check_rewards(ct, reward_values);
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw std::invalid_argument("extend_exploration: gamma outside [0, 1)");

    const int m = ct.state_count();
    const int actions = ct.action_count();
    const double max_value =
        *std::max_element(reward_values.begin(), reward_values.end());
    const double bonus = cfg.bonus.value_or(
        (m + 1) * actions * std::max(max_value, 1.0) / (1.0 - gamma));
    if (!(bonus > max_value))
        throw std::invalid_argument("extend_exploration: bonus must exceed the best reward");

    MdpEstimate est;
    est.states = ct.labels();
    est.states.emplace_back("<explore>");
    est.actions = actions;
    est.explore_state = m;
    const std::size_t ext = est.states.size();
    est.transition.assign(ext * actions * ext, 0.0);
    est.reward.assign(ext * actions * ext, 0.0);

    for (int s = 0; s < m; ++s)
        for (int a = 0; a < actions; ++a) {
            const double denom = static_cast<double>(ct.sa_total(s, a)) + 1.0;
            const std::size_t row = (static_cast<std::size_t>(s) * actions + a) * ext;
            for (const auto& [s2, rewards] : ct.block(s, a)) {
                long long n = 0;
                for (long long c : rewards) n += c;
                est.transition[row + s2] = static_cast<double>(n) / denom;
                est.reward[row + s2] = expected_reward(rewards, reward_values);
            }
            est.transition[row + m] = 1.0 / denom;
            est.reward[row + m] = bonus;
        }
    for (int a = 0; a < actions; ++a) {
        const std::size_t row = (static_cast<std::size_t>(m) * actions + a) * ext;
        est.transition[row + m] = 1.0;
        est.reward[row + m] = bonus;
    }
    return est;
}

} // namespace phimdp
