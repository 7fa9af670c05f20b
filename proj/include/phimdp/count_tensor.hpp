#ifndef PHIMDP_COUNT_TENSOR_HPP
#define PHIMDP_COUNT_TENSOR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "phimdp/history.hpp"
#include "phimdp/suffix_set.hpp"

namespace phimdp {

// Transition-reward counts of a history under a feature map. A transition is
// recorded for every cycle t >= 2 as (state[t-1], action[t-1], state[t],
// reward[t]); the first cycle's reward has no preceding state-action pair and
// is excluded. States are the realized ones, indexed in first-visit order.
class CountTensor {
public:
    CountTensor(const SuffixSet& phi, const History& h);

    int state_count() const { return static_cast<int>(labels_.size()); }
    int action_count() const { return actions_; }
    int reward_count() const { return rewards_; }
    long long transitions() const { return transitions_; }
    std::size_t cycles() const { return state_seq_.size(); }

    const std::string& label(int state) const { return labels_[state]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // realized state of each cycle, 0-based over t = 1..n
    const std::vector<int>& state_sequence() const { return state_seq_; }
    // cycle indices (1-based) at which each state was realized
    const std::vector<std::vector<int>>& visit_times() const { return times_; }
    const std::vector<int>& visit_times(int state) const { return times_[state]; }

    // successor blocks: per (state, action), counts over (successor, reward)
    using SuccRewards = std::map<int, std::vector<long long>>;
    const SuccRewards& block(int state, int action) const {
        return sa_blocks_[static_cast<std::size_t>(state) * actions_ + action];
    }
    long long sa_total(int state, int action) const {
        return sa_totals_[static_cast<std::size_t>(state) * actions_ + action];
    }

    // reward counts per successor state, aggregated over sources and actions
    const std::vector<long long>& dest_rewards(int state) const {
        return dest_rewards_[state];
    }

    long long count(int s, int a, int s2, int r) const;

private:
    int actions_ = 0;
    int rewards_ = 0;
    long long transitions_ = 0;
    std::vector<std::string> labels_;
    std::vector<int> state_seq_;
    std::vector<std::vector<int>> times_;
    std::vector<SuccRewards> sa_blocks_;
    std::vector<long long> sa_totals_;
    std::vector<std::vector<long long>> dest_rewards_;
};

} // namespace phimdp

#endif
