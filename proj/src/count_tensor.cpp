#include "phimdp/count_tensor.hpp"

#include <stdexcept>

namespace phimdp {

CountTensor::CountTensor(const SuffixSet& phi, const History& h) {
    if (h.empty()) throw std::invalid_argument("count tensor: empty history");
    if (phi.alphabet_size() != h.alphabets().observations)
        throw std::invalid_argument("count tensor: alphabet mismatch");
    actions_ = h.alphabets().actions;
    rewards_ = h.alphabets().rewards();

    const std::size_t n = h.cycles();
    const std::vector<int>& obs = h.observations();

    // realize states in first-visit order by walking prefixes
    std::vector<int> member_to_state(phi.size(), -1);
    state_seq_.resize(n);
    for (std::size_t t = 1; t <= n; ++t) {
        const int member = phi.state_of(obs, t);
        int& mapped = member_to_state[member];
        if (mapped < 0) {
            mapped = static_cast<int>(labels_.size());
            labels_.push_back(phi.label(member));
            times_.emplace_back();
        }
        state_seq_[t - 1] = mapped;
        times_[mapped].push_back(static_cast<int>(t));
    }

    sa_blocks_.assign(labels_.size() * actions_, SuccRewards{});
    sa_totals_.assign(labels_.size() * actions_, 0);
    dest_rewards_.assign(labels_.size(), std::vector<long long>(rewards_, 0));

    for (std::size_t t = 2; t <= n; ++t) {
        const int s = state_seq_[t - 2];
        const int a = h.action(t - 1);
        const int s2 = state_seq_[t - 1];
        const int r = h.reward(t);
        auto& succ = sa_blocks_[static_cast<std::size_t>(s) * actions_ + a];
        auto [it, fresh] = succ.try_emplace(s2);
        if (fresh) it->second.assign(rewards_, 0);
        ++it->second[r];
        ++sa_totals_[static_cast<std::size_t>(s) * actions_ + a];
        ++dest_rewards_[s2][r];
        ++transitions_;
    }
}

long long CountTensor::count(int s, int a, int s2, int r) const {
    const auto& succ = block(s, a);
    auto it = succ.find(s2);
    if (it == succ.end()) return 0;
    return it->second[r];
}

} // namespace phimdp
