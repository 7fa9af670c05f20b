#include "phimdp/cost.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace phimdp {

namespace {

std::string display_label(const std::string& label) {
    return label.empty() ? std::string("eps") : label;
}

// code length of one successor block: counts summed over rewards, category
// dimension = number of realized states
double state_block_bits(const CountTensor::SuccRewards& block, long long m,
                        const CodeSpec& spec) {
    std::vector<long long> totals;
    totals.reserve(block.size());
    for (const auto& [succ, rewards] : block) {
        long long n = 0;
        for (long long c : rewards) n += c;
        if (n > 0) totals.push_back(n);
    }
    if (totals.empty()) return 0.0;
    return code_length_block(totals, m, spec);
}

double reward_vector_bits(const std::vector<long long>& rewards, long long dim,
                          const CodeSpec& spec) {
    std::vector<long long> nonzero;
    nonzero.reserve(rewards.size());
    for (long long c : rewards)
        if (c > 0) nonzero.push_back(c);
    if (nonzero.empty()) return 0.0;
    return code_length_block(nonzero, dim, spec);
}

// per-(state,action,successor) reward blocks of one successor block
double full_reward_block_bits(const CountTensor::SuccRewards& block, long long dim,
                              const CodeSpec& spec) {
    double bits = 0.0;
    for (const auto& [succ, rewards] : block)
        bits += reward_vector_bits(rewards, dim, spec);
    return bits;
}

} // namespace

double state_code_length(const CountTensor& ct, const CodeSpec& spec) {
    const long long m = ct.state_count();
    double bits = 0.0;
    for (int s = 0; s < ct.state_count(); ++s)
        for (int a = 0; a < ct.action_count(); ++a)
            if (ct.sa_total(s, a) > 0)
                bits += state_block_bits(ct.block(s, a), m, spec);
    return bits;
}

double reward_code_length(const CountTensor& ct, RewardModel model,
                          const CodeSpec& spec) {
    const long long dim = ct.reward_count();
    double bits = 0.0;
    if (model == RewardModel::full) {
        for (int s = 0; s < ct.state_count(); ++s)
            for (int a = 0; a < ct.action_count(); ++a)
                bits += full_reward_block_bits(ct.block(s, a), dim, spec);
    } else {
        for (int s = 0; s < ct.state_count(); ++s)
            bits += reward_vector_bits(ct.dest_rewards(s), dim, spec);
    }
    return bits;
}

double cost_bits(const CountTensor& ct, const SuffixSet& phi, const CostConfig& cfg) {
    double bits = state_code_length(ct, cfg.code) +
                  reward_code_length(ct, cfg.reward_model, cfg.code);
    if (cfg.phi_penalty) bits += phi.description_length();
    return bits;
}

double cost_bits(const SuffixSet& phi, const History& h, const CostConfig& cfg) {
    return cost_bits(CountTensor(phi, h), phi, cfg);
}

CostReport cost(const SuffixSet& phi, const History& h, const CostConfig& cfg) {
    const CountTensor ct(phi, h);
    CostReport rep;
    rep.states = ct.state_count();
    rep.transitions = ct.transitions();
    const long long m = ct.state_count();
    const long long dim = ct.reward_count();

    for (int s = 0; s < ct.state_count(); ++s)
        for (int a = 0; a < ct.action_count(); ++a) {
            if (ct.sa_total(s, a) == 0) continue;
            const double bits = state_block_bits(ct.block(s, a), m, cfg.code);
            rep.state_bits += bits;
            rep.state_blocks.emplace_back(
                "(" + display_label(ct.label(s)) + "," + std::string(1, symbol_char(a)) + ")",
                bits);
        }

    if (cfg.reward_model == RewardModel::full) {
        for (int s = 0; s < ct.state_count(); ++s)
            for (int a = 0; a < ct.action_count(); ++a)
                for (const auto& [succ, rewards] : ct.block(s, a)) {
                    const double bits = reward_vector_bits(rewards, dim, cfg.code);
                    if (bits == 0.0) continue;
                    rep.reward_bits += bits;
                    rep.reward_blocks.emplace_back(
                        "(" + display_label(ct.label(s)) + "," +
                            std::string(1, symbol_char(a)) + "," +
                            display_label(ct.label(succ)) + ")",
                        bits);
                }
    } else {
        for (int s = 0; s < ct.state_count(); ++s) {
            const double bits = reward_vector_bits(ct.dest_rewards(s), dim, cfg.code);
            long long visits = 0;
            for (long long c : ct.dest_rewards(s)) visits += c;
            if (visits == 0) continue;
            rep.reward_bits += bits;
            rep.reward_blocks.emplace_back("(" + display_label(ct.label(s)) + ")", bits);
        }
    }

    rep.phi_bits = cfg.phi_penalty ? phi.description_length() : 0.0;
    rep.total_bits = rep.state_bits + rep.reward_bits + rep.phi_bits;
    return rep;
}

namespace {

// Shared engine for the split and merge deltas. Affected old states are
// relabeled per visit time; everything else is untouched except for the
// category-dimension change that the state blocks all share.
double delta_relabel(const CountTensor& ct, const History& h, const CostConfig& cfg,
                     const std::vector<char>& affected,
                     const std::vector<int>& new_id_at_time, int realized_new,
                     double phi_delta) {
    const int m_old = ct.state_count();
    const int actions = ct.action_count();
    const long long dim = ct.reward_count();
    int affected_count = 0;
    for (int s = 0; s < m_old; ++s)
        if (affected[s]) ++affected_count;
    const long long m_new = m_old - affected_count + realized_new;
    const std::size_t n = ct.cycles();
    const std::vector<int>& seq = ct.state_sequence();

    // transitions adjacent to any visit of an affected state
    std::vector<int> hot;
    for (int s = 0; s < m_old; ++s) {
        if (!affected[s]) continue;
        for (int t : ct.visit_times(s)) {
            if (t >= 2) hot.push_back(t);
            if (t + 1 <= static_cast<int>(n)) hot.push_back(t + 1);
        }
    }
    std::sort(hot.begin(), hot.end());
    hot.erase(std::unique(hot.begin(), hot.end()), hot.end());

    auto relabel = [&](int t) {
        const int s = seq[t - 1];
        return affected[s] ? new_id_at_time[t] : s;
    };

    // old blocks touched: keyed by (source state, action)
    using Key = std::pair<int, int>;
    std::map<Key, const CountTensor::SuccRewards*> old_blocks;
    for (int t : hot)
        old_blocks.emplace(Key{seq[t - 2], h.action(t - 1)},
                           &ct.block(seq[t - 2], h.action(t - 1)));

    // rebuild those blocks under the new labeling
    std::map<Key, CountTensor::SuccRewards> new_blocks;
    for (const auto& [key, block] : old_blocks)
        if (!affected[key.first]) new_blocks.emplace(key, *block);
    for (int t : hot) {
        const int x = seq[t - 2];
        const int a = h.action(t - 1);
        const int y = seq[t - 1];
        const int r = h.reward(t);
        const int y2 = affected[y] ? new_id_at_time[t] : y;
        if (!affected[x]) {
            auto& block = new_blocks[Key{x, a}];
            --block[y][r];
        } else {
            auto [it, fresh] = new_blocks[Key{relabel(t - 1), a}].try_emplace(y2);
            if (fresh) it->second.assign(dim, 0);
            ++it->second[r];
            continue;
        }
        auto [it, fresh] = new_blocks[Key{x, a}].try_emplace(y2);
        if (fresh) it->second.assign(dim, 0);
        ++it->second[r];
    }

    double delta = phi_delta;
    const bool full = cfg.reward_model == RewardModel::full;
    for (const auto& [key, block] : old_blocks) {
        delta -= state_block_bits(*block, m_old, cfg.code);
        if (full) delta -= full_reward_block_bits(*block, dim, cfg.code);
    }
    for (const auto& [key, block] : new_blocks) {
        delta += state_block_bits(block, m_new, cfg.code);
        if (full) delta += full_reward_block_bits(block, dim, cfg.code);
    }

    // every untouched state block still changes its category dimension
    if (m_new != m_old) {
        for (int s = 0; s < m_old; ++s)
            for (int a = 0; a < actions; ++a) {
                if (ct.sa_total(s, a) == 0) continue;
                if (old_blocks.count(Key{s, a})) continue;
                delta += state_block_bits(ct.block(s, a), m_new, cfg.code) -
                         state_block_bits(ct.block(s, a), m_old, cfg.code);
            }
    }

    // successor-keyed reward blocks (their dimension is the reward count, so
    // untouched ones do not move)
    if (!full) {
        std::map<int, std::vector<long long>> new_dest;
        for (int s = 0; s < m_old; ++s) {
            if (!affected[s]) continue;
            delta -= reward_vector_bits(ct.dest_rewards(s), dim, cfg.code);
            for (int t : ct.visit_times(s)) {
                if (t < 2) continue;
                auto [it, fresh] = new_dest.try_emplace(new_id_at_time[t]);
                if (fresh) it->second.assign(dim, 0);
                ++it->second[h.reward(t)];
            }
        }
        for (const auto& [id, rewards] : new_dest)
            delta += reward_vector_bits(rewards, dim, cfg.code);
    }

    return delta;
}

int realized_index(const CountTensor& ct, const std::string& label) {
    for (int s = 0; s < ct.state_count(); ++s)
        if (ct.label(s) == label) return s;
    return -1;
}

} // namespace

double cost_delta_split(const CountTensor& ct, const SuffixSet& phi,
                        const std::string& member, const History& h,
                        const CostConfig& cfg) {
    if (phi.state_index(member) < 0)
        throw std::invalid_argument("cost_delta_split: not a member");
    const int alphabet = phi.alphabet_size();
    const double phi_delta = cfg.phi_penalty ? static_cast<double>(alphabet) : 0.0;
    const int idx = realized_index(ct, member);
    if (idx < 0) return phi_delta; // never visited: only the map bits move

    const std::vector<int>& obs = h.observations();
    const int len = static_cast<int>(member.size());
    const int m_old = ct.state_count();
    std::vector<char> affected(m_old, 0);
    affected[idx] = 1;

    std::vector<int> new_id_at_time(ct.cycles() + 1, -1);
    std::vector<char> child_seen(alphabet, 0);
    for (int t : ct.visit_times(idx)) {
        // the refining symbol is the observation one step older than the
        // member's window, padded with 0 at the start of the history
        const int pos = t - len - 1;
        const int sym = pos >= 0 ? obs[pos] : 0;
        new_id_at_time[t] = m_old + sym;
        child_seen[sym] = 1;
    }
    int realized_new = 0;
    for (char c : child_seen) realized_new += c;

    return delta_relabel(ct, h, cfg, affected, new_id_at_time, realized_new, phi_delta);
}

double cost_delta_merge(const CountTensor& ct, const SuffixSet& phi,
                        const std::string& parent, const History& h,
                        const CostConfig& cfg) {
    if (!phi.can_merge(parent))
        throw std::invalid_argument("cost_delta_merge: missing sibling members");
    const int alphabet = phi.alphabet_size();
    const double phi_delta = cfg.phi_penalty ? -static_cast<double>(alphabet) : 0.0;

    const int m_old = ct.state_count();
    std::vector<char> affected(m_old, 0);
    bool any = false;
    for (int sym = 0; sym < alphabet; ++sym) {
        const int idx = realized_index(ct, symbol_char(sym) + parent);
        if (idx >= 0) {
            affected[idx] = 1;
            any = true;
        }
    }
    if (!any) return phi_delta;

    std::vector<int> new_id_at_time(ct.cycles() + 1, -1);
    for (int s = 0; s < m_old; ++s) {
        if (!affected[s]) continue;
        for (int t : ct.visit_times(s)) new_id_at_time[t] = m_old;
    }
    return delta_relabel(ct, h, cfg, affected, new_id_at_time, 1, phi_delta);
}

} // namespace phimdp
