#include "phimdp/icost.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace phimdp {

UMatrices build_u_matrices(const CountTensor& ct) {
    UMatrices u;
    u.states = ct.state_count();
    u.actions = ct.action_count();
    u.rewards = ct.reward_count();
    const std::size_t m = u.states;
    u.u.assign(static_cast<std::size_t>(u.actions) * u.rewards * m * m, 0.0);

    for (int s = 0; s < u.states; ++s)
        for (int a = 0; a < u.actions; ++a) {
            const long long total = ct.sa_total(s, a);
            if (total == 0) continue;
            long long nonzero = 0;
            for (const auto& [s2, rewards] : ct.block(s, a))
                for (int r = 0; r < u.rewards; ++r) {
                    if (rewards[r] == 0) continue;
                    ++nonzero;
                    u.u[((static_cast<std::size_t>(a) * u.rewards + r) * m + s) * m + s2] =
                        static_cast<double>(rewards[r]) / static_cast<double>(total);
                }
            u.params_sparse += nonzero - 1;
        }
    u.params_literal = static_cast<long long>(m) * (m - 1) * u.actions *
                       (u.rewards - 1);
    return u;
}

double forward_log_marginal(const UMatrices& u, int start_state,
                            std::span<const int> actions, std::span<const int> rewards,
                            Exec exec) {
    if (actions.size() != rewards.size())
        throw std::invalid_argument("forward: action and reward sequences differ in length");
    if (start_state < 0 || start_state >= u.states)
        throw std::invalid_argument("forward: start state out of range");

    const int m = u.states;
    std::vector<double> v(m, 0.0), w(m, 0.0);
    v[start_state] = 1.0;
    double log_prob = 0.0;

    for (std::size_t step = 0; step < actions.size(); ++step) {
        const double* mat =
            &u.u[(static_cast<std::size_t>(actions[step]) * u.rewards + rewards[step]) *
                 m * m];
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
            for (int j = 0; j < m; ++j) {
                double acc = 0.0;
                for (int i = 0; i < m; ++i)
                    acc += v[i] * mat[static_cast<std::size_t>(i) * m + j];
                w[j] = acc;
            }
        } else {
            for (int j = 0; j < m; ++j) {
                double acc = 0.0;
                for (int i = 0; i < m; ++i)
                    acc += v[i] * mat[static_cast<std::size_t>(i) * m + j];
                w[j] = acc;
            }
        }
        // rescale to dodge underflow; the scale factors carry the probability
        double scale = 0.0;
        for (int j = 0; j < m; ++j) scale += w[j];
        if (scale <= 0.0) return -std::numeric_limits<double>::infinity();
        log_prob += std::log2(scale);
        for (int j = 0; j < m; ++j) v[j] = w[j] / scale;
    }
    return log_prob;
}

double icost_bits(const CountTensor& ct, const SuffixSet& phi, const History& h,
                  const CostConfig& cfg, Exec exec) {
    const double phi_bits = cfg.phi_penalty ? phi.description_length() : 0.0;
    const long long n = ct.transitions();
    if (n == 0) return phi_bits;

    const UMatrices u = build_u_matrices(ct);
    std::vector<int> actions, rewards;
    actions.reserve(n);
    rewards.reserve(n);
    for (std::size_t t = 2; t <= ct.cycles(); ++t) {
        actions.push_back(h.action(t - 1));
        rewards.push_back(h.reward(t));
    }
    const double log_prob =
        forward_log_marginal(u, ct.state_sequence().front(), actions, rewards, exec);
    if (std::isinf(log_prob)) return std::numeric_limits<double>::infinity();

    const long long params = cfg.icost_literal_m ? u.params_literal : u.params_sparse;
    return -log_prob +
           0.5 * static_cast<double>(params) * std::log2(static_cast<double>(n)) +
           phi_bits;
}

double icost_bits(const SuffixSet& phi, const History& h, const CostConfig& cfg,
                  Exec exec) {
    return icost_bits(CountTensor(phi, h), phi, h, cfg, exec);
}

} // namespace phimdp
