#include "phimdp/agent.hpp"

#include <algorithm>
#include <stdexcept>

#include "phimdp/rng.hpp"

namespace phimdp {

Agent::Agent(AgentConfig cfg, Alphabets alphabets)
    : cfg_(std::move(cfg)),
      history_(std::move(alphabets)),
      phi_(cfg_.initial_phi ? *cfg_.initial_phi
                            : SuffixSet::root(history_.alphabets().observations)),
      candidate_(phi_),
      search_rng_(mix_seed(cfg_.seed, 0)) {
    if (phi_.alphabet_size() != history_.alphabets().observations)
        throw std::invalid_argument("agent: initial map alphabet mismatch");
    if (cfg_.budget < 0) throw std::invalid_argument("agent: negative budget");
}

int Agent::observe(int observation, int reward) {
    if (history_.empty())
        history_.append_initial(observation, reward);
    else
        history_.append_cycle(pending_action_, observation, reward);

    const long long n = static_cast<long long>(history_.cycles());
    const double gamma =
        std::min(1.0 - 1.0 / static_cast<double>(n), cfg_.gamma_cap);

    const auto bits_of = [&](const SuffixSet& s) {
        return criterion_bits(s, history_, cfg_.cost, cfg_.criterion);
    };

    // search phase: push the candidate around, adopt it when it wins
    double phi_bits = bits_of(phi_);
    if (cfg_.budget > 0) {
        double cand_bits = candidate_ == phi_ ? phi_bits : bits_of(candidate_);
        for (int i = 0; i < cfg_.budget; ++i) {
            PhiImproveResult step =
                phi_improve(candidate_, bits_of, search_rng_, cand_bits);
            candidate_ = std::move(step.set);
            cand_bits = step.bits_after;
            if (cand_bits < phi_bits) {
                phi_ = candidate_;
                phi_bits = cand_bits;
                adoption_bits_.push_back(cand_bits);
            }
        }
    }

    // model, plan, act
    const CountTensor ct(phi_, history_);
    const std::vector<double>& values = history_.alphabets().reward_values;
    const MdpEstimate est = cfg_.exploration.enabled
                                ? extend_exploration(ct, values, gamma, cfg_.exploration)
                                : estimate_mdp(ct, values);
    const ValueFunction vf = value_iteration(est, gamma, cfg_.vi);
    const int present = ct.state_sequence().back();
    const int action = best_action(vf, present);
    pending_action_ = action;

    last_.cycle = n;
    last_.action = action;
    last_.states = ct.state_count();
    last_.gamma = gamma;
    last_.cost_bits = cfg_.criterion == Criterion::cost
                          ? phi_bits
                          : cost_bits(ct, phi_, cfg_.cost);
    last_.icost_bits = cfg_.criterion == Criterion::icost
                           ? phi_bits
                           : icost_bits(ct, phi_, history_, cfg_.cost);
    last_.value = vf.v[present];
    return action;
}

RunLog run_experiment(const AgentConfig& cfg, Environment& env, long long cycles,
                      const std::string& env_name) {
    if (cycles < 1) throw std::invalid_argument("run_experiment: need at least one cycle");
    Agent agent(cfg, env.alphabets());
    RunLog log;
    log.env_name = env_name;
    log.seed = cfg.seed;
    log.rows.reserve(cycles);

    auto [o, r] = env.reset();
    for (long long t = 1; t <= cycles; ++t) {
        const int a = agent.observe(o, r);
        const Agent::CycleInfo& info = agent.last();
        log.rows.push_back({t, o, r, a, info.states, info.cost_bits, info.icost_bits,
                            info.value});
        if (t < cycles) std::tie(o, r) = env.step(a);
    }
    log.final_phi = agent.phi();
    log.adoption_bits = agent.adoption_bits();
    return log;
}

} // namespace phimdp
