#ifndef PHIMDP_ENVIRONMENT_HPP
#define PHIMDP_ENVIRONMENT_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>

#include "phimdp/history.hpp"

namespace phimdp {

// A simulated source of observation-reward pairs. reset() starts an episode
// and emits the first cycle; step() consumes an action and emits the next.
// Same seed, same interaction sequence: identical streams.
class Environment {
public:
    virtual ~Environment() = default;
    virtual int observation_count() const = 0;
    virtual int action_count() const = 0;
    virtual std::vector<double> reward_values() const = 0;
    virtual std::pair<int, int> reset() = 0;           // (observation, reward)
    virtual std::pair<int, int> step(int action) = 0;  // (observation, reward)

    Alphabets alphabets() const {
        return Alphabets{observation_count(), action_count(), reward_values()};
    }
};

// Single-action source: observations are fair coin flips, the reward encodes
// the last two observations as r = 2*o_prev + o. The previous observation is
// primed to 0 so the first reward is defined.
class TinyExampleEnv : public Environment {
public:
    explicit TinyExampleEnv(std::uint64_t seed);
    int observation_count() const override { return 2; }
    int action_count() const override { return 1; }
    std::vector<double> reward_values() const override { return {0.0, 1.0, 2.0, 3.0}; }
    std::pair<int, int> reset() override;
    std::pair<int, int> step(int action) override;

private:
    std::uint64_t seed_;
    std::mt19937_64 rng_;
    int o_prev_ = 0;
};

// Deterministic corridor of L cells. Action 0 moves left, 1 moves right,
// both clamped to the ends; the observation is the cell index and the reward
// is 1 exactly in the rightmost cell.
class ChainEnv : public Environment {
public:
    explicit ChainEnv(int length);
    int observation_count() const override { return length_; }
    int action_count() const override { return 2; }
    std::vector<double> reward_values() const override { return {0.0, 1.0}; }
    std::pair<int, int> reset() override;
    std::pair<int, int> step(int action) override;

private:
    int length_;
    int pos_ = 0;
};

// Names: "tiny" or "chain:L". Unknown names throw.
std::unique_ptr<Environment> make_environment(const std::string& name,
                                              std::uint64_t seed);

} // namespace phimdp

#endif
