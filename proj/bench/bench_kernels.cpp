// Times the serial reference kernels against their OpenMP variants on
// synthetic dense problems. Build target: phimdp-bench.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "phimdp/mdp_estimate.hpp"
#include "phimdp/icost.hpp"
#include "phimdp/parallel.hpp"
#include "phimdp/value_iteration.hpp"

using namespace phimdp;

namespace {

MdpEstimate random_mdp(int states, int actions, std::mt19937_64& rng) {
    MdpEstimate est;
    est.states.resize(states);
    est.actions = actions;
    est.transition.assign(static_cast<std::size_t>(states) * actions * states, 0.0);
    est.reward.assign(est.transition.size(), 0.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int s = 0; s < states; ++s)
        for (int a = 0; a < actions; ++a) {
            const std::size_t row = (static_cast<std::size_t>(s) * actions + a) * states;
            double total = 0.0;
            for (int s2 = 0; s2 < states; ++s2) {
                est.transition[row + s2] = unit(rng);
                total += est.transition[row + s2];
                est.reward[row + s2] = unit(rng);
            }
            for (int s2 = 0; s2 < states; ++s2) est.transition[row + s2] /= total;
        }
    return est;
}

UMatrices random_u(int states, int actions, int rewards, std::mt19937_64& rng) {
    UMatrices u;
    u.states = states;
    u.actions = actions;
    u.rewards = rewards;
    u.u.assign(static_cast<std::size_t>(actions) * rewards * states * states, 0.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int s = 0; s < states; ++s)
        for (int a = 0; a < actions; ++a) {
            double total = 0.0;
            std::vector<double> row(static_cast<std::size_t>(rewards) * states);
            for (double& x : row) total += (x = unit(rng));
            std::size_t i = 0;
            for (int r = 0; r < rewards; ++r)
                for (int s2 = 0; s2 < states; ++s2)
                    u.u[((static_cast<std::size_t>(a) * rewards + r) * states + s) *
                            states +
                        s2] = row[i++] / total;
        }
    return u;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

} // namespace

int main() {
    std::mt19937_64 rng(42);
    std::printf("threads: %d\n\n", thread_count());

    {
        const int states = 512, actions = 4, sweeps = 40;
        const MdpEstimate est = random_mdp(states, actions, rng);
        std::vector<double> v(states, 0.0), q(static_cast<std::size_t>(states) * actions),
            next(states);

        auto t0 = std::chrono::steady_clock::now();
        for (int i = 0; i < sweeps; ++i) {
            vi_sweep_serial(est, 0.95, v, q, next);
            v.swap(next);
        }
        const double serial = seconds_since(t0);
        const double checksum_serial = v[0];

        std::fill(v.begin(), v.end(), 0.0);
        t0 = std::chrono::steady_clock::now();
        for (int i = 0; i < sweeps; ++i) {
            vi_sweep_parallel(est, 0.95, v, q, next);
            v.swap(next);
        }
        const double parallel = seconds_since(t0);

        std::printf("value-iteration sweep  (%d states, %d actions, %d sweeps)\n",
                    states, actions, sweeps);
        std::printf("  serial   %.4fs\n  parallel %.4fs\n  speedup  %.2fx\n",
                    serial, parallel, serial / parallel);
        std::printf("  outputs identical: %s\n\n",
                    v[0] == checksum_serial ? "yes" : "NO");
    }

    {
        const int states = 256, actions = 2, rewards = 4, steps = 20000;
        const UMatrices u = random_u(states, actions, rewards, rng);
        std::vector<int> actions_seq(steps), rewards_seq(steps);
        for (int i = 0; i < steps; ++i) {
            actions_seq[i] = static_cast<int>(rng() % actions);
            rewards_seq[i] = static_cast<int>(rng() % rewards);
        }

        auto t0 = std::chrono::steady_clock::now();
        const double serial_bits =
            forward_log_marginal(u, 0, actions_seq, rewards_seq, Exec::serial);
        const double serial = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        const double parallel_bits =
            forward_log_marginal(u, 0, actions_seq, rewards_seq, Exec::parallel);
        const double parallel = seconds_since(t0);

        std::printf("forward marginal       (%d states, %d steps)\n", states, steps);
        std::printf("  serial   %.4fs\n  parallel %.4fs\n  speedup  %.2fx\n",
                    serial, parallel, serial / parallel);
        std::printf("  outputs identical: %s\n", serial_bits == parallel_bits ? "yes" : "NO");
    }
    return 0;
}
