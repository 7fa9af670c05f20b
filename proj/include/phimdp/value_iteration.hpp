#ifndef PHIMDP_VALUE_ITERATION_HPP
#define PHIMDP_VALUE_ITERATION_HPP

#include <span>

#include "phimdp/mdp_estimate.hpp"
#include "phimdp/parallel.hpp"

namespace phimdp {

struct ValueFunction {
    std::vector<double> v;  // per state
    std::vector<double> q;  // [s][a]
    int actions = 0;
    double gamma = 0.0;
    double residual = 0.0;  // sup-norm change of the last sweep
    long long sweeps = 0;
    bool converged = false;

    double q_at(int s, int a) const {
        return q[static_cast<std::size_t>(s) * actions + a];
    }
};

struct ViConfig {
    double tol = 1e-8;
    long long max_sweeps = 1000000;
    Exec exec = Exec::parallel;
};

// One synchronous sweep: q = expected reward + gamma * T v_in, v_out = max_a q.
// Both variants produce bit-identical output (each state is reduced in a
// fixed order); the parallel one distributes states across threads.
void vi_sweep_serial(const MdpEstimate& est, double gamma, std::span<const double> v_in,
                     std::span<double> q_out, std::span<double> v_out);
void vi_sweep_parallel(const MdpEstimate& est, double gamma, std::span<const double> v_in,
                       std::span<double> q_out, std::span<double> v_out);

// Sweeps from v = 0 until the sup-norm change drops to tol (or max_sweeps).
// The returned v is exactly max_a q of the final sweep.
ValueFunction value_iteration(const MdpEstimate& est, double gamma,
                              const ViConfig& cfg = {});

// argmax_a q[s][a], ties broken toward the lowest action index
int best_action(const ValueFunction& vf, int state);
int best_action(const MdpEstimate& est, const ValueFunction& vf, const std::string& label);

} // namespace phimdp

#endif
