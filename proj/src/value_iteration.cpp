#include "phimdp/value_iteration.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace phimdp {

namespace {

inline void sweep_state(const MdpEstimate& est, double gamma,
                        std::span<const double> v_in, std::span<double> q_out,
                        std::span<double> v_out, int s) {
    const int m = est.size();
    const int actions = est.actions;
    double best = -std::numeric_limits<double>::infinity();
    for (int a = 0; a < actions; ++a) {
        const std::size_t row = (static_cast<std::size_t>(s) * actions + a) * m;
        double acc = 0.0;
        for (int s2 = 0; s2 < m; ++s2) {
            const double p = est.transition[row + s2];
            if (p != 0.0) acc += p * (est.reward[row + s2] + gamma * v_in[s2]);
        }
        q_out[static_cast<std::size_t>(s) * actions + a] = acc;
        if (acc > best) best = acc;
    }
    v_out[s] = best;
}

} // namespace

void vi_sweep_serial(const MdpEstimate& est, double gamma, std::span<const double> v_in,
                     std::span<double> q_out, std::span<double> v_out) {
    const int m = est.size();
    for (int s = 0; s < m; ++s) sweep_state(est, gamma, v_in, q_out, v_out, s);
}

void vi_sweep_parallel(const MdpEstimate& est, double gamma, std::span<const double> v_in,
                       std::span<double> q_out, std::span<double> v_out) {
    const int m = est.size();
#pragma omp parallel for schedule(static)
    for (int s = 0; s < m; ++s) sweep_state(est, gamma, v_in, q_out, v_out, s);
}

ValueFunction value_iteration(const MdpEstimate& est, double gamma, const ViConfig& cfg) {
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw std::invalid_argument("value_iteration: gamma outside [0, 1)");
    if (est.size() == 0)
        throw std::invalid_argument("value_iteration: empty state space");

    const int m = est.size();
    ValueFunction vf;
    vf.actions = est.actions;
    vf.gamma = gamma;
    vf.v.assign(m, 0.0);
    vf.q.assign(static_cast<std::size_t>(m) * est.actions, 0.0);
    std::vector<double> next(m, 0.0);

    while (vf.sweeps < cfg.max_sweeps) {
        if (cfg.exec == Exec::parallel)
            vi_sweep_parallel(est, gamma, vf.v, vf.q, next);
        else
            vi_sweep_serial(est, gamma, vf.v, vf.q, next);
        ++vf.sweeps;
        double residual = 0.0;
        for (int s = 0; s < m; ++s) {
            const double d = std::abs(next[s] - vf.v[s]);
            if (d > residual) residual = d;
        }
        vf.v.swap(next);
        vf.residual = residual;
        if (residual <= cfg.tol) {
            vf.converged = true;
            break;
        }
    }
    return vf;
}

int best_action(const ValueFunction& vf, int state) {
    if (state < 0 || static_cast<std::size_t>(state) >= vf.v.size())
        throw std::invalid_argument("best_action: unknown state");
    int best = 0;
    double best_q = vf.q_at(state, 0);
    for (int a = 1; a < vf.actions; ++a) {
        const double q = vf.q_at(state, a);
        if (q > best_q) {
            best_q = q;
            best = a;
        }
    }
    return best;
}

int best_action(const MdpEstimate& est, const ValueFunction& vf, const std::string& label) {
    return best_action(vf, est.state_index(label));
}

} // namespace phimdp
