#ifndef PHIMDP_ICOST_HPP
#define PHIMDP_ICOST_HPP

#include <span>

#include "phimdp/cost.hpp"
#include "phimdp/count_tensor.hpp"
#include "phimdp/parallel.hpp"

namespace phimdp {

// Joint successor-reward frequency matrices: for each (action, reward) one
// m x m matrix U with U[s][s'] = count(s,a,s',r) / total(s,a). Summing U over
// rewards recovers the transition estimate row by row.
struct UMatrices {
    int states = 0;
    int actions = 0;
    int rewards = 0;
    std::vector<double> u; // [(a * rewards + r) * states + s] * states + s'

    double at(int a, int r, int s, int s2) const {
        return u[((static_cast<std::size_t>(a) * rewards + r) * states + s) * states + s2];
    }
    // independent parameters: nonzero entries minus one normalization
    // constraint per nonempty (state, action) row
    long long params_sparse = 0;
    // m(m-1)|A|(|R|-1), the dense parameter count
    long long params_literal = 0;
};

UMatrices build_u_matrices(const CountTensor& ct);

// log2 of the probability the matrices assign to the reward sequence given
// the action sequence, summed over all state paths from start_state. Returns
// -infinity when the sequence has probability zero. The parallel variant is
// bit-identical to the serial one.
double forward_log_marginal(const UMatrices& u, int start_state,
                            std::span<const int> actions, std::span<const int> rewards,
                            Exec exec = Exec::parallel);

// Reward-only description length: -log2 of the forward marginal plus half
// the parameter count times log2 of the sample size, plus the map bits.
// cfg.icost_literal_m switches the parameter count to the dense form.
double icost_bits(const CountTensor& ct, const SuffixSet& phi, const History& h,
                  const CostConfig& cfg, Exec exec = Exec::parallel);
double icost_bits(const SuffixSet& phi, const History& h, const CostConfig& cfg,
                  Exec exec = Exec::parallel);

} // namespace phimdp

#endif
