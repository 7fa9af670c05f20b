#ifndef PHIMDP_PHI_SEARCH_HPP
#define PHIMDP_PHI_SEARCH_HPP

#include <functional>
#include <optional>
#include <random>

#include "phimdp/cost.hpp"
#include "phimdp/icost.hpp"
#include "phimdp/suffix_set.hpp"

namespace phimdp {

enum class Criterion { cost, icost };

double criterion_bits(const SuffixSet& phi, const History& h, const CostConfig& cfg,
                      Criterion criterion);

using CostFn = std::function<double(const SuffixSet&)>;

// The stochastic acceptance rule: a proposal is taken when the improvement
// beats log2 of a uniform draw, so strict improvements always pass and a
// worsening of d bits passes with probability 2^-d.
bool accept_improvement(double bits_before, double bits_after, double q);

struct PhiImproveResult {
    SuffixSet set;
    double bits_before = 0.0;
    double bits_after = 0.0; // of the returned set
    bool accepted = false; // the proposal was adopted
    // the proposed move, even when rejected; none when no legal proposal
    enum class Move { none, split, merge } move = Move::none;
    std::string target; // split member or merge parent
};

// One random neighborhood move. Draws, in order: a member (uniform), the
// split/merge coin p, and the acceptance threshold q. p > 1/2 proposes
// splitting the member; otherwise it proposes merging the member's sibling
// family, which requires every sibling to be present. Impossible proposals
// leave the set unchanged (the draws are still consumed).
PhiImproveResult phi_improve(const SuffixSet& phi, const CostFn& bits_of,
                             std::mt19937_64& rng,
                             std::optional<double> known_bits = std::nullopt);

struct SearchTraceRow {
    int iteration = 0;
    double current_bits = 0.0;
    double best_bits = 0.0;
    bool accepted = false;
};

struct SearchResult {
    SuffixSet best;
    double best_bits = 0.0;
    SuffixSet last;
    double last_bits = 0.0;
    std::vector<SearchTraceRow> trace;
};

// Iterated random moves on a fixed history, starting from the one-state map
// and keeping the cheapest set seen.
SearchResult search_phi(const History& h, const CostConfig& cfg, Criterion criterion,
                        int iterations, std::uint64_t seed);

} // namespace phimdp

#endif
