#include "phimdp/phi_search.hpp"

#include <cmath>

#include "phimdp/rng.hpp"

namespace phimdp {

double criterion_bits(const SuffixSet& phi, const History& h, const CostConfig& cfg,
                      Criterion criterion) {
    return criterion == Criterion::cost ? cost_bits(phi, h, cfg)
                                        : icost_bits(phi, h, cfg);
}

bool accept_improvement(double bits_before, double bits_after, double q) {
    // comparisons with NaN are false, so an undefined improvement (both
    // sides infinite) is rejected
    return bits_before - bits_after > std::log2(q);
}

PhiImproveResult phi_improve(const SuffixSet& phi, const CostFn& bits_of,
                             std::mt19937_64& rng, std::optional<double> known_bits) {
    const std::size_t pick = uniform_index(rng, phi.size());
    const double p = uniform01(rng);
    const double q = uniform01(rng);
    const std::string& member = phi.members()[pick];

    PhiImproveResult res{phi, 0.0, 0.0, false, PhiImproveResult::Move::none, {}};
    res.bits_before = known_bits ? *known_bits : bits_of(phi);
    res.bits_after = res.bits_before;

    std::optional<SuffixSet> proposal;
    if (p > 0.5) {
        proposal = phi.split(member);
        res.move = PhiImproveResult::Move::split;
        res.target = member;
    } else if (!member.empty()) {
        const std::string parent = member.substr(1);
        if (phi.can_merge(parent)) {
            proposal = phi.merge(parent);
            res.move = PhiImproveResult::Move::merge;
            res.target = parent;
        }
    }
    if (!proposal) return res; // impossible move, set unchanged

    const double bits = bits_of(*proposal);
    if (accept_improvement(res.bits_before, bits, q)) {
        res.set = std::move(*proposal);
        res.bits_after = bits;
        res.accepted = true;
    }
    return res;
}

SearchResult search_phi(const History& h, const CostConfig& cfg, Criterion criterion,
                        int iterations, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto bits_of = [&](const SuffixSet& s) {
        return criterion_bits(s, h, cfg, criterion);
    };

    SuffixSet current = SuffixSet::root(h.alphabets().observations);
    double current_bits = bits_of(current);
    SearchResult res{current, current_bits, current, current_bits, {}};
    res.trace.reserve(iterations);

    for (int i = 1; i <= iterations; ++i) {
        PhiImproveResult step = phi_improve(current, bits_of, rng, current_bits);
        current = step.set;
        current_bits = step.bits_after;
        if (current_bits < res.best_bits) {
            res.best = current;
            res.best_bits = current_bits;
        }
        res.trace.push_back({i, current_bits, res.best_bits, step.accepted});
    }
    res.last = current;
    res.last_bits = current_bits;
    return res;
}

} // namespace phimdp
