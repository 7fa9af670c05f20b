#ifndef PHIMDP_SUFFIX_SET_HPP
#define PHIMDP_SUFFIX_SET_HPP

#include <string>
#include <vector>

#include "phimdp/history.hpp"

namespace phimdp {

// A complete, suffix-free set of observation strings. Each member is a leaf
// of a tree that branches on the most recent observation first, so every
// long-enough history matches exactly one member: the map from histories to
// members is the feature map used throughout.
//
// Histories shorter than a matching path are left-padded with symbol 0, so
// the map is total and always lands on a member.
class SuffixSet {
public:
    // construct from an explicit member list; validates completeness and
    // suffix-freeness
    SuffixSet(int alphabet_size, std::vector<std::string> members);

    // the one-state set {empty string}
    static SuffixSet root(int alphabet_size);
    // all strings of the given length; depth 0 is root()
    static SuffixSet full_tree(int alphabet_size, int depth);

    int alphabet_size() const { return alphabet_; }
    const std::vector<std::string>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    const std::string& label(int state) const { return members_[state]; }
    int state_index(const std::string& member) const; // -1 if absent
    int max_depth() const;

    // number of tree nodes; the map itself is charged one bit per node
    std::size_t node_count() const { return nodes_.size(); }
    double description_length() const { return static_cast<double>(nodes_.size()); }

    // member index the history maps to (walks newest observation first,
    // padding with 0 when the history runs out)
    int state_of(const History& h) const { return state_of(h.observations()); }
    int state_of(const std::vector<int>& observations) const {
        return state_of(observations, observations.size());
    }
    // same, on the prefix observations[0 .. prefix_length)
    int state_of(const std::vector<int>& observations, std::size_t prefix_length) const;

    // replace a member by its one-step-older refinements {o + member}
    SuffixSet split(const std::string& member) const;
    // replace the members {o + parent : all o} by parent
    SuffixSet merge(const std::string& parent) const;
    bool can_merge(const std::string& parent) const;

    bool operator==(const SuffixSet& other) const {
        return alphabet_ == other.alphabet_ && members_ == other.members_;
    }

private:
    struct Node {
        std::vector<int> child; // indexed by symbol; empty for leaves
        int member = -1;        // member index for leaves
    };

    int alphabet_ = 0;
    std::vector<std::string> members_; // sorted
    std::vector<Node> nodes_;          // nodes_[0] is the root

    void build_();
};

} // namespace phimdp

#endif
