#include "phimdp/suffix_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace phimdp {

SuffixSet::SuffixSet(int alphabet_size, std::vector<std::string> members)
    : alphabet_(alphabet_size), members_(std::move(members)) {
    if (alphabet_ < 1 || alphabet_ > kMaxSymbols)
        throw std::invalid_argument("suffix set: alphabet size out of range");
    if (members_.empty())
        throw std::invalid_argument("suffix set: no members");
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw std::invalid_argument("suffix set: duplicate member");
    build_();
}

SuffixSet SuffixSet::root(int alphabet_size) {
    return SuffixSet(alphabet_size, {std::string()});
}

SuffixSet SuffixSet::full_tree(int alphabet_size, int depth) {
    if (depth < 0) throw std::invalid_argument("suffix set: negative depth");
    std::vector<std::string> members{std::string()};
    for (int d = 0; d < depth; ++d) {
        std::vector<std::string> next;
        next.reserve(members.size() * alphabet_size);
        for (const auto& m : members)
            for (int sym = 0; sym < alphabet_size; ++sym)
                next.push_back(symbol_char(sym) + m);
        members = std::move(next);
    }
    return SuffixSet(alphabet_size, std::move(members));
}

void SuffixSet::build_() {
    nodes_.assign(1, Node{});
    for (int mi = 0; mi < static_cast<int>(members_.size()); ++mi) {
        const std::string& m = members_[mi];
        int node = 0;
        // the tree branches on the newest observation first, so a member is
        // inserted back to front
        for (auto it = m.rbegin(); it != m.rend(); ++it) {
            const int sym = symbol_index(*it);
            if (sym >= alphabet_)
                throw std::invalid_argument("suffix set: member symbol out of alphabet");
            if (nodes_[node].member >= 0)
                throw std::invalid_argument(
                    "suffix set: member is a suffix of another member");
            if (nodes_[node].child.empty())
                nodes_[node].child.assign(alphabet_, -1);
            if (nodes_[node].child[sym] < 0) {
                nodes_[node].child[sym] = static_cast<int>(nodes_.size());
                nodes_.emplace_back();
            }
            node = nodes_[node].child[sym];
        }
        if (nodes_[node].member >= 0 || !nodes_[node].child.empty())
            throw std::invalid_argument("suffix set: member is a suffix of another member");
        nodes_[node].member = mi;
    }
    // completeness: every internal node carries all children
    for (const Node& node : nodes_) {
        if (node.member >= 0) continue;
        if (node.child.empty() || std::count(node.child.begin(), node.child.end(), -1) > 0)
            throw std::invalid_argument("suffix set: incomplete tree");
    }
}

int SuffixSet::state_index(const std::string& member) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), member);
    if (it == members_.end() || *it != member) return -1;
    return static_cast<int>(it - members_.begin());
}

int SuffixSet::max_depth() const {
    std::size_t depth = 0;
    for (const auto& m : members_) depth = std::max(depth, m.size());
    return static_cast<int>(depth);
}

int SuffixSet::state_of(const std::vector<int>& observations,
                        std::size_t prefix_length) const {
    int node = 0;
    std::size_t remaining = prefix_length;
    while (nodes_[node].member < 0) {
        const int sym = remaining > 0 ? observations[--remaining] : 0;
        node = nodes_[node].child[sym];
    }
    return nodes_[node].member;
}

SuffixSet SuffixSet::split(const std::string& member) const {
    if (state_index(member) < 0)
        throw std::invalid_argument("suffix set: split target is not a member");
    std::vector<std::string> next;
    next.reserve(members_.size() + alphabet_ - 1);
    for (const auto& m : members_)
        if (m != member) next.push_back(m);
    for (int sym = 0; sym < alphabet_; ++sym)
        next.push_back(symbol_char(sym) + member);
    return SuffixSet(alphabet_, std::move(next));
}

bool SuffixSet::can_merge(const std::string& parent) const {
    for (int sym = 0; sym < alphabet_; ++sym)
        if (state_index(symbol_char(sym) + parent) < 0) return false;
    return true;
}

SuffixSet SuffixSet::merge(const std::string& parent) const {
    if (!can_merge(parent))
        throw std::invalid_argument(
            "suffix set: merge needs every child of the parent to be a member");
    std::vector<std::string> children;
    children.reserve(alphabet_);
    for (int sym = 0; sym < alphabet_; ++sym)
        children.push_back(symbol_char(sym) + parent);
    std::vector<std::string> next;
    next.reserve(members_.size() - alphabet_ + 1);
    for (const auto& m : members_)
        if (std::find(children.begin(), children.end(), m) == children.end())
            next.push_back(m);
    next.push_back(parent);
    return SuffixSet(alphabet_, std::move(next));
}

} // namespace phimdp
