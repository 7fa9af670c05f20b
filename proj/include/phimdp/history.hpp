#ifndef PHIMDP_HISTORY_HPP
#define PHIMDP_HISTORY_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace phimdp {

// Symbol alphabets shared by histories, feature maps and environments.
// Observations and actions are indices; rewards are indices into a declared
// list of numeric payoff values.
struct Alphabets {
    int observations = 0;
    int actions = 0;
    std::vector<double> reward_values;

    int rewards() const { return static_cast<int>(reward_values.size()); }
    void validate() const;
};

// Symbols are rendered as single characters in labels and files: '0'..'9'
// then 'a'..'f'. Alphabets are capped at 16 symbols.
inline constexpr int kMaxSymbols = 16;
char symbol_char(int symbol);
int symbol_index(char c);

// An observation-reward-action record. The action of the most recent cycle
// is pending until the next append completes it.
class History {
public:
    explicit History(Alphabets alphabets);

    // first cycle, produced by an environment reset; no preceding action
    void append_initial(int observation, int reward);
    // completes the pending action of the previous cycle, then adds a cycle
    void append_cycle(int action, int observation, int reward);

    std::size_t cycles() const { return obs_.size(); }
    bool empty() const { return obs_.empty(); }

    // cycle indices are 1-based; action(t) is the action taken after cycle t
    // and exists for t in [1, cycles-1]
    int observation(std::size_t t) const;
    int reward(std::size_t t) const;
    int action(std::size_t t) const;

    const std::vector<int>& observations() const { return obs_; }
    const Alphabets& alphabets() const { return alphabets_; }

    // last min(k, cycles) observations, oldest first, as a label string
    std::string observation_suffix(std::size_t k) const;

    bool operator==(const History& other) const;

private:
    Alphabets alphabets_;
    std::vector<int> obs_;
    std::vector<int> rewards_;
    std::vector<int> actions_; // size == cycles-1 once non-empty

    void check_cycle_(int observation, int reward) const;
};

} // namespace phimdp

#endif
