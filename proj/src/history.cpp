#include "phimdp/history.hpp"

#include <stdexcept>

namespace phimdp {

void Alphabets::validate() const {
    if (observations < 1 || observations > kMaxSymbols)
        throw std::invalid_argument("alphabets: observation count out of range");
    if (actions < 1 || actions > kMaxSymbols)
        throw std::invalid_argument("alphabets: action count out of range");
    if (reward_values.empty() || rewards() > kMaxSymbols)
        throw std::invalid_argument("alphabets: reward count out of range");
}

char symbol_char(int symbol) {
    if (symbol < 0 || symbol >= kMaxSymbols)
        throw std::invalid_argument("symbol_char: symbol out of range");
    return symbol < 10 ? static_cast<char>('0' + symbol)
                       : static_cast<char>('a' + symbol - 10);
}

int symbol_index(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw std::invalid_argument("symbol_index: not a symbol character");
}

History::History(Alphabets alphabets) : alphabets_(std::move(alphabets)) {
    alphabets_.validate();
}

void History::check_cycle_(int observation, int reward) const {
    if (observation < 0 || observation >= alphabets_.observations)
        throw std::invalid_argument("history: observation out of alphabet");
    if (reward < 0 || reward >= alphabets_.rewards())
        throw std::invalid_argument("history: reward out of alphabet");
}

void History::append_initial(int observation, int reward) {
    if (!empty())
        throw std::logic_error("history: append_initial on non-empty history");
    check_cycle_(observation, reward);
    obs_.push_back(observation);
    rewards_.push_back(reward);
}

void History::append_cycle(int action, int observation, int reward) {
    if (empty())
        throw std::logic_error("history: append_cycle on empty history");
    if (action < 0 || action >= alphabets_.actions)
        throw std::invalid_argument("history: action out of alphabet");
    check_cycle_(observation, reward);
    actions_.push_back(action);
    obs_.push_back(observation);
    rewards_.push_back(reward);
}

int History::observation(std::size_t t) const {
    if (t < 1 || t > obs_.size()) throw std::out_of_range("history: cycle index");
    return obs_[t - 1];
}

int History::reward(std::size_t t) const {
    if (t < 1 || t > rewards_.size()) throw std::out_of_range("history: cycle index");
    return rewards_[t - 1];
}

int History::action(std::size_t t) const {
    if (t < 1 || t > actions_.size())
        throw std::out_of_range("history: no action recorded for cycle");
    return actions_[t - 1];
}

std::string History::observation_suffix(std::size_t k) const {
    const std::size_t take = k < obs_.size() ? k : obs_.size();
    std::string s;
    s.reserve(take);
    for (std::size_t i = obs_.size() - take; i < obs_.size(); ++i)
        s.push_back(symbol_char(obs_[i]));
    return s;
}

bool History::operator==(const History& other) const {
    return alphabets_.observations == other.alphabets_.observations &&
           alphabets_.actions == other.alphabets_.actions &&
           alphabets_.reward_values == other.alphabets_.reward_values &&
           obs_ == other.obs_ && rewards_ == other.rewards_ &&
           actions_ == other.actions_;
}

} // namespace phimdp
