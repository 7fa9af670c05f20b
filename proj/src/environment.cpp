#include "phimdp/environment.hpp"

#include <stdexcept>

namespace phimdp {

TinyExampleEnv::TinyExampleEnv(std::uint64_t seed) : seed_(seed), rng_(seed) {}

std::pair<int, int> TinyExampleEnv::reset() {
    rng_.seed(seed_);
    o_prev_ = 0;
    const int o = static_cast<int>(rng_() & 1u);
    const int r = 2 * o_prev_ + o;
    o_prev_ = o;
    return {o, r};
}

std::pair<int, int> TinyExampleEnv::step(int action) {
    if (action != 0)
        throw std::invalid_argument("tiny environment: only action 0 exists");
    const int o = static_cast<int>(rng_() & 1u);
    const int r = 2 * o_prev_ + o;
    o_prev_ = o;
    return {o, r};
}

ChainEnv::ChainEnv(int length) : length_(length) {
    if (length < 2 || length > kMaxSymbols)
        throw std::invalid_argument("chain environment: length out of range");
}

std::pair<int, int> ChainEnv::reset() {
    pos_ = 0;
    return {pos_, pos_ == length_ - 1 ? 1 : 0};
}

std::pair<int, int> ChainEnv::step(int action) {
    if (action != 0 && action != 1)
        throw std::invalid_argument("chain environment: action must be 0 or 1");
    pos_ += action == 1 ? 1 : -1;
    if (pos_ < 0) pos_ = 0;
    if (pos_ >= length_) pos_ = length_ - 1;
    return {pos_, pos_ == length_ - 1 ? 1 : 0};
}

std::unique_ptr<Environment> make_environment(const std::string& name,
                                              std::uint64_t seed) {
    if (name == "tiny") return std::make_unique<TinyExampleEnv>(seed);
    if (name.rfind("chain:", 0) == 0) {
        int length = 0;
        try {
            length = std::stoi(name.substr(6));
        } catch (const std::exception&) {
            throw std::invalid_argument("environment: bad chain length in '" + name + "'");
        }
        return std::make_unique<ChainEnv>(length);
    }
    throw std::invalid_argument("environment: unknown name '" + name + "'");
}

} // namespace phimdp
