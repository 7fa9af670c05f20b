#include "phimdp/coding.hpp"

#include <cmath>
#include <stdexcept>

namespace phimdp {

namespace {

constexpr double kLn2 = 0.6931471805599453094172321214581766;

double log2_gamma(double x) {
    // lgamma avoids overflow for the factorial-sized arguments that show up
    // in the combinatorial and incremental modes
    return std::lgamma(x) / kLn2;
}

} // namespace

long long CountVector::total() const {
    long long n = 0;
    for (long long c : counts) n += c;
    return n;
}

int CountVector::occupied() const {
    int m = 0;
    for (long long c : counts)
        if (c > 0) ++m;
    return m;
}

double entropy(std::span<const double> p) {
    if (p.empty()) throw std::invalid_argument("entropy: empty distribution");
    double sum = 0.0;
    for (double x : p) {
        if (x < 0.0) throw std::invalid_argument("entropy: negative probability");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("entropy: probabilities do not sum to 1");
    double h = 0.0;
    for (double x : p)
        if (x > 0.0) h -= x * std::log2(x);
    return h;
}

double scaled_entropy(std::span<const long long> counts) {
    long long n = 0;
    for (long long c : counts) n += c;
    if (n == 0) return 0.0;
    const double log2n = std::log2(static_cast<double>(n));
    double bits = 0.0;
    for (long long c : counts)
        if (c > 0)
            bits += static_cast<double>(c) * (log2n - std::log2(static_cast<double>(c)));
    return bits;
}

double code_length_block(std::span<const long long> nonzero_counts, long long m,
                         const CodeSpec& spec) {
    if (m < 1) throw std::invalid_argument("code_length: need at least one category");
    long long n = 0;
    long long occupied = 0;
    for (long long c : nonzero_counts) {
        if (c < 0) throw std::invalid_argument("code_length: negative count");
        if (c > 0) ++occupied;
        n += c;
    }
    if (occupied > m)
        throw std::invalid_argument("code_length: more occupied categories than categories");
    if (n == 0) return 0.0; // empty blocks code to zero in every mode

    const double dn = static_cast<double>(n);
    const double dm = static_cast<double>(m);
    switch (spec.mode) {
    case CodeMode::exact:
        return scaled_entropy(nonzero_counts) + 0.5 * (dm - 1.0) * std::log2(dn);
    case CodeMode::sparse:
        return scaled_entropy(nonzero_counts) +
               0.5 * (static_cast<double>(occupied) - 1.0) * std::log2(dn) + dm;
    case CodeMode::combinatorial: {
        double bits = log2_gamma(dn + 1.0);
        for (long long c : nonzero_counts)
            if (c > 0) bits -= log2_gamma(static_cast<double>(c) + 1.0);
        return bits + (dm - 1.0) * std::log2(dn);
    }
    case CodeMode::incremental: {
        const double a = spec.alpha;
        if (!(a > 0.0)) throw std::invalid_argument("code_length: alpha must be positive");
        // -log2 [ Gamma(m a)/Gamma(a)^m * prod Gamma(n_i + a) / Gamma(n + m a) ]
        double bits = log2_gamma(dn + dm * a) - log2_gamma(dm * a);
        bits += static_cast<double>(occupied) * log2_gamma(a);
        for (long long c : nonzero_counts)
            if (c > 0) bits -= log2_gamma(static_cast<double>(c) + a);
        return bits;
    }
    }
    throw std::logic_error("code_length: unknown mode");
}

double code_length(const CountVector& v, const CodeSpec& spec) {
    if (v.counts.empty())
        throw std::invalid_argument("code_length: empty count vector");
    return code_length_block(v.counts, v.categories(), spec);
}

} // namespace phimdp
