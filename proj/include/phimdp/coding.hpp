#ifndef PHIMDP_CODING_HPP
#define PHIMDP_CODING_HPP

#include <span>
#include <vector>

namespace phimdp {

// Code-length mode for an i.i.d. symbol block described by its count vector.
//   exact:         n*H(freq) + (m-1)/2 * log2(n)
//   sparse:        n*H(freq) + (m'-1)/2 * log2(n) + m   (m' = occupied categories)
//   combinatorial: log2(n! / prod n_i!) + (m-1) * log2(n)
//   incremental:   -log2 of the Dirichlet(alpha) marginal likelihood, i.e. the
//                  total length of the online estimator that predicts symbol i
//                  with probability (n_i + alpha) / (n + m*alpha)
enum class CodeMode { exact, sparse, combinatorial, incremental };

struct CodeSpec {
    CodeMode mode = CodeMode::exact;
    double alpha = 0.5; // incremental-mode regularizer
};

// Frequency vector over a finite symbol alphabet.
struct CountVector {
    std::vector<long long> counts;

    long long total() const;
    int categories() const { return static_cast<int>(counts.size()); }
    int occupied() const; // categories with count > 0
};

// Shannon entropy of a distribution, in bits. Rejects negative entries and
// vectors whose sum differs from 1 by more than 1e-12.
double entropy(std::span<const double> p);

// n * H(counts / n) computed directly from integer counts so that balanced
// powers of two come out exact. Zero counts contribute nothing.
double scaled_entropy(std::span<const long long> counts);

// Code length in bits of a count vector under the given mode. An all-zero
// vector codes to 0 bits in every mode. Rejects negative counts, empty
// vectors, and alpha <= 0.
double code_length(const CountVector& v, const CodeSpec& spec = {});

// Core used by the tensor block sums: only the nonzero counts are passed,
// together with the full category dimension m.
double code_length_block(std::span<const long long> nonzero_counts, long long m,
                         const CodeSpec& spec);

} // namespace phimdp

#endif
