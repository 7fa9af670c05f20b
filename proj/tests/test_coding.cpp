#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "phimdp/coding.hpp"

using namespace phimdp;

namespace {

CodeSpec spec(CodeMode mode, double alpha = 0.5) { return CodeSpec{mode, alpha}; }

double bits(std::vector<long long> counts, CodeMode mode, double alpha = 0.5) {
    return code_length(CountVector{std::move(counts)}, spec(mode, alpha));
}

} // namespace

TEST_CASE("entropy of basic distributions") {
    std::vector<double> uniform4{0.25, 0.25, 0.25, 0.25};
    CHECK(entropy(uniform4) == doctest::Approx(2.0).epsilon(1e-12));

    std::vector<double> point{1.0, 0.0};
    CHECK(entropy(point) == doctest::Approx(0.0).epsilon(1e-12));

    std::vector<double> skew{0.75, 0.25};
    const double expect = -(0.75 * std::log2(0.75) + 0.25 * std::log2(0.25));
    CHECK(entropy(skew) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("entropy input validation") {
    CHECK_THROWS_AS(entropy(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(entropy(std::vector<double>{-0.1, 1.1}), std::invalid_argument);
    CHECK_THROWS_AS(entropy(std::vector<double>{0.3, 0.3}), std::invalid_argument);
}

TEST_CASE("scaled entropy is exact on balanced power-of-two counts") {
    std::vector<long long> counts{8, 8};
    CHECK(scaled_entropy(counts) == 16.0); // 16 * H(1/2) with no roundoff
    std::vector<long long> four{4, 4, 4, 4};
    CHECK(scaled_entropy(four) == 32.0); // 16 * log2(4)
}

TEST_CASE("scaled entropy matches the direct sum on random counts") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 6);
        std::vector<long long> counts(m);
        long long n = 0;
        for (auto& c : counts) n += (c = static_cast<long long>(rng() % 40));
        if (n == 0) counts[0] = n = 1;
        double direct = 0.0;
        for (long long c : counts)
            if (c > 0) direct -= static_cast<double>(c) * std::log2(static_cast<double>(c) / static_cast<double>(n));
        CHECK(scaled_entropy(counts) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("empty blocks code to zero bits in every mode") {
    for (CodeMode mode : {CodeMode::exact, CodeMode::sparse, CodeMode::combinatorial,
                          CodeMode::incremental}) {
        CHECK(bits({0, 0, 0}, mode) == 0.0);
        CHECK(bits({0}, mode) == 0.0);
    }
}

TEST_CASE("exact mode on worked examples") {
    // all mass on one of two symbols: no entropy, half a log for the parameter
    CHECK(bits({4, 0}, CodeMode::exact) == doctest::Approx(1.0).epsilon(1e-12));
    // balanced pair: 4 bits of entropy plus half of log2(4)
    CHECK(bits({2, 2}, CodeMode::exact) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(bits({8, 8}, CodeMode::exact) == doctest::Approx(18.0).epsilon(1e-12));
}

TEST_CASE("sparse mode drops parameters of unused symbols but pays the mask") {
    // only one symbol used: m' = 1 kills the parameter cost, mask costs m = 2
    CHECK(bits({4, 0}, CodeMode::sparse) == doctest::Approx(2.0).epsilon(1e-12));
    // both used: same parameter count as exact plus the mask
    CHECK(bits({2, 2}, CodeMode::sparse) == doctest::Approx(7.0).epsilon(1e-12));
}

TEST_CASE("combinatorial mode on worked examples") {
    // log2 C(4,2) + (m-1) log2 n
    CHECK(bits({2, 2}, CodeMode::combinatorial) ==
          doctest::Approx(std::log2(6.0) + 2.0).epsilon(1e-12));
    CHECK(bits({4, 0}, CodeMode::combinatorial) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("incremental mode on the closed-form pair") {
    // two symbols once each under alpha = 1/2: the marginal is exactly 1/8
    CHECK(bits({1, 1}, CodeMode::incremental, 0.5) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("incremental mode equals the online estimator's total") {
    // independent oracle: feed a random symbol sequence to the sequential
    // predictor p(i) = (n_i + alpha) / (n + m alpha) and sum its code lengths
    std::mt19937_64 rng(7);
    for (double alpha : {0.5, 1.0, 2.0}) {
        for (int trial = 0; trial < 20; ++trial) {
            const int m = 2 + static_cast<int>(rng() % 5);
            const int n = 1 + static_cast<int>(rng() % 200);
            std::vector<long long> counts(m, 0);
            double online_bits = 0.0;
            for (int t = 0; t < n; ++t) {
                const int sym = static_cast<int>(rng() % m);
                const double p = (static_cast<double>(counts[sym]) + alpha) /
                                 (static_cast<double>(t) + m * alpha);
                online_bits -= std::log2(p);
                ++counts[sym];
            }
            CHECK(bits(counts, CodeMode::incremental, alpha) ==
                  doctest::Approx(online_bits).epsilon(1e-9));
        }
    }
}

TEST_CASE("incremental mode ignores which symbols carry the counts") {
    const double a = bits({5, 0, 2, 0}, CodeMode::incremental);
    const double b = bits({0, 2, 0, 5}, CodeMode::incremental);
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("code lengths are permutation invariant in every mode") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 5);
        std::vector<long long> counts(m);
        for (auto& c : counts) c = static_cast<long long>(rng() % 20);
        if (std::accumulate(counts.begin(), counts.end(), 0LL) == 0) counts[0] = 3;
        std::vector<long long> shuffled = counts;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (CodeMode mode : {CodeMode::exact, CodeMode::sparse,
                              CodeMode::combinatorial, CodeMode::incremental}) {
            CHECK(bits(counts, mode) == doctest::Approx(bits(shuffled, mode)).epsilon(1e-12));
        }
    }
}

TEST_CASE("mode relations hold on random counts") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 6);
        std::vector<long long> counts(m);
        long long n = 0;
        for (auto& c : counts) n += (c = static_cast<long long>(rng() % 30));
        if (n == 0) counts[0] = n = 1;

        const double nh = scaled_entropy(counts);
        const double exact = bits(counts, CodeMode::exact);
        const double sparse = bits(counts, CodeMode::sparse);
        const double comb = bits(counts, CodeMode::combinatorial);

        // the parametric penalty is nonnegative once n >= 1
        CHECK(exact >= nh - 1e-9);
        // dropping unused parameters can cost at most the m-bit mask
        CHECK(sparse <= exact + static_cast<double>(m) + 1e-9);
        // the multinomial coefficient never beats the entropy bound
        CHECK(comb - (m - 1) * std::log2(static_cast<double>(n)) <= nh + 1e-9);
    }
}

TEST_CASE("incremental stays within a few bits of exact on long blocks") {
    // the online estimator's regret over the two-part code is O(m) bits
    std::vector<long long> counts{300, 120, 80};
    const double exact = bits(counts, CodeMode::exact);
    const double inc = bits(counts, CodeMode::incremental);
    CHECK(std::abs(inc - exact) < 6.0);
}

TEST_CASE("count vector helpers") {
    CountVector v{{3, 0, 2}};
    CHECK(v.total() == 5);
    CHECK(v.categories() == 3);
    CHECK(v.occupied() == 2);
}

TEST_CASE("code length input validation") {
    CHECK_THROWS_AS(code_length(CountVector{{}}, spec(CodeMode::exact)),
                    std::invalid_argument);
    CHECK_THROWS_AS(code_length(CountVector{{-1, 2}}, spec(CodeMode::exact)),
                    std::invalid_argument);
    CHECK_THROWS_AS(code_length(CountVector{{1, 1}}, spec(CodeMode::incremental, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(code_length(CountVector{{1, 1}}, spec(CodeMode::incremental, -1.0)),
                    std::invalid_argument);
}

TEST_CASE("block form agrees with the dense form") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 8);
        std::vector<long long> dense(m, 0);
        std::vector<long long> nonzero;
        for (auto& c : dense)
            if (rng() % 2) nonzero.push_back(c = 1 + static_cast<long long>(rng() % 15));
        if (nonzero.empty()) {
            dense[0] = 4;
            nonzero.push_back(4);
        }
        for (CodeMode mode : {CodeMode::exact, CodeMode::sparse,
                              CodeMode::combinatorial, CodeMode::incremental}) {
            CHECK(code_length(CountVector{dense}, spec(mode)) ==
                  doctest::Approx(code_length_block(nonzero, m, spec(mode)))
                      .epsilon(1e-12));
        }
    }
}
