#include <doctest.h>

#include <random>

#include "ci/symfun.hpp"

using namespace ci;

namespace {

// brute-force oracle: elementary symmetric polynomials by expanding
// prod_j (1 + d_j x)
std::vector<BigInt> elementary_by_expansion(const std::vector<long long>& degrees) {
    std::vector<BigInt> coeff = {1};
    for (long long d : degrees) {
        coeff.push_back(0);
        for (std::size_t k = coeff.size() - 1; k >= 1; --k) coeff[k] += d * coeff[k - 1];
    }
    coeff.erase(coeff.begin());
    return coeff;
}

}  // namespace

TEST_CASE("power sums of the paper multidegrees") {
    CHECK(power_sums({46, 36, 34, 21, 14, 13, 12, 11, 3, 2, 2}, 5) ==
          std::vector<BigInt>{194, 5656, 200600, 7790356, 317267984});
    CHECK(power_sums({88, 77, 72, 54, 48, 31, 29}, 5) ==
          std::vector<BigInt>{399, 25879, BigInt("1833489"), BigInt("137438707"),
                              BigInt("10682130249")});
    CHECK(power_sums({}, 5) == std::vector<BigInt>{0, 0, 0, 0, 0});
    CHECK_THROWS_AS(power_sums({2, 3}, 0), std::invalid_argument);
}

TEST_CASE("Newton recurrence small cases") {
    CHECK(elementary_from_power_sums({7}) == std::vector<Rational>{7});
    CHECK(elementary_from_power_sums({3, 5}) == std::vector<Rational>{3, 2});
    // six variables all equal to 1: s_i = 6 for every i, e_5 = C(6,5) = 6
    CHECK(elementary_from_power_sums({6, 6, 6, 6, 6}).back() == 6);
}

TEST_CASE("explicit g_j evaluations") {
    CHECK(g_explicit(3, {1, 1, 1}) == 0);
    CHECK(g_explicit(2, {194, 5656}) == 15990);
    CHECK(g_explicit(1, {0}) == 0);
    CHECK_THROWS_AS(g_explicit(7, {1, 2, 3, 4, 5, 6, 7}), std::invalid_argument);
    CHECK_THROWS_AS(g_explicit(3, {1, 2}), std::invalid_argument);
}

TEST_CASE("recurrence agrees with the explicit g_1..g_6 on random tuples") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> dist(-100, 100);
    for (int trial = 0; trial < 1000; ++trial) {
        const int j = 1 + static_cast<int>(trial % 6);
        std::vector<BigInt> t;
        for (int i = 0; i < j; ++i) t.push_back(dist(rng));
        const auto e = elementary_from_power_sums(t);
        CHECK(e.back() == g_explicit(j, t));
    }
}

TEST_CASE("recovers true elementary symmetric values of degree lists") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> deg(1, 12);
    std::uniform_int_distribution<int> len(1, 8);
    for (int trial = 0; trial < 300; ++trial) {
        const int r = len(rng);
        std::vector<long long> degrees;
        for (int i = 0; i < r; ++i) degrees.push_back(deg(rng));
        const int k = r + 3;  // also check the vanishing tail e_j = 0 for j > r
        const auto e = elementary_from_power_sums(power_sums(degrees, k));
        const auto expected = elementary_by_expansion(degrees);
        for (int j = 1; j <= k; ++j) {
            if (j <= r)
                CHECK(e[j - 1] == Rational(expected[j - 1]));
            else
                CHECK(e[j - 1] == 0);
        }
    }
}
