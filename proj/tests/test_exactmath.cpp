#include <doctest.h>

#include <random>

#include "ci/exactmath.hpp"

using namespace ci;

TEST_CASE("binomial vanishing convention") {
    CHECK(binomial(11, 12) == 0);
    CHECK(binomial(-5, 3) == 0);
    CHECK(binomial(12, 12) == 1);
    CHECK(binomial(0, 0) == 1);
    CHECK_THROWS_AS(binomial(5, -1), std::invalid_argument);
}

TEST_CASE("binomial matches Pascal recurrence up to m = 200") {
    // independent oracle: full Pascal triangle
    const int M = 200;
    std::vector<std::vector<BigInt>> pascal(M + 1);
    pascal[0] = {1};
    for (int m = 1; m <= M; ++m) {
        pascal[m].assign(m + 1, 1);
        for (int k = 1; k < m; ++k) pascal[m][k] = pascal[m - 1][k - 1] + pascal[m - 1][k];
    }
    for (int m = 0; m <= M; m += 7)
        for (int k = 0; k <= m; ++k) CHECK(binomial(m, k) == pascal[m][k]);
    CHECK(binomial(100, 12) == pascal[100][12]);
    // Pascal identity directly on the implementation
    for (int m = 1; m <= 200; m += 13)
        for (int k = 1; k <= m; k += 5)
            CHECK(binomial(m, k) == binomial(m - 1, k - 1) + binomial(m - 1, k));
}

TEST_CASE("factorize paper totals") {
    CHECK(factorize(340867118592ull) ==
          PrimeFactorization{{2, 9}, {3, 5}, {7, 2}, {11, 1}, {13, 1}, {17, 1}, {23, 1}});
    CHECK(factorize(1136843237376ull) ==
          PrimeFactorization{{2, 11}, {3, 6}, {7, 1}, {11, 2}, {29, 1}, {31, 1}});
    CHECK(factorize(1).empty());
    CHECK(factorize(2) == PrimeFactorization{{2, 1}});
    CHECK(factorize(9007199254740881ull) == PrimeFactorization{{9007199254740881ull, 1}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize_checked rejects out-of-range input") {
    CHECK_THROWS_AS(factorize_checked(BigInt("18446744073709551616")), std::range_error);
    CHECK_THROWS_AS(factorize_checked(0), std::invalid_argument);
    CHECK(factorize_checked(BigInt("340867118592")).size() == 7);
}

TEST_CASE("factorize round-trips on random inputs up to 1e13") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<std::uint64_t> dist(1, 10'000'000'000'000ull);
    for (int i = 0; i < 10'000; ++i) {
        const std::uint64_t d = dist(rng);
        BigInt prod = 1;
        for (const auto& [p, e] : factorize(d))
            for (unsigned j = 0; j < e; ++j) prod *= p;
        CHECK(prod == d);
    }
}

TEST_CASE("prime_exponent on big values") {
    BigInt d = 1;
    for (int i = 0; i < 44; ++i) d *= 2;
    d *= 81;
    CHECK(prime_exponent(d, 2) == 44);
    CHECK(prime_exponent(d, 3) == 4);
    CHECK(prime_exponent(d, 5) == 0);
}

TEST_CASE("rational inverses multiply to one") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(-1000, 1000);
    for (int i = 0; i < 200; ++i) {
        long long a = dist(rng), b = dist(rng);
        if (a == 0 || b == 0) continue;
        Rational q = Rational(BigInt(a)) / BigInt(b);
        CHECK(q * (Rational(BigInt(b)) / BigInt(a)) == 1);
    }
}

TEST_CASE("decimal serialization is plain") {
    CHECK(to_decimal(BigInt("-123456789012345678901234567890")) ==
          "-123456789012345678901234567890");
    CHECK(to_decimal(Rational(3, 6)) == "1/2");
}
