#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ci {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient C(m, N). Follows the vanishing convention
// C(m, N) = 0 for m < N, any integer m (including negative).
BigInt binomial(long long m, long long N);

struct PrimeFactor {
    std::uint64_t prime;
    unsigned exponent;

    bool operator==(const PrimeFactor&) const = default;
};

// Complete factorization with primes strictly increasing.
// The product of prime^exponent reconstructs the input; 1 factors to {}.
using PrimeFactorization = std::vector<PrimeFactor>;

PrimeFactorization factorize(std::uint64_t d);

// Range-checked entry point for BigInt totals; rejects d < 1 or d >= 2^64.
PrimeFactorization factorize_checked(const BigInt& d);

// Exponent of prime p in d, by repeated division. Works for arbitrarily
// large d (composed total degrees exceed 64 bits).
unsigned prime_exponent(BigInt d, std::uint64_t p);

std::string to_decimal(const BigInt& v);
std::string to_decimal(const Rational& v);

}  // namespace ci
