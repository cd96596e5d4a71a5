#include "ci/exactmath.hpp"

#include <stdexcept>

namespace ci {

BigInt binomial(long long m, long long N) {
    if (N < 0) throw std::invalid_argument("binomial: N must be nonnegative");
    if (m < N) return 0;
    // C(m, N) = C(m, m-N); take the shorter loop.
    long long k = N;
    if (m - N < k) k = m - N;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (m - k + i);
        result /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

namespace {

// 2,3,5 wheel increments starting from 7.
constexpr int kWheel[] = {4, 2, 4, 2, 4, 6, 2, 6};

}  // namespace

PrimeFactorization factorize(std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("factorize: d must be positive");
    PrimeFactorization out;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (d % p == 0) {
            d /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    };
    strip(2);
    strip(3);
    strip(5);
    std::uint64_t p = 7;
    int wi = 0;
    while (p <= d / p) {
        strip(p);
        p += static_cast<std::uint64_t>(kWheel[wi]);
        wi = (wi + 1) & 7;
    }
    if (d > 1) out.push_back({d, 1});
    return out;
}

PrimeFactorization factorize_checked(const BigInt& d) {
    if (d < 1) throw std::invalid_argument("factorize: d must be positive");
    if (d > BigInt(~std::uint64_t{0}))
        throw std::range_error("factorize: input does not fit in 64 bits");
    return factorize(d.convert_to<std::uint64_t>());
}

unsigned prime_exponent(BigInt d, std::uint64_t p) {
    if (d == 0 || p < 2) throw std::invalid_argument("prime_exponent: bad arguments");
    unsigned e = 0;
    while (d % p == 0) {
        d /= p;
        ++e;
    }
    return e;
}

std::string to_decimal(const BigInt& v) { return v.str(); }

std::string to_decimal(const Rational& v) { return v.str(); }

}  // namespace ci
