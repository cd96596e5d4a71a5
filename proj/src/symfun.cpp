#include "ci/symfun.hpp"

#include <stdexcept>

namespace ci {

std::vector<BigInt> power_sums(const std::vector<long long>& degrees, int k) {
    if (k < 1) throw std::invalid_argument("power_sums: k must be >= 1");
    std::vector<BigInt> s(static_cast<std::size_t>(k), BigInt(0));
    for (long long dj : degrees) {
        BigInt pw = dj;
        for (int i = 0; i < k; ++i) {
            s[static_cast<std::size_t>(i)] += pw;
            pw *= dj;
        }
    }
    return s;
}

std::vector<Rational> elementary_from_power_sums(const std::vector<BigInt>& t) {
    const std::size_t k = t.size();
    if (k < 1) throw std::invalid_argument("elementary_from_power_sums: k must be >= 1");
    std::vector<Rational> e(k + 1);
    e[0] = 1;
    for (std::size_t j = 1; j <= k; ++j) {
        Rational acc = 0;
        int sign = 1;
        for (std::size_t i = 1; i <= j; ++i) {
            acc += sign * e[j - i] * Rational(t[i - 1]);
            sign = -sign;
        }
        e[j] = acc / j;
    }
    e.erase(e.begin());
    return e;
}

Rational g_explicit(int j, const std::vector<BigInt>& t) {
    if (j < 1 || j > 6) throw std::invalid_argument("g_explicit: only g_1..g_6 are available");
    if (t.size() < static_cast<std::size_t>(j))
        throw std::invalid_argument("g_explicit: need at least j arguments");
    const BigInt& s1 = t[0];
    BigInt g;
    switch (j) {
        case 1:
            g = s1;
            break;
        case 2:
            g = s1 * s1 - t[1];
            break;
        case 3:
            g = s1 * s1 * s1 - 3 * s1 * t[1] + 2 * t[2];
            break;
        case 4: {
            BigInt s1_2 = s1 * s1;
            g = s1_2 * s1_2 - 6 * s1_2 * t[1] + 8 * s1 * t[2] + 3 * t[1] * t[1] - 6 * t[3];
            break;
        }
        case 5: {
            BigInt s1_2 = s1 * s1;
            BigInt s1_3 = s1_2 * s1;
            g = s1_3 * s1_2 - 10 * s1_3 * t[1] + 20 * s1_2 * t[2] - 30 * s1 * t[3] +
                15 * s1 * t[1] * t[1] - 20 * t[1] * t[2] + 24 * t[4];
            break;
        }
        case 6: {
            BigInt s1_2 = s1 * s1;
            BigInt s1_3 = s1_2 * s1;
            BigInt s2_2 = t[1] * t[1];
            g = s1_3 * s1_3 - 15 * s1_2 * s1_2 * t[1] + 40 * s1_3 * t[2] - 90 * s1_2 * t[3] +
                45 * s1_2 * s2_2 - 120 * s1 * t[1] * t[2] + 144 * s1 * t[4] - 15 * s2_2 * t[1] +
                90 * t[1] * t[3] + 40 * t[2] * t[2] - 120 * t[5];
            break;
        }
    }
    BigInt fact = 1;
    for (int i = 2; i <= j; ++i) fact *= i;
    return Rational(g) / Rational(fact);
}

}  // namespace ci
