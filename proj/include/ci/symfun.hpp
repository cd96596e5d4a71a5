#pragma once

#include <vector>

#include "ci/exactmath.hpp"

namespace ci {

// s_i = sum_j degrees[j]^i for i = 1..k. Empty degree list gives all zeros.
std::vector<BigInt> power_sums(const std::vector<long long>& degrees, int k);

// Newton's identities: given t = (t_1..t_k) interpreted as power sums,
// returns (e_1..e_k) with j*e_j = sum_{i=1..j} (-1)^{i-1} e_{j-i} t_i,
// computed in exact rational arithmetic.
std::vector<Rational> elementary_from_power_sums(const std::vector<BigInt>& t);

// Direct evaluation of the explicit degree-j Newton polynomial (j <= 6),
// returned as g_j/j!. Independent oracle for the recurrence above.
Rational g_explicit(int j, const std::vector<BigInt>& t);

}  // namespace ci
