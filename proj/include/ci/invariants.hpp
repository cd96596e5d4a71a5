#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ci/exactmath.hpp"

namespace ci {

// A complete intersection datum: complex dimension n plus a multiset of
// hypersurface degrees. Canonical form sorts degrees descending and drops
// degree-1 entries (a linear section leaves every invariant unchanged).
class MultiDegree {
public:
    MultiDegree(int n, std::vector<long long> degrees);

    int n() const { return n_; }
    const std::vector<long long>& degrees() const { return degrees_; }
    int codimension() const { return static_cast<int>(degrees_.size()); }
    int ambient_dimension() const { return n_ + codimension(); }

    bool operator==(const MultiDegree&) const = default;

private:
    int n_;
    std::vector<long long> degrees_;  // canonical: descending, entries >= 2
};

struct InvariantProfile {
    int n;
    BigInt d;                  // total degree
    std::vector<BigInt> p;     // p_1..p_{floor(n/2)} as multiples of x^{2k}
    BigInt e;                  // Euler characteristic
    Rational e_over_d;         // exact; integral in all paper tables but not assumed

    bool invariants_equal(const InvariantProfile& other) const {
        return d == other.d && p == other.p && e == other.e;
    }
    std::string key() const;  // canonical "d|p1|..|e" string
};

BigInt total_degree(const MultiDegree& md);

// c_k = e_k(t) with t_i = n+r+1-s_i, 1 <= k <= n. Integrality is asserted:
// a non-integer value signals an arithmetic bug, never bad input.
std::vector<BigInt> chern_coefficients(const MultiDegree& md);

// p_k = e_k(t') with t'_i = n+r+1-s_{2i}, 1 <= k <= floor(n/2).
std::vector<BigInt> pontrjagin_coefficients(const MultiDegree& md);

BigInt euler_characteristic(const MultiDegree& md);

InvariantProfile invariant_profile(const MultiDegree& md);

std::string profile_to_json(const MultiDegree& md, const InvariantProfile& profile);

}  // namespace ci
