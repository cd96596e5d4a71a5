#pragma once

#include <string>
#include <vector>

#include "ci/invariants.hpp"

namespace ci {

// Moduli-space dimension
//   m = 1 - (N+1)^2 + sum_i C(N+d_i, N)
//       + sum_i sum_{j>=1} (-1)^j sum_{k_1<..<k_j} C(N+d_i-d_{k_1}-..-d_{k_j}, N)
// with subset indices over the whole list (including i) and vanishing
// binomials pruned. Production path groups equal degrees; the index-based
// DFS below is the cross-check.
BigInt moduli_dimension(const MultiDegree& md);
BigInt moduli_dimension_dfs(const MultiDegree& md);

// Two codimension-r0 degree lists used to build composed families.
// The paper pair shares power sums s_1..s_5, so every composed point at a
// fixed s carries one invariant profile.
struct BasePair {
    std::vector<long long> first;   // d
    std::vector<long long> second;  // d'

    BasePair(std::vector<long long> first, std::vector<long long> second);
    static BasePair paper_default();
    bool is_default() const;
    int codimension() const { return static_cast<int>(first.size()); }
};

struct ComposedFamilyPoint {
    long long lambda;
    long long mu;
    long long s;        // lambda + mu
    MultiDegree md;     // n = 5, lambda copies of d then mu copies of d'
    long long ambient;  // N = r0*s + 5
};

ComposedFamilyPoint compose(const BasePair& pair, long long lambda, long long mu);

// Triple/pair binomial sums over the base lists at a given N.
// gamma_abc = sum_{i in a, j in b, k in c} C(N + a_i - b_j - c_k, N);
// the "pair" variants sum over unordered index pairs within one list.
struct GammaTable {
    BigInt ddd, ppp;          // Gamma_ddd, Gamma_d'd'd'
    BigInt ddp, ppd;          // Gamma_ddd' (= Gamma_dd'd), Gamma_d'd'd (= Gamma_d'dd')
    BigInt dpp, pdd;          // Gamma_dd'd', Gamma_d'dd
    BigInt d_dpair, p_dpair;  // Gamma_{d d_<}, Gamma_{d' d_<}
    BigInt d_ppair, p_ppair;  // Gamma_{d d'_<}, Gamma_{d' d'_<}
};

GammaTable gamma_table(const BasePair& pair, long long N);

// m(d_{lambda+1,mu-1}) - m(d_{lambda,mu}) two ways: the closed-form
// M_0..M_3 breakdown and the direct difference of moduli_dimension values.
struct DeltaReport {
    long long lambda, s, ambient;
    BigInt m0, m1, m2, m3;
    BigInt closed_total;
    BigInt direct_total;
    bool agreement;
};

DeltaReport delta_closed_form(const BasePair& pair, long long lambda, long long s);

struct MonotonicityRow {
    long long s, lambda;
    BigInt delta;  // direct
    bool positive;
    bool above_3148;
    bool above_4e24;      // only required when s >= 3
    bool closed_matches;  // closed form agrees with direct
};

struct MonotonicityReport {
    std::vector<MonotonicityRow> rows;  // ordered by (s, lambda)
    std::vector<BigInt> min_delta_per_s;
    bool all_ok;
};

// Checks direct delta > 0, > 3148, and > 4*10^24 for s >= 3, for all
// 0 <= lambda < s <= s_max. Points may be evaluated in parallel; the
// merged report order is always (s, lambda).
MonotonicityReport verify_monotonicity(const BasePair& pair, int s_max, int jobs = 1);

struct FamilyRow {
    long long lambda;
    BigInt m;
    BigInt delta;  // m(lambda) - m(lambda-1); 0 for the first row
};

struct FamilyReport {
    long long s;
    std::vector<FamilyRow> rows;  // lambda = 0..s
    bool profiles_identical;
    bool traving_holds;
    bool strictly_increasing;
};

FamilyReport family_report(const BasePair& pair, long long s, int jobs = 1);

std::string delta_to_json(const DeltaReport& r);
std::string monotonicity_to_json(const MonotonicityReport& r);
std::string family_to_json(const FamilyReport& r);
std::string family_to_table(const FamilyReport& r);
std::string gamma_to_json(const GammaTable& g, long long N);

}  // namespace ci
