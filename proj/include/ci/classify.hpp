#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ci/invariants.hpp"

namespace ci {

struct TravingPrimeCheck {
    std::uint64_t prime;
    unsigned exponent;   // nu_p(d)
    unsigned threshold;  // minimal exponent required
    bool satisfied;
};

// Sufficient condition for homeomorphic complete intersections of dimension n
// to be diffeomorphic: 2(p-1)*nu_p(d) >= 2n+1 + 2(p-1) for every prime p with
// p(p-1) <= n+1. Exact integer arithmetic only.
struct TravingReport {
    bool holds;
    std::vector<TravingPrimeCheck> checks;
};

TravingReport traving_condition(int n, const BigInt& d);

enum class Verdict {
    SameMultidegree,
    Diffeomorphic,
    HomeomorphicSmoothingUnknown,
    NotHomeomorphic,
    InvariantsEqualInconclusive,
};

struct ClassificationResult {
    Verdict verdict;
    // Set for NotHomeomorphic: which invariant differs and both values.
    std::string witness_invariant;  // "d", "p1", "p2", ..., or "e"
    std::string witness_a;
    std::string witness_b;
    TravingReport traving;  // populated when invariants agree
    InvariantProfile profile_a;
    InvariantProfile profile_b;
};

ClassificationResult classify_pair(const MultiDegree& a, const MultiDegree& b);

const char* verdict_name(Verdict v);

std::string classification_to_json(const ClassificationResult& r);

}  // namespace ci
