#include "ci/classify.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ci {

TravingReport traving_condition(int n, const BigInt& d) {
    if (d < 1) throw std::invalid_argument("traving_condition: d must be >= 1");
    TravingReport report{true, {}};
    for (std::uint64_t p = 2; p * (p - 1) <= static_cast<std::uint64_t>(n) + 1;
         p = (p == 2 ? 3 : p + 2)) {
        bool prime = true;
        for (std::uint64_t q = 3; q * q <= p; q += 2)
            if (p % q == 0) { prime = false; break; }
        if (!prime) continue;
        const unsigned nu = prime_exponent(d, p);
        const std::uint64_t num = 2u * n + 1 + 2 * (p - 1);
        const std::uint64_t den = 2 * (p - 1);
        const unsigned threshold = static_cast<unsigned>((num + den - 1) / den);
        // 2(p-1)*nu >= 2n+1 + 2(p-1), cross-multiplied to avoid fractions
        const bool ok = den * nu >= num;
        report.checks.push_back({p, nu, threshold, ok});
        report.holds = report.holds && ok;
    }
    return report;
}

ClassificationResult classify_pair(const MultiDegree& a, const MultiDegree& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("classify_pair: complex dimensions differ");
    ClassificationResult r;
    r.profile_a = invariant_profile(a);
    r.profile_b = invariant_profile(b);
    if (a.degrees() == b.degrees()) {
        r.verdict = Verdict::SameMultidegree;
        r.traving = traving_condition(a.n(), r.profile_a.d);
        return r;
    }
    auto differ = [&](const std::string& name, const BigInt& va, const BigInt& vb) {
        r.verdict = Verdict::NotHomeomorphic;
        r.witness_invariant = name;
        r.witness_a = to_decimal(va);
        r.witness_b = to_decimal(vb);
    };
    if (r.profile_a.d != r.profile_b.d) {
        differ("d", r.profile_a.d, r.profile_b.d);
        return r;
    }
    for (std::size_t k = 0; k < r.profile_a.p.size(); ++k) {
        if (r.profile_a.p[k] != r.profile_b.p[k]) {
            differ("p" + std::to_string(k + 1), r.profile_a.p[k], r.profile_b.p[k]);
            return r;
        }
    }
    if (r.profile_a.e != r.profile_b.e) {
        differ("e", r.profile_a.e, r.profile_b.e);
        return r;
    }
    // All invariants agree. The homeomorphism criterion is only available
    // for n in {5,6,7}; elsewhere stay honest.
    const int n = a.n();
    if (n != 5 && n != 6 && n != 7) {
        r.verdict = Verdict::InvariantsEqualInconclusive;
        return r;
    }
    r.traving = traving_condition(n, r.profile_a.d);
    r.verdict = r.traving.holds ? Verdict::Diffeomorphic : Verdict::HomeomorphicSmoothingUnknown;
    return r;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::SameMultidegree: return "same-multidegree";
        case Verdict::Diffeomorphic: return "diffeomorphic";
        case Verdict::HomeomorphicSmoothingUnknown: return "homeomorphic-smoothing-unknown";
        case Verdict::NotHomeomorphic: return "not-homeomorphic";
        case Verdict::InvariantsEqualInconclusive: return "invariants-equal-inconclusive";
    }
    return "?";
}

std::string classification_to_json(const ClassificationResult& r) {
    nlohmann::json j;
    j["verdict"] = verdict_name(r.verdict);
    if (r.verdict == Verdict::NotHomeomorphic) {
        j["witness"] = {{"invariant", r.witness_invariant},
                        {"a", r.witness_a},
                        {"b", r.witness_b}};
    }
    if (!r.traving.checks.empty() || r.verdict == Verdict::Diffeomorphic ||
        r.verdict == Verdict::HomeomorphicSmoothingUnknown ||
        r.verdict == Verdict::SameMultidegree) {
        nlohmann::json t;
        t["holds"] = r.traving.holds;
        t["primes"] = nlohmann::json::array();
        for (const auto& c : r.traving.checks) {
            t["primes"].push_back({{"p", c.prime},
                                   {"exponent", c.exponent},
                                   {"threshold", c.threshold},
                                   {"satisfied", c.satisfied}});
        }
        j["traving"] = t;
    }
    return j.dump();
}

}  // namespace ci
