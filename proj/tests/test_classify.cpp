#include <doctest.h>

#include <random>

#include "ci/classify.hpp"

using namespace ci;

TEST_CASE("traving condition for n = 5") {
    {
        auto r = traving_condition(5, BigInt("340867118592"));  // nu_2=9, nu_3=5
        CHECK(r.holds);
        REQUIRE(r.checks.size() == 2);
        CHECK(r.checks[0].prime == 2);
        CHECK(r.checks[0].threshold == 7);
        CHECK(r.checks[0].exponent == 9);
        CHECK(r.checks[1].prime == 3);
        CHECK(r.checks[1].threshold == 4);
        CHECK(r.checks[1].exponent == 5);
    }
    // both thresholds met with equality
    CHECK(traving_condition(5, BigInt(10368)).holds);  // 2^7 * 3^4
    {
        auto r = traving_condition(5, BigInt(59049));  // 3^10, nu_2 = 0
        CHECK_FALSE(r.holds);
        CHECK_FALSE(r.checks[0].satisfied);
        CHECK(r.checks[1].satisfied);
    }
    CHECK_FALSE(traving_condition(5, BigInt(10368 / 2)).holds);
    CHECK_FALSE(traving_condition(5, BigInt(10368 / 3)).holds);
    CHECK_THROWS_AS(traving_condition(5, BigInt(0)), std::invalid_argument);
}

TEST_CASE("traving relevant primes depend on n") {
    // p(p-1) <= n+1: n=5 -> {2,3}; n=7 -> {2}? 2*1=2<=8, 3*2=6<=8 -> {2,3}
    CHECK(traving_condition(7, BigInt(2)).checks.size() == 2);
    // n=11: 4*3=12 <= 12 but 4 not prime; 5*4=20 > 12 -> {2,3}
    CHECK(traving_condition(11, BigInt(2)).checks.size() == 2);
    // n=19: 5*4=20 <= 20 -> {2,3,5}
    CHECK(traving_condition(19, BigInt(2)).checks.size() == 3);
}

TEST_CASE("paper pair verdicts") {
    const MultiDegree a(5, {66, 56, 45, 39, 16, 15, 8, 3});
    const MultiDegree b(5, {64, 60, 42, 39, 20, 11, 9, 3});
    CHECK(classify_pair(a, b).verdict == Verdict::Diffeomorphic);

    const MultiDegree c(5, {66, 56, 45, 39, 16, 15, 8});
    const MultiDegree d(5, {64, 60, 42, 39, 20, 11, 9});
    auto r = classify_pair(c, d);
    CHECK(r.verdict == Verdict::NotHomeomorphic);
    CHECK(r.witness_invariant == "e");
    CHECK(BigInt(r.witness_a) == BigInt("-30762573120") * BigInt("12454041600"));
    CHECK(BigInt(r.witness_b) == BigInt("-30762561840") * BigInt("12454041600"));

    const MultiDegree e(4, {66, 56, 45, 39, 16, 15, 8, 3, 2});
    const MultiDegree f(4, {64, 60, 42, 39, 20, 11, 9, 3, 2});
    auto r4 = classify_pair(e, f);
    CHECK(r4.verdict == Verdict::NotHomeomorphic);
    CHECK(r4.witness_invariant == "e");

    CHECK(classify_pair(a, a).verdict == Verdict::SameMultidegree);
    CHECK_THROWS_AS(classify_pair(a, e), std::invalid_argument);
}

TEST_CASE("equal invariants outside n in {5,6,7} stay inconclusive") {
    // X_1(6,6) and X_1(9,2,2): same total degree 36, no Pontrjagin entries,
    // and e = d*(n+r+1-s_1) agrees (r - s_1 = -10 for both)
    const MultiDegree a(1, {6, 6});
    const MultiDegree b(1, {9, 2, 2});
    REQUIRE(invariant_profile(a).invariants_equal(invariant_profile(b)));
    CHECK(classify_pair(a, b).verdict == Verdict::InvariantsEqualInconclusive);
}

TEST_CASE("smoothing-unknown when the Traving condition fails") {
    // same multidegree up to reordering would be SameMultidegree; force a
    // genuine pair with equal invariants by composing the base pair once
    const MultiDegree a(5, {88, 77, 72, 54, 48, 31, 29});
    const MultiDegree b(5, {87, 81, 64, 62, 44, 33, 28});
    auto r = classify_pair(a, b);
    CHECK(r.verdict == Verdict::Diffeomorphic);  // d = 2^11*3^6*... passes
    CHECK(r.traving.holds);
}

TEST_CASE("classification is symmetric") {
    std::vector<std::pair<MultiDegree, MultiDegree>> pairs = {
        {MultiDegree(5, {66, 56, 45, 39, 16, 15, 8, 3}),
         MultiDegree(5, {64, 60, 42, 39, 20, 11, 9, 3})},
        {MultiDegree(5, {66, 56, 45, 39, 16, 15, 8}),
         MultiDegree(5, {64, 60, 42, 39, 20, 11, 9})},
        {MultiDegree(5, {3, 2}), MultiDegree(5, {4, 2})},
        {MultiDegree(1, {6, 6}), MultiDegree(1, {9, 2, 2})},
    };
    for (const auto& [a, b] : pairs) {
        auto ab = classify_pair(a, b);
        auto ba = classify_pair(b, a);
        CHECK(ab.verdict == ba.verdict);
        CHECK(ab.witness_invariant == ba.witness_invariant);
        CHECK(ab.witness_a == ba.witness_b);
        CHECK(ab.witness_b == ba.witness_a);
    }
}

TEST_CASE("witness values recompute correctly") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<long long> deg(2, 15);
    for (int i = 0; i < 100; ++i) {
        std::vector<long long> da, db;
        for (int k = 0; k < 4; ++k) da.push_back(deg(rng));
        for (int k = 0; k < 4; ++k) db.push_back(deg(rng));
        MultiDegree a(5, da), b(5, db);
        if (a.degrees() == b.degrees()) continue;
        auto r = classify_pair(a, b);
        if (r.verdict != Verdict::NotHomeomorphic) continue;
        const auto pa = invariant_profile(a);
        const auto pb = invariant_profile(b);
        if (r.witness_invariant == "d") {
            CHECK(BigInt(r.witness_a) == pa.d);
            CHECK(BigInt(r.witness_b) == pb.d);
        } else if (r.witness_invariant == "e") {
            CHECK(BigInt(r.witness_a) == pa.e);
            CHECK(BigInt(r.witness_b) == pb.e);
        } else {
            const std::size_t k = std::stoul(r.witness_invariant.substr(1)) - 1;
            CHECK(BigInt(r.witness_a) == pa.p[k]);
            CHECK(BigInt(r.witness_b) == pb.p[k]);
        }
        CHECK(BigInt(r.witness_a) != BigInt(r.witness_b));
    }
}

TEST_CASE("verdict JSON carries the Traving report") {
    auto r = classify_pair(MultiDegree(5, {88, 77, 72, 54, 48, 31, 29}),
                           MultiDegree(5, {87, 81, 64, 62, 44, 33, 28}));
    const std::string j = classification_to_json(r);
    CHECK(j.find("\"verdict\":\"diffeomorphic\"") != std::string::npos);
    CHECK(j.find("\"traving\"") != std::string::npos);
}
