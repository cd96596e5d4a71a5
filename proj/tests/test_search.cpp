#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "ci/search.hpp"

using namespace ci;

namespace {

// independent multiset counter: non-increasing lists of length r with
// entries in [2, max_degree]
long long count_multisets(int r, long long bound, long long max_degree) {
    if (r == 0) return 1;
    long long total = 0;
    for (long long v = 2; v <= std::min(bound, max_degree); ++v)
        total += count_multisets(r - 1, v, max_degree);
    return total;
}

}  // namespace

TEST_CASE("enumeration of small spaces") {
    SearchConfig cfg;
    cfg.n = 5;
    cfg.r_min = cfg.r_max = 1;
    cfg.max_degree = 4;
    auto lists = enumerate_to_vector(cfg);
    REQUIRE(lists.size() == 3);
    CHECK(lists[0].degrees() == std::vector<long long>{2});
    CHECK(lists[1].degrees() == std::vector<long long>{3});
    CHECK(lists[2].degrees() == std::vector<long long>{4});

    cfg.r_min = cfg.r_max = 2;
    cfg.max_degree = 3;
    lists = enumerate_to_vector(cfg);
    REQUIRE(lists.size() == 3);
    CHECK(lists[0].degrees() == std::vector<long long>{2, 2});
    CHECK(lists[1].degrees() == std::vector<long long>{3, 2});
    CHECK(lists[2].degrees() == std::vector<long long>{3, 3});
}

TEST_CASE("enumeration count matches the multiset formula, no duplicates") {
    SearchConfig cfg;
    cfg.n = 5;
    cfg.r_min = 1;
    cfg.r_max = 3;
    cfg.max_degree = 12;
    auto lists = enumerate_to_vector(cfg);
    long long expected = 0;
    for (int r = 1; r <= 3; ++r) expected += count_multisets(r, 12, 12);
    CHECK(static_cast<long long>(lists.size()) == expected);
    CHECK(expected == 11 + 66 + 286);
    std::set<std::vector<long long>> seen;
    for (const auto& md : lists) CHECK(seen.insert(md.degrees()).second);
}

TEST_CASE("invalid configurations are rejected") {
    SearchConfig cfg;
    cfg.r_min = 0;
    CHECK_THROWS_AS(enumerate_to_vector(cfg), std::invalid_argument);
    cfg.r_min = 2;
    cfg.r_max = 1;
    CHECK_THROWS_AS(enumerate_to_vector(cfg), std::invalid_argument);
    cfg.r_max = 2;
    cfg.max_degree = 1;
    CHECK_THROWS_AS(enumerate_to_vector(cfg), std::invalid_argument);
    cfg.max_degree = 5;
    cfg.prefix = {3, 4};  // increasing prefix
    CHECK_THROWS_AS(enumerate_to_vector(cfg), std::invalid_argument);
}

TEST_CASE("fixed-total enumeration walks ordered factorizations") {
    SearchConfig cfg;
    cfg.n = 5;
    cfg.r_min = 1;
    cfg.r_max = 3;
    cfg.max_degree = 12;
    cfg.fixed_total = BigInt(12);
    auto lists = enumerate_to_vector(cfg);
    std::set<std::vector<long long>> got;
    for (const auto& md : lists) got.insert(md.degrees());
    CHECK(got == std::set<std::vector<long long>>{
                     {12}, {6, 2}, {4, 3}, {3, 2, 2}});
}

TEST_CASE("no collisions at desk scale (low-codimension determinacy)") {
    SearchConfig cfg;
    cfg.n = 5;
    cfg.r_min = 1;
    cfg.r_max = 3;
    cfg.max_degree = 12;
    auto result = find_collisions(cfg);
    CHECK(result.completed);
    CHECK(result.enumerated == 363);
    CHECK(result.collisions.empty());
}

TEST_CASE("verification mode groups the first example pair") {
    std::vector<MultiDegree> candidates = {
        MultiDegree(5, {46, 36, 34, 21, 14, 13, 12, 11, 3, 2, 2}),
        MultiDegree(5, {44, 42, 26, 23, 18, 17, 7, 6, 6, 4}),
        MultiDegree(5, {3, 2}),
    };
    auto records = collisions_of(candidates);
    REQUIRE(records.size() == 1);
    CHECK(records[0].members.size() == 2);
    REQUIRE(records[0].pair_verdicts.size() == 1);
    CHECK(records[0].pair_verdicts[0].verdict == Verdict::Diffeomorphic);
    CHECK(records[0].profile.d == BigInt("340867118592"));
}

TEST_CASE("prefix-restricted search rediscovers the second example pair") {
    SearchConfig cfg;
    cfg.n = 5;
    cfg.r_min = cfg.r_max = 8;
    cfg.max_degree = 16;
    cfg.prefix = {66, 56, 45, 39};
    // the prefix space holds one side of the known pair; seeding the other
    // side must produce exactly that collision
    auto candidates = enumerate_to_vector(cfg);
    const std::vector<long long> target = {66, 56, 45, 39, 16, 15, 8, 3};
    bool enumerated = false;
    for (const auto& md : candidates)
        if (md.degrees() == target) enumerated = true;
    CHECK(enumerated);
    candidates.push_back(MultiDegree(5, {64, 60, 42, 39, 20, 11, 9, 3}));
    auto records = collisions_of(candidates);
    bool found = false;
    for (const auto& rec : records)
        for (const auto& md : rec.members)
            if (md.degrees() == target) found = true;
    CHECK(found);
}

TEST_CASE("parallel partitioned runs merge byte-identically") {
    SearchConfig cfg;
    cfg.n = 5;
    cfg.r_min = 1;
    cfg.r_max = 3;
    cfg.max_degree = 10;
    cfg.jobs = 1;
    const std::string serial = search_to_json(find_collisions(cfg));
    cfg.jobs = 4;
    CHECK(search_to_json(find_collisions(cfg)) == serial);
}

TEST_CASE("record budget triggers a checkpoint") {
    const std::string path = "search_checkpoint_test.json";
    SearchConfig cfg;
    cfg.n = 5;
    cfg.r_min = 1;
    cfg.r_max = 2;
    cfg.max_degree = 10;
    cfg.max_records = 10;
    cfg.checkpoint_path = path;
    auto result = find_collisions(cfg);
    CHECK_FALSE(result.completed);
    CHECK(result.last_completed_partition >= 2);
    std::ifstream in(path);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    CHECK(j["last_completed_partition"].get<long long>() == result.last_completed_partition);
    std::remove(path.c_str());
}

TEST_CASE("collision members recompute to the group key") {
    std::vector<MultiDegree> candidates = {
        MultiDegree(5, {66, 56, 45, 39, 16, 15, 8, 3}),
        MultiDegree(5, {64, 60, 42, 39, 20, 11, 9, 3}),
        MultiDegree(5, {64, 60, 42, 39, 20, 11, 9, 3}),  // duplicate is dropped
    };
    auto records = collisions_of(candidates);
    REQUIRE(records.size() == 1);
    CHECK(records[0].members.size() == 2);
    for (const auto& md : records[0].members)
        CHECK(invariant_profile(md).key() == records[0].profile.key());
}

TEST_CASE("paper verification harness") {
    auto checks = verify_paper_examples();
    CHECK(all_pass(checks));
    CHECK(checks.size() > 40);

    // corrupting one expected constant fails exactly that check
    auto corrupted = verify_paper_examples("table1.d");
    CHECK_FALSE(all_pass(corrupted));
    int failures = 0;
    for (const auto& c : corrupted)
        if (!c.pass) {
            ++failures;
            CHECK(c.name == "table1.d");
        }
    CHECK(failures == 1);
}
