#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ci/classify.hpp"
#include "ci/invariants.hpp"

namespace ci {

struct SearchConfig {
    int n = 5;
    int r_min = 1;
    int r_max = 1;
    long long max_degree = 2;
    std::optional<BigInt> fixed_total;   // enumerate ordered factorizations only
    std::vector<long long> prefix;       // fixed leading degrees (non-increasing)
    int jobs = 1;
    std::size_t max_records = 0;         // 0 = unlimited; profile-index budget
    std::string checkpoint_path;         // written when the budget is exceeded
};

// Emits every non-increasing degree list with entries in [2, max_degree] and
// length in [r_min, r_max] exactly once, in deterministic ascending order.
void enumerate_multidegrees(const SearchConfig& cfg,
                            const std::function<void(const MultiDegree&)>& emit);

std::vector<MultiDegree> enumerate_to_vector(const SearchConfig& cfg);

struct CollisionRecord {
    InvariantProfile profile;
    std::vector<MultiDegree> members;
    std::vector<ClassificationResult> pair_verdicts;  // all unordered member pairs
};

struct SearchResult {
    std::vector<CollisionRecord> collisions;  // ordered by d, then lexicographic
    std::size_t enumerated = 0;
    bool completed = true;
    long long last_completed_partition = -1;  // leading degree of last finished slice
};

SearchResult find_collisions(const SearchConfig& cfg);

// Verification mode: group an explicit candidate set by invariant profile.
std::vector<CollisionRecord> collisions_of(const std::vector<MultiDegree>& candidates);

struct PaperCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass;
};

// Recomputes every numeric table cell and verdict from the source examples.
// corrupt_check (test harness hook) deliberately breaks one expected value.
std::vector<PaperCheck> verify_paper_examples(const std::string& corrupt_check = "");

bool all_pass(const std::vector<PaperCheck>& checks);

std::string search_to_json(const SearchResult& r);
std::string checks_to_json(const std::vector<PaperCheck>& checks);

}  // namespace ci
