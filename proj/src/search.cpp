#include "ci/search.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "ci/moduli.hpp"
#include "ci/symfun.hpp"

namespace ci {

namespace {

void validate(const SearchConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("search: n must be >= 1");
    if (cfg.r_min < 1 || cfg.r_max < cfg.r_min)
        throw std::invalid_argument("search: need 1 <= r_min <= r_max");
    if (cfg.max_degree < 2) throw std::invalid_argument("search: max_degree must be >= 2");
    for (std::size_t i = 0; i < cfg.prefix.size(); ++i) {
        if (cfg.prefix[i] < 2) throw std::invalid_argument("search: prefix degrees must be >= 2");
        if (i > 0 && cfg.prefix[i] > cfg.prefix[i - 1])
            throw std::invalid_argument("search: prefix must be non-increasing");
    }
    if (cfg.prefix.size() > static_cast<std::size_t>(cfg.r_max))
        throw std::invalid_argument("search: prefix longer than r_max");
}

// Non-increasing lists, one target length, entries in [2, bound]; the entry
// at each level runs ascending so the overall emission order is ascending
// lexicographic on the canonical representation.
void emit_lists(std::vector<long long>& current, std::size_t target, long long bound,
                long long max_degree, const std::function<void(const std::vector<long long>&)>& out) {
    if (current.size() == target) {
        out(current);
        return;
    }
    const long long top = std::min(bound, max_degree);
    for (long long v = 2; v <= top; ++v) {
        current.push_back(v);
        emit_lists(current, target, v, max_degree, out);
        current.pop_back();
    }
}

// Ordered factorizations of `remaining` into non-increasing factors in
// [2, bound], total length in [len_min, len_max].
void emit_factorizations(std::vector<long long>& current, const BigInt& remaining,
                         long long bound, std::size_t len_min, std::size_t len_max,
                         const std::function<void(const std::vector<long long>&)>& out) {
    if (remaining == 1) {
        if (current.size() >= len_min && current.size() <= len_max) out(current);
        return;
    }
    if (current.size() == len_max) return;
    // remaining must fit in the slots still open
    BigInt cap = 1;
    for (std::size_t i = current.size(); i < len_max; ++i) {
        cap *= bound;
        if (cap >= remaining) break;
    }
    if (cap < remaining) return;
    for (long long f = 2; f <= bound; ++f) {
        if (remaining % f != 0) continue;
        current.push_back(f);
        emit_factorizations(current, remaining / f, f, len_min, len_max, out);
        current.pop_back();
    }
}

}  // namespace

void enumerate_multidegrees(const SearchConfig& cfg,
                            const std::function<void(const MultiDegree&)>& emit) {
    validate(cfg);
    auto out = [&](const std::vector<long long>& tail) {
        std::vector<long long> degrees = cfg.prefix;
        degrees.insert(degrees.end(), tail.begin(), tail.end());
        emit(MultiDegree(cfg.n, std::move(degrees)));
    };
    const long long bound =
        cfg.prefix.empty() ? cfg.max_degree : std::min(cfg.max_degree, cfg.prefix.back());
    const std::size_t plen = cfg.prefix.size();
    if (cfg.fixed_total) {
        BigInt remaining = *cfg.fixed_total;
        for (long long p : cfg.prefix) {
            if (remaining % p != 0)
                throw std::invalid_argument("search: prefix does not divide fixed total degree");
            remaining /= p;
        }
        std::vector<long long> current;
        const std::size_t len_min = plen > static_cast<std::size_t>(cfg.r_min)
                                        ? 0
                                        : static_cast<std::size_t>(cfg.r_min) - plen;
        emit_factorizations(current, remaining, bound, len_min,
                            static_cast<std::size_t>(cfg.r_max) - plen, out);
        return;
    }
    for (int r = std::max<int>(cfg.r_min, static_cast<int>(plen)); r <= cfg.r_max; ++r) {
        std::vector<long long> current;
        emit_lists(current, static_cast<std::size_t>(r) - plen, bound, cfg.max_degree, out);
    }
}

std::vector<MultiDegree> enumerate_to_vector(const SearchConfig& cfg) {
    std::vector<MultiDegree> out;
    enumerate_multidegrees(cfg, [&](const MultiDegree& md) { out.push_back(md); });
    return out;
}

namespace {

std::vector<CollisionRecord> group_by_profile(std::vector<MultiDegree> members) {
    // stable grouping keyed on the exact profile; hash lookup would work the
    // same but the map keeps output order independent of insertion order
    std::map<std::string, std::vector<MultiDegree>> groups;
    for (auto& md : members) groups[invariant_profile(md).key()].push_back(std::move(md));
    std::vector<CollisionRecord> out;
    for (auto& [key, group] : groups) {
        std::sort(group.begin(), group.end(),
                  [](const MultiDegree& a, const MultiDegree& b) {
                      return a.degrees() < b.degrees();
                  });
        group.erase(std::unique(group.begin(), group.end()), group.end());
        if (group.size() < 2) continue;
        CollisionRecord rec;
        rec.profile = invariant_profile(group.front());
        // no hash-trust: every member must recompute to the group key
        for (const auto& md : group) {
            if (invariant_profile(md).key() != key)
                throw std::logic_error("collision grouping: member does not match group key");
        }
        rec.members = std::move(group);
        for (std::size_t i = 0; i < rec.members.size(); ++i)
            for (std::size_t j = i + 1; j < rec.members.size(); ++j)
                rec.pair_verdicts.push_back(classify_pair(rec.members[i], rec.members[j]));
        out.push_back(std::move(rec));
    }
    std::sort(out.begin(), out.end(), [](const CollisionRecord& a, const CollisionRecord& b) {
        if (a.profile.d != b.profile.d) return a.profile.d < b.profile.d;
        return a.members.front().degrees() < b.members.front().degrees();
    });
    return out;
}

}  // namespace

std::vector<CollisionRecord> collisions_of(const std::vector<MultiDegree>& candidates) {
    return group_by_profile(candidates);
}

SearchResult find_collisions(const SearchConfig& cfg) {
    validate(cfg);
    // deterministic partitions keyed by the leading free degree
    std::map<long long, std::vector<MultiDegree>> partitions;
    std::size_t enumerated = 0;
    enumerate_multidegrees(cfg, [&](const MultiDegree& md) {
        ++enumerated;
        const std::size_t plen = cfg.prefix.size();
        const long long lead =
            md.degrees().size() > plen ? md.degrees()[plen] : 0;
        partitions[lead].push_back(md);
    });

    SearchResult result;
    result.enumerated = enumerated;

    std::vector<long long> ids;
    for (const auto& [id, _] : partitions) ids.push_back(id);

    // profiles are the expensive part; evaluate partitions concurrently,
    // then merge in partition-id order so output never depends on job count
    std::vector<std::vector<std::pair<std::string, MultiDegree>>> keyed(ids.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < ids.size(); i = next++) {
            for (const auto& md : partitions[ids[i]])
                keyed[i].emplace_back(invariant_profile(md).key(), md);
        }
    };
    const int workers = std::max(1, cfg.jobs);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::size_t records = 0;
    std::vector<MultiDegree> accepted;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (auto& [key, md] : keyed[i]) {
            (void)key;
            accepted.push_back(std::move(md));
            ++records;
        }
        if (cfg.max_records > 0 && records > cfg.max_records) {
            result.completed = false;
            result.last_completed_partition = i > 0 ? ids[i - 1] : -1;
            if (!cfg.checkpoint_path.empty()) {
                nlohmann::json j;
                j["last_completed_partition"] = result.last_completed_partition;
                j["records"] = records;
                std::ofstream(cfg.checkpoint_path) << j.dump() << '\n';
            }
            break;
        }
        result.last_completed_partition = ids[i];
    }
    result.collisions = group_by_profile(std::move(accepted));
    return result;
}

namespace {

std::string join_bigints(const std::vector<BigInt>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

std::string factorization_string(const BigInt& d) {
    std::ostringstream os;
    const auto factors = factorize_checked(d);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << '*';
        os << factors[i].prime;
        if (factors[i].exponent > 1) os << '^' << factors[i].exponent;
    }
    return os.str();
}

std::string e_over_d_string(const InvariantProfile& profile) {
    if (denominator(profile.e_over_d) == 1) return to_decimal(numerator(profile.e_over_d));
    return to_decimal(profile.e_over_d);
}

}  // namespace

std::vector<PaperCheck> verify_paper_examples(const std::string& corrupt_check) {
    std::vector<PaperCheck> checks;
    auto add = [&](const std::string& name, std::string expected, const std::string& actual) {
        if (name == corrupt_check) expected += "<corrupted>";
        checks.push_back({name, expected, actual, expected == actual});
    };

    struct PairCase {
        std::string tag;
        int n;
        std::vector<long long> a, b;
    };

    const MultiDegree ex31a(5, {46, 36, 34, 21, 14, 13, 12, 11, 3, 2, 2});
    const MultiDegree ex31b(5, {44, 42, 26, 23, 18, 17, 7, 6, 6, 4});
    add("ex3.1.s.a", "194,5656,200600,7790356,317267984",
        join_bigints(power_sums(ex31a.degrees(), 5)));
    add("ex3.1.s.b", "193,5655,200599,7790355,317267983",
        join_bigints(power_sums(ex31b.degrees(), 5)));
    for (const auto* md : {&ex31a, &ex31b}) {
        const auto profile = invariant_profile(*md);
        const std::string tag = md == &ex31a ? "a" : "b";
        add("ex3.1.d." + tag, "340867118592", to_decimal(profile.d));
        add("ex3.1.p1." + tag, "-5639", to_decimal(profile.p[0]));
        add("ex3.1.p2." + tag, "19794330", to_decimal(profile.p[1]));
        add("ex3.1.e_over_d." + tag, "-6401091783", e_over_d_string(profile));
    }
    add("ex3.1.factorization", "2^9*3^5*7^2*11*13*17*23",
        factorization_string(total_degree(ex31a)));
    add("ex3.1.verdict", "diffeomorphic",
        verdict_name(classify_pair(ex31a, ex31b).verdict));

    const MultiDegree ex32a(5, {66, 56, 45, 39, 16, 15, 8, 3});
    const MultiDegree ex32b(5, {64, 60, 42, 39, 20, 11, 9, 3});
    add("ex3.2.1.s.a", "248,11592,621566,35343636,2079657638",
        join_bigints(power_sums(ex32a.degrees(), 5)));
    add("ex3.2.1.s.b", "248,11592,621638,35343636,2075677598",
        join_bigints(power_sums(ex32b.degrees(), 5)));
    {
        const auto pa = invariant_profile(ex32a);
        const auto pb = invariant_profile(ex32b);
        add("ex3.2.1.d", "37362124800", to_decimal(pa.d));
        add("ex3.2.1.p1", "-11578", to_decimal(pa.p[0]));
        add("ex3.2.1.p2", "84696853", to_decimal(pa.p[1]));
        add("ex3.2.1.e_over_d.a", "-31485015068", e_over_d_string(pa));
        add("ex3.2.1.e_over_d.b", "-31485015068", e_over_d_string(pb));
        add("ex3.2.1.verdict", "diffeomorphic",
            verdict_name(classify_pair(ex32a, ex32b).verdict));
    }
    {
        const MultiDegree a(5, {66, 56, 45, 39, 16, 15, 8});
        const MultiDegree b(5, {64, 60, 42, 39, 20, 11, 9});
        const auto pa = invariant_profile(a);
        const auto pb = invariant_profile(b);
        add("ex3.2.2.d", "12454041600", to_decimal(pa.d));
        add("ex3.2.2.e_over_d.a", "-30762573120", e_over_d_string(pa));
        add("ex3.2.2.e_over_d.b", "-30762561840", e_over_d_string(pb));
        add("ex3.2.2.verdict", "not-homeomorphic", verdict_name(classify_pair(a, b).verdict));
    }
    {
        const MultiDegree a(5, {66, 56, 45, 39, 16, 15, 8, 7, 3});
        const MultiDegree b(5, {64, 60, 42, 39, 20, 11, 9, 7, 3});
        const auto pa = invariant_profile(a);
        const auto pb = invariant_profile(b);
        add("ex3.2.3.d", "261534873600", to_decimal(pa.d));
        add("ex3.2.3.e_over_d.a", "-33795490160", e_over_d_string(pa));
        add("ex3.2.3.e_over_d.b", "-33795524864", e_over_d_string(pb));
        add("ex3.2.3.verdict", "not-homeomorphic", verdict_name(classify_pair(a, b).verdict));
    }
    {
        const MultiDegree a(4, {66, 56, 45, 39, 16, 15, 8, 3, 2});
        const MultiDegree b(4, {64, 60, 42, 39, 20, 11, 9, 3, 2});
        const auto pa = invariant_profile(a);
        const auto pb = invariant_profile(b);
        add("ex3.3.d", "74724249600", to_decimal(pa.d));
        add("ex3.3.e_over_d.a", "365019422", e_over_d_string(pa));
        add("ex3.3.e_over_d.b", "365025086", e_over_d_string(pb));
        add("ex3.3.verdict", "not-homeomorphic", verdict_name(classify_pair(a, b).verdict));
    }
    {
        const MultiDegree a(6, {66, 56, 45, 16, 15, 8, 3});
        const MultiDegree b(6, {64, 60, 42, 20, 11, 9, 3});
        const auto pa = invariant_profile(a);
        const auto pb = invariant_profile(b);
        add("ex3.4.d", "958003200", to_decimal(pa.d));
        add("ex3.4.e_over_d.a", "1370218430570", e_over_d_string(pa));
        add("ex3.4.e_over_d.b", "1369971514442", e_over_d_string(pb));
        add("ex3.4.verdict", "not-homeomorphic", verdict_name(classify_pair(a, b).verdict));
    }
    // Cross-example remarks: cutting or appending a degree can flip the
    // verdict either way.
    add("remark3.6.verdicts", "diffeomorphic,not-homeomorphic,not-homeomorphic",
        std::string(verdict_name(classify_pair(ex32a, ex32b).verdict)) + "," +
            verdict_name(classify_pair(MultiDegree(5, {66, 56, 45, 39, 16, 15, 8}),
                                       MultiDegree(5, {64, 60, 42, 39, 20, 11, 9}))
                             .verdict) +
            "," +
            verdict_name(classify_pair(MultiDegree(5, {66, 56, 45, 39, 16, 15, 8, 7, 3}),
                                       MultiDegree(5, {64, 60, 42, 39, 20, 11, 9, 7, 3}))
                             .verdict));
    add("remark3.7.verdicts", "diffeomorphic,not-homeomorphic",
        std::string(verdict_name(classify_pair(ex32a, ex32b).verdict)) + "," +
            verdict_name(classify_pair(MultiDegree(4, {66, 56, 45, 39, 16, 15, 8, 3, 2}),
                                       MultiDegree(4, {64, 60, 42, 39, 20, 11, 9, 3, 2}))
                             .verdict));
    add("remark3.8.verdicts", "not-homeomorphic,diffeomorphic",
        std::string(verdict_name(classify_pair(MultiDegree(6, {66, 56, 45, 16, 15, 8, 3}),
                                               MultiDegree(6, {64, 60, 42, 20, 11, 9, 3}))
                                     .verdict)) +
            "," + verdict_name(classify_pair(ex32a, ex32b).verdict));

    const BasePair pair = BasePair::paper_default();
    const MultiDegree base_a(5, pair.first);
    const MultiDegree base_b(5, pair.second);
    add("table1.s.a", "399,25879,1833489,137438707,10682130249",
        join_bigints(power_sums(base_a.degrees(), 5)));
    add("table1.s.b", "399,25879,1833489,137438707,10682130249",
        join_bigints(power_sums(base_b.degrees(), 5)));
    {
        const auto pa = invariant_profile(base_a);
        const auto pb = invariant_profile(base_b);
        add("table1.d", "1136843237376", to_decimal(pa.d));
        add("table1.p1", "-25866", to_decimal(pa.p[0]));
        add("table1.p2", "403244325", to_decimal(pa.p[1]));
        add("table1.e_over_d.a", "-296492615140", e_over_d_string(pa));
        add("table1.e_over_d.b", "-296492615140", e_over_d_string(pb));
        add("table1.factorization", "2^11*3^6*7*11^2*29*31",
            factorization_string(pa.d));
        add("table1.verdict", "diffeomorphic",
            verdict_name(classify_pair(base_a, base_b).verdict));
    }
    add("moduli.m_d", "1382270197857128", to_decimal(moduli_dimension(base_a)));
    add("moduli.m_dprime", "1370693416581393", to_decimal(moduli_dimension(base_b)));

    const struct {
        long long lambda, s;
        const char* expected;
    } deltas[] = {
        {0, 1, "11576781275735"},
        {1, 2, "34356628415559239284"},
        {0, 2, "34347842980758828832"},
    };
    for (const auto& dc : deltas) {
        const DeltaReport rep = delta_closed_form(pair, dc.lambda, dc.s);
        const std::string tag =
            "delta.l" + std::to_string(dc.lambda) + ".s" + std::to_string(dc.s);
        add(tag + ".direct", dc.expected, to_decimal(rep.direct_total));
        add(tag + ".closed", dc.expected, to_decimal(rep.closed_total));
    }
    return checks;
}

bool all_pass(const std::vector<PaperCheck>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string search_to_json(const SearchResult& r) {
    nlohmann::json j;
    j["enumerated"] = r.enumerated;
    j["completed"] = r.completed;
    j["last_completed_partition"] = r.last_completed_partition;
    j["collisions"] = nlohmann::json::array();
    for (const auto& rec : r.collisions) {
        nlohmann::json g;
        g["d"] = to_decimal(rec.profile.d);
        g["p"] = nlohmann::json::array();
        for (const auto& pk : rec.profile.p) g["p"].push_back(to_decimal(pk));
        g["e"] = to_decimal(rec.profile.e);
        g["members"] = nlohmann::json::array();
        for (const auto& md : rec.members) g["members"].push_back(md.degrees());
        g["verdicts"] = nlohmann::json::array();
        for (const auto& v : rec.pair_verdicts) g["verdicts"].push_back(verdict_name(v.verdict));
        j["collisions"].push_back(g);
    }
    return j.dump();
}

std::string checks_to_json(const std::vector<PaperCheck>& checks) {
    nlohmann::json j;
    j["pass"] = all_pass(checks);
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        j["checks"].push_back({{"name", c.name},
                               {"expected", c.expected},
                               {"actual", c.actual},
                               {"pass", c.pass}});
    }
    return j.dump();
}

}  // namespace ci
