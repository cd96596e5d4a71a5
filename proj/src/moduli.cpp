#include "ci/moduli.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <atomic>

#include <nlohmann/json.hpp>

#include "ci/classify.hpp"
#include "ci/symfun.hpp"

namespace ci {

namespace {

struct DegreeGroup {
    long long value;
    long long count;
};

std::vector<DegreeGroup> group_degrees(const std::vector<long long>& degrees) {
    std::vector<DegreeGroup> groups;
    for (long long d : degrees) {
        if (!groups.empty() && groups.back().value == d)
            ++groups.back().count;
        else
            groups.push_back({d, 1});
    }
    return groups;
}

// Enumerates multiset subsets of the grouped degrees with sum <= max_sum,
// calling visit(sum, size, multiplicity) for each nonempty one.
template <class Visit>
void for_each_subset(const std::vector<DegreeGroup>& groups, long long max_sum,
                     const Visit& visit) {
    struct Rec {
        const std::vector<DegreeGroup>& groups;
        long long max_sum;
        const Visit& visit;
        void go(std::size_t gi, long long sum, long long size, const BigInt& mult) {
            if (gi == groups.size()) {
                if (size > 0) visit(sum, size, mult);
                return;
            }
            const auto& [value, count] = groups[gi];
            BigInt choose = 1;
            for (long long k = 0; sum + k * value <= max_sum && k <= count; ++k) {
                if (k > 0) {
                    // C(count, k) built incrementally
                    choose = choose * (count - k + 1) / k;
                }
                go(gi + 1, sum + k * value, size + k, mult * choose);
            }
        }
    };
    Rec rec{groups, max_sum, visit};
    rec.go(0, 0, 0, BigInt(1));
}

void check_moduli_preconditions(const MultiDegree& md) {
    if (md.n() < 2)
        throw std::invalid_argument("moduli_dimension: requires n >= 2");
}

}  // namespace

BigInt moduli_dimension(const MultiDegree& md) {
    check_moduli_preconditions(md);
    const long long N = md.ambient_dimension();
    BigInt m = 1 - BigInt(N + 1) * (N + 1);
    const auto& degrees = md.degrees();
    if (degrees.empty()) return m;
    const long long maxd = degrees.front();  // canonical order is descending
    const auto groups = group_degrees(degrees);
    for (const auto& [value, count] : groups) m += count * binomial(N + value, N);
    BigInt acc = 0;
    for_each_subset(groups, maxd, [&](long long sum, long long size, const BigInt& mult) {
        BigInt row = 0;
        for (const auto& [value, count] : groups)
            if (value >= sum) row += count * binomial(N + value - sum, N);
        if (size % 2 == 1)
            acc -= mult * row;
        else
            acc += mult * row;
    });
    return m + acc;
}

BigInt moduli_dimension_dfs(const MultiDegree& md) {
    check_moduli_preconditions(md);
    const long long N = md.ambient_dimension();
    BigInt m = 1 - BigInt(N + 1) * (N + 1);
    std::vector<long long> asc = md.degrees();
    std::sort(asc.begin(), asc.end());
    const std::size_t r = asc.size();
    for (std::size_t i = 0; i < r; ++i) {
        const long long di = asc[i];
        m += binomial(N + di, N);
        // depth-first over index subsets; ascending order makes the
        // partial-sum cutoff a clean break
        struct Dfs {
            const std::vector<long long>& asc;
            long long N, di;
            BigInt acc{0};
            void go(std::size_t start, long long sum, int size) {
                for (std::size_t j = start; j < asc.size(); ++j) {
                    const long long ns = sum + asc[j];
                    if (ns > di) break;
                    if ((size + 1) % 2 == 1)
                        acc -= binomial(N + di - ns, N);
                    else
                        acc += binomial(N + di - ns, N);
                    go(j + 1, ns, size + 1);
                }
            }
        };
        Dfs dfs{asc, N, di};
        dfs.go(0, 0, 0);
        m += dfs.acc;
    }
    return m;
}

BasePair::BasePair(std::vector<long long> f, std::vector<long long> s)
    : first(std::move(f)), second(std::move(s)) {
    if (first.size() != second.size() || first.empty())
        throw std::invalid_argument("BasePair: lists must be nonempty and of equal length");
    for (long long d : first)
        if (d < 2) throw std::invalid_argument("BasePair: degrees must be >= 2");
    for (long long d : second)
        if (d < 2) throw std::invalid_argument("BasePair: degrees must be >= 2");
}

BasePair BasePair::paper_default() {
    BasePair pair({88, 77, 72, 54, 48, 31, 29}, {87, 81, 64, 62, 44, 33, 28});
    if (power_sums(pair.first, 5) != power_sums(pair.second, 5))
        throw std::logic_error("BasePair: default pair must share power sums s_1..s_5");
    return pair;
}

bool BasePair::is_default() const {
    static const std::vector<long long> f = {88, 77, 72, 54, 48, 31, 29};
    static const std::vector<long long> s = {87, 81, 64, 62, 44, 33, 28};
    return first == f && second == s;
}

ComposedFamilyPoint compose(const BasePair& pair, long long lambda, long long mu) {
    if (lambda < 0 || mu < 0 || lambda + mu < 1)
        throw std::invalid_argument("compose: need lambda, mu >= 0 with lambda + mu >= 1");
    const long long s = lambda + mu;
    std::vector<long long> degrees;
    degrees.reserve(static_cast<std::size_t>(pair.codimension() * s));
    for (long long i = 0; i < lambda; ++i)
        degrees.insert(degrees.end(), pair.first.begin(), pair.first.end());
    for (long long i = 0; i < mu; ++i)
        degrees.insert(degrees.end(), pair.second.begin(), pair.second.end());
    MultiDegree md(5, std::move(degrees));
    return {lambda, mu, s, md, pair.codimension() * s + 5};
}

namespace {

using List = std::vector<long long>;

BigInt pair_sum(const List& a, const List& b, long long N) {
    BigInt acc = 0;
    for (long long ai : a)
        for (long long bk : b) acc += binomial(N + ai - bk, N);
    return acc;
}

BigInt triple_sum(const List& a, const List& b, const List& c, long long N) {
    BigInt acc = 0;
    for (long long ai : a)
        for (long long bj : b)
            for (long long ck : c) acc += binomial(N + ai - bj - ck, N);
    return acc;
}

BigInt pair_within(const List& a, const List& b, long long N) {
    BigInt acc = 0;
    for (long long ai : a)
        for (std::size_t k1 = 0; k1 < b.size(); ++k1)
            for (std::size_t k2 = k1 + 1; k2 < b.size(); ++k2)
                acc += binomial(N + ai - b[k1] - b[k2], N);
    return acc;
}

BigInt as_integer(const Rational& q, const char* what) {
    if (denominator(q) != 1) throw std::logic_error(std::string(what) + ": non-integer value");
    return numerator(q);
}

}  // namespace

GammaTable gamma_table(const BasePair& pair, long long N) {
    if (N < 1) throw std::invalid_argument("gamma_table: N must be >= 1");
    const List& d = pair.first;
    const List& p = pair.second;
    GammaTable g;
    g.ddd = triple_sum(d, d, d, N);
    g.ppp = triple_sum(p, p, p, N);
    g.ddp = triple_sum(d, d, p, N);
    g.ppd = triple_sum(p, p, d, N);
    g.dpp = triple_sum(d, p, p, N);
    g.pdd = triple_sum(p, d, d, N);
    g.d_dpair = pair_within(d, d, N);
    g.p_dpair = pair_within(p, d, N);
    g.d_ppair = pair_within(d, p, N);
    g.p_ppair = pair_within(p, p, N);
    return g;
}

DeltaReport delta_closed_form(const BasePair& pair, long long lambda, long long s) {
    if (lambda < 0 || lambda >= s)
        throw std::invalid_argument("delta_closed_form: need 0 <= lambda < s");
    if (!pair.is_default())
        throw std::invalid_argument(
            "delta_closed_form: the M_3 closed form is derived for the default base pair only");
    const long long N = pair.codimension() * s + 5;
    const List& d = pair.first;
    const List& p = pair.second;
    DeltaReport rep;
    rep.lambda = lambda;
    rep.s = s;
    rep.ambient = N;

    BigInt m0 = 0;
    for (long long di : d) m0 += binomial(N + di, N);
    for (long long di : p) m0 -= binomial(N + di, N);
    rep.m0 = m0;

    rep.m1 = (-2 * lambda - 1) * pair_sum(d, d, N) +
             (1 + 2 * lambda - s) * (pair_sum(d, p, N) + pair_sum(p, d, N)) +
             (2 * s - 2 * lambda - 1) * pair_sum(p, p, N);

    const GammaTable g = gamma_table(pair, N);
    const Rational L = lambda, S = s;
    Rational m2 = (2 * L + 1) * Rational(g.d_dpair) +
                  L * (3 * L + 1) / 2 * Rational(g.ddd) +
                  ((L + 1) * (L + 1) * (S - L - 1) - L * L * (S - L)) * Rational(g.ddp) +
                  (S - 2 * L - 1) * (Rational(g.d_ppair) + Rational(g.p_dpair)) +
                  (S - L - 1) * (S - 3 * L - 2) / 2 * Rational(g.dpp) +
                  L * (2 * S - 3 * L - 1) / 2 * Rational(g.pdd) +
                  ((L + 1) * (S - L - 1) * (S - L - 1) - L * (S - L) * (S - L)) * Rational(g.ppd) +
                  (1 - 2 * S + 2 * L) * Rational(g.p_ppair) +
                  (S - L - 1) * (2 - 3 * S + 3 * L) / 2 * Rational(g.ppp);
    rep.m2 = as_integer(m2, "M_2");

    // Closed form of the j=3 term for the default pair; only the four small
    // degree gaps 88/87 against {31,29,28} survive the vanishing convention.
    Rational m3 =
        (12 - 21 * S + 12 * S * S - 3 * S * S * S + 44 * L - 54 * S * L + 18 * S * S * L +
         60 * L * L - 48 * S * L * L + 40 * L * L * L) / 6 +
        (-6 + 9 * S - 3 * S * S - 23 * L + 30 * S * L - 12 * S * S * L - 33 * L * L +
         36 * S * L * L - 28 * L * L * L) / 6 * Rational(binomial(N + 1, N)) -
        (-1 + S - 2 * L) * (2 - 3 * S + S * S + 4 * L - 4 * S * L + 4 * L * L) / 2 *
            Rational(binomial(N + 2, N)) +
        (-1 + S - L) * (6 - 7 * S + 2 * S * S + 13 * L - 7 * S * L + 8 * L * L) / 3 *
            Rational(binomial(N + 3, N)) +
        (1 - S + L) * (2 - S + L) * (3 - S + 4 * L) / 6 * Rational(binomial(N + 4, N));
    rep.m3 = as_integer(m3, "M_3");

    rep.closed_total = rep.m0 + rep.m1 + rep.m2 + rep.m3;
    rep.direct_total = moduli_dimension(compose(pair, lambda + 1, s - lambda - 1).md) -
                       moduli_dimension(compose(pair, lambda, s - lambda).md);
    rep.agreement = rep.closed_total == rep.direct_total;
    return rep;
}

MonotonicityReport verify_monotonicity(const BasePair& pair, int s_max, int jobs) {
    if (s_max < 1) throw std::invalid_argument("verify_monotonicity: s_max must be >= 1");
    static const BigInt kBig("4000000000000000000000000");  // 4e24, exact
    std::vector<std::pair<long long, long long>> points;  // (s, lambda), ordered
    for (long long s = 1; s <= s_max; ++s)
        for (long long lambda = 0; lambda < s; ++lambda) points.emplace_back(s, lambda);

    std::vector<MonotonicityRow> rows(points.size());
    const bool closed = pair.is_default();
    auto eval = [&](std::size_t idx) {
        const auto [s, lambda] = points[idx];
        MonotonicityRow row;
        row.s = s;
        row.lambda = lambda;
        if (closed) {
            DeltaReport rep = delta_closed_form(pair, lambda, s);
            row.delta = rep.direct_total;
            row.closed_matches = rep.agreement;
        } else {
            row.delta = moduli_dimension(compose(pair, lambda + 1, s - lambda - 1).md) -
                        moduli_dimension(compose(pair, lambda, s - lambda).md);
            row.closed_matches = true;  // no closed form to compare
        }
        row.positive = row.delta > 0;
        row.above_3148 = row.delta > 3148;
        row.above_4e24 = row.delta > kBig;
        rows[idx] = row;
    };

    const int workers = std::max(1, jobs);
    if (workers == 1) {
        for (std::size_t i = 0; i < points.size(); ++i) eval(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < points.size(); i = next++) eval(i);
            });
        for (auto& t : pool) t.join();
    }

    MonotonicityReport report;
    report.rows = std::move(rows);
    report.min_delta_per_s.assign(static_cast<std::size_t>(s_max), BigInt(0));
    report.all_ok = true;
    std::vector<bool> seen(static_cast<std::size_t>(s_max), false);
    for (const auto& row : report.rows) {
        const std::size_t si = static_cast<std::size_t>(row.s - 1);
        if (!seen[si] || row.delta < report.min_delta_per_s[si]) {
            report.min_delta_per_s[si] = row.delta;
            seen[si] = true;
        }
        bool ok = row.positive && row.above_3148 && row.closed_matches;
        if (row.s >= 3) ok = ok && row.above_4e24;
        report.all_ok = report.all_ok && ok;
    }
    return report;
}

FamilyReport family_report(const BasePair& pair, long long s, int jobs) {
    if (s < 1) throw std::invalid_argument("family_report: s must be >= 1");
    FamilyReport rep;
    rep.s = s;
    rep.rows.resize(static_cast<std::size_t>(s + 1));

    std::vector<InvariantProfile> profiles(rep.rows.size());
    auto eval = [&](std::size_t idx) {
        const long long lambda = static_cast<long long>(idx);
        ComposedFamilyPoint pt = compose(pair, lambda, s - lambda);
        rep.rows[idx].lambda = lambda;
        rep.rows[idx].m = moduli_dimension(pt.md);
        profiles[idx] = invariant_profile(pt.md);
    };
    const int workers = std::max(1, jobs);
    if (workers == 1) {
        for (std::size_t i = 0; i < rep.rows.size(); ++i) eval(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < rep.rows.size(); i = next++) eval(i);
            });
        for (auto& t : pool) t.join();
    }

    rep.profiles_identical = true;
    for (std::size_t i = 1; i < profiles.size(); ++i)
        rep.profiles_identical =
            rep.profiles_identical && profiles[i].invariants_equal(profiles[0]);
    rep.traving_holds = traving_condition(5, profiles[0].d).holds;
    rep.strictly_increasing = true;
    for (std::size_t i = 1; i < rep.rows.size(); ++i) {
        rep.rows[i].delta = rep.rows[i].m - rep.rows[i - 1].m;
        rep.strictly_increasing = rep.strictly_increasing && rep.rows[i].delta > 0;
    }
    return rep;
}

std::string delta_to_json(const DeltaReport& r) {
    nlohmann::json j;
    j["lambda"] = r.lambda;
    j["s"] = r.s;
    j["N"] = r.ambient;
    j["M0"] = to_decimal(r.m0);
    j["M1"] = to_decimal(r.m1);
    j["M2"] = to_decimal(r.m2);
    j["M3"] = to_decimal(r.m3);
    j["closed_total"] = to_decimal(r.closed_total);
    j["direct_total"] = to_decimal(r.direct_total);
    j["agreement"] = r.agreement;
    return j.dump();
}

std::string monotonicity_to_json(const MonotonicityReport& r) {
    nlohmann::json j;
    j["all_ok"] = r.all_ok;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : r.rows) {
        j["rows"].push_back({{"s", row.s},
                             {"lambda", row.lambda},
                             {"delta", to_decimal(row.delta)},
                             {"positive", row.positive},
                             {"above_3148", row.above_3148},
                             {"above_4e24", row.above_4e24},
                             {"closed_matches", row.closed_matches}});
    }
    j["min_delta_per_s"] = nlohmann::json::array();
    for (const auto& v : r.min_delta_per_s) j["min_delta_per_s"].push_back(to_decimal(v));
    return j.dump();
}

std::string family_to_json(const FamilyReport& r) {
    nlohmann::json j;
    j["s"] = r.s;
    j["profiles_identical"] = r.profiles_identical;
    j["traving_holds"] = r.traving_holds;
    j["strictly_increasing"] = r.strictly_increasing;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : r.rows) {
        j["rows"].push_back({{"lambda", row.lambda},
                             {"m", to_decimal(row.m)},
                             {"delta", to_decimal(row.delta)}});
    }
    return j.dump();
}

std::string family_to_table(const FamilyReport& r) {
    std::ostringstream os;
    os << "s = " << r.s << "  (family of " << r.s + 1 << " diffeomorphic points)\n";
    os << "lambda  m(d_{lambda,s-lambda})  delta\n";
    for (const auto& row : r.rows) {
        os << row.lambda << "  " << row.m << "  ";
        if (row.lambda == 0)
            os << "-";
        else
            os << row.delta;
        os << '\n';
    }
    os << "profiles_identical=" << (r.profiles_identical ? "yes" : "no")
       << " traving=" << (r.traving_holds ? "yes" : "no")
       << " strictly_increasing=" << (r.strictly_increasing ? "yes" : "no") << '\n';
    return os.str();
}

std::string gamma_to_json(const GammaTable& g, long long N) {
    nlohmann::json j;
    j["N"] = N;
    j["ddd"] = to_decimal(g.ddd);
    j["ppp"] = to_decimal(g.ppp);
    j["ddp"] = to_decimal(g.ddp);
    j["ppd"] = to_decimal(g.ppd);
    j["dpp"] = to_decimal(g.dpp);
    j["pdd"] = to_decimal(g.pdd);
    j["d_dpair"] = to_decimal(g.d_dpair);
    j["p_dpair"] = to_decimal(g.p_dpair);
    j["d_ppair"] = to_decimal(g.d_ppair);
    j["p_ppair"] = to_decimal(g.p_ppair);
    return j.dump();
}

}  // namespace ci
