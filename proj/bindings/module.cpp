#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ci/classify.hpp"
#include "ci/invariants.hpp"
#include "ci/moduli.hpp"
#include "ci/search.hpp"
#include "ci/symfun.hpp"

namespace py = pybind11;
using namespace ci;

namespace {

py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& v) {
    return BigInt(static_cast<std::string>(py::str(static_cast<py::object>(v))));
}

py::object rational_to_py(const Rational& q) {
    // exact integers become python ints; anything else a (num, den) tuple
    if (denominator(q) == 1) return to_py(numerator(q));
    return py::make_tuple(to_py(numerator(q)), to_py(denominator(q)));
}

py::dict profile_dict(const MultiDegree& md) {
    const auto p = invariant_profile(md);
    py::dict out;
    out["n"] = p.n;
    out["degrees"] = md.degrees();
    out["d"] = to_py(p.d);
    py::list ps;
    for (const auto& pk : p.p) ps.append(to_py(pk));
    out["p"] = ps;
    out["e"] = to_py(p.e);
    out["e_over_d"] = rational_to_py(p.e_over_d);
    return out;
}

py::dict traving_dict(const TravingReport& r) {
    py::dict out;
    out["holds"] = r.holds;
    py::list primes;
    for (const auto& c : r.checks) {
        py::dict pc;
        pc["p"] = c.prime;
        pc["exponent"] = c.exponent;
        pc["threshold"] = c.threshold;
        pc["satisfied"] = c.satisfied;
        primes.append(pc);
    }
    out["primes"] = primes;
    return out;
}

py::dict classify_dict(const ClassificationResult& r) {
    py::dict out;
    out["verdict"] = verdict_name(r.verdict);
    if (r.verdict == Verdict::NotHomeomorphic) {
        py::dict w;
        w["invariant"] = r.witness_invariant;
        w["a"] = to_py(BigInt(r.witness_a));
        w["b"] = to_py(BigInt(r.witness_b));
        out["witness"] = w;
    }
    out["traving"] = traving_dict(r.traving);
    return out;
}

BasePair pair_from_lists(const std::vector<long long>& first,
                         const std::vector<long long>& second) {
    if (first.empty() && second.empty()) return BasePair::paper_default();
    return BasePair(first, second);
}

}  // namespace

PYBIND11_MODULE(_cicalc, m) {
    m.doc() = "exact invariants and moduli dimensions of complex complete intersections";

    m.def("canonical_degrees",
          [](int n, const std::vector<long long>& degrees) {
              return MultiDegree(n, degrees).degrees();
          },
          py::arg("n"), py::arg("degrees"));

    m.def("total_degree",
          [](int n, const std::vector<long long>& degrees) {
              return to_py(total_degree(MultiDegree(n, degrees)));
          },
          py::arg("n"), py::arg("degrees"));

    m.def("power_sums",
          [](const std::vector<long long>& degrees, int k) {
              py::list out;
              for (const auto& s : power_sums(degrees, k)) out.append(to_py(s));
              return out;
          },
          py::arg("degrees"), py::arg("k"));

    m.def("invariant_profile",
          [](int n, const std::vector<long long>& degrees) {
              return profile_dict(MultiDegree(n, degrees));
          },
          py::arg("n"), py::arg("degrees"));

    m.def("classify",
          [](int n, const std::vector<long long>& a, const std::vector<long long>& b) {
              return classify_dict(classify_pair(MultiDegree(n, a), MultiDegree(n, b)));
          },
          py::arg("n"), py::arg("a"), py::arg("b"));

    m.def("traving",
          [](int n, const py::int_& d) { return traving_dict(traving_condition(n, from_py(d))); },
          py::arg("n"), py::arg("d"));

    m.def("moduli_dimension",
          [](int n, const std::vector<long long>& degrees, bool naive) {
              const MultiDegree md(n, degrees);
              return to_py(naive ? moduli_dimension_dfs(md) : moduli_dimension(md));
          },
          py::arg("n"), py::arg("degrees"), py::arg("naive") = false);

    m.def("compose",
          [](long long lam, long long mu, const std::vector<long long>& first,
             const std::vector<long long>& second) {
              const auto pt = compose(pair_from_lists(first, second), lam, mu);
              py::dict out;
              out["lambda"] = pt.lambda;
              out["mu"] = pt.mu;
              out["s"] = pt.s;
              out["N"] = pt.ambient;
              out["degrees"] = pt.md.degrees();
              return out;
          },
          py::arg("lam"), py::arg("mu"), py::arg("first") = std::vector<long long>{},
          py::arg("second") = std::vector<long long>{});

    m.def("delta_closed_form",
          [](long long lam, long long s) {
              const auto r = delta_closed_form(BasePair::paper_default(), lam, s);
              py::dict out;
              out["lambda"] = r.lambda;
              out["s"] = r.s;
              out["N"] = r.ambient;
              out["M"] = py::make_tuple(to_py(r.m0), to_py(r.m1), to_py(r.m2), to_py(r.m3));
              out["closed_total"] = to_py(r.closed_total);
              out["direct_total"] = to_py(r.direct_total);
              out["agreement"] = r.agreement;
              return out;
          },
          py::arg("lam"), py::arg("s"));

    m.def("family",
          [](long long s, int jobs, const std::vector<long long>& first,
             const std::vector<long long>& second) {
              const auto rep = family_report(pair_from_lists(first, second), s, jobs);
              py::dict out;
              out["s"] = rep.s;
              out["profiles_identical"] = rep.profiles_identical;
              out["traving_holds"] = rep.traving_holds;
              out["strictly_increasing"] = rep.strictly_increasing;
              py::list rows;
              for (const auto& row : rep.rows) {
                  py::dict r;
                  r["lambda"] = row.lambda;
                  r["m"] = to_py(row.m);
                  r["delta"] = to_py(row.delta);
                  rows.append(r);
              }
              out["rows"] = rows;
              return out;
          },
          py::arg("s"), py::arg("jobs") = 1, py::arg("first") = std::vector<long long>{},
          py::arg("second") = std::vector<long long>{});

    m.def("verify_monotonicity",
          [](int s_max, int jobs) {
              const auto rep = verify_monotonicity(BasePair::paper_default(), s_max, jobs);
              py::dict out;
              out["all_ok"] = rep.all_ok;
              py::list rows;
              for (const auto& row : rep.rows) {
                  py::dict r;
                  r["s"] = row.s;
                  r["lambda"] = row.lambda;
                  r["delta"] = to_py(row.delta);
                  r["closed_matches"] = row.closed_matches;
                  rows.append(r);
              }
              out["rows"] = rows;
              return out;
          },
          py::arg("s_max"), py::arg("jobs") = 1);

    m.def("enumerate_multidegrees",
          [](int n, int r_min, int r_max, long long max_degree,
             const std::vector<long long>& prefix) {
              SearchConfig cfg;
              cfg.n = n;
              cfg.r_min = r_min;
              cfg.r_max = r_max;
              cfg.max_degree = max_degree;
              cfg.prefix = prefix;
              py::list out;
              enumerate_multidegrees(cfg,
                                     [&](const MultiDegree& md) { out.append(md.degrees()); });
              return out;
          },
          py::arg("n"), py::arg("r_min"), py::arg("r_max"), py::arg("max_degree"),
          py::arg("prefix") = std::vector<long long>{});

    m.def("find_collisions",
          [](int n, int r_min, int r_max, long long max_degree,
             const std::vector<long long>& prefix, int jobs) {
              SearchConfig cfg;
              cfg.n = n;
              cfg.r_min = r_min;
              cfg.r_max = r_max;
              cfg.max_degree = max_degree;
              cfg.prefix = prefix;
              cfg.jobs = jobs;
              const auto result = find_collisions(cfg);
              py::dict out;
              out["enumerated"] = result.enumerated;
              out["completed"] = result.completed;
              py::list groups;
              for (const auto& rec : result.collisions) {
                  py::dict g;
                  g["d"] = to_py(rec.profile.d);
                  py::list members;
                  for (const auto& md : rec.members) members.append(md.degrees());
                  g["members"] = members;
                  py::list verdicts;
                  for (const auto& v : rec.pair_verdicts)
                      verdicts.append(verdict_name(v.verdict));
                  g["verdicts"] = verdicts;
                  groups.append(g);
              }
              out["collisions"] = groups;
              return out;
          },
          py::arg("n"), py::arg("r_min"), py::arg("r_max"), py::arg("max_degree"),
          py::arg("prefix") = std::vector<long long>{}, py::arg("jobs") = 1);

    m.def("verify_paper",
          [](const std::string& corrupt) {
              py::list out;
              for (const auto& c : verify_paper_examples(corrupt)) {
                  py::dict check;
                  check["name"] = c.name;
                  check["expected"] = c.expected;
                  check["actual"] = c.actual;
                  check["pass"] = c.pass;
                  out.append(check);
              }
              return out;
          },
          py::arg("corrupt") = std::string());
}
