// Command-line front end: exact invariants, classification, moduli
// dimensions and collision search for complex complete intersections.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ci/classify.hpp"
#include "ci/invariants.hpp"
#include "ci/moduli.hpp"
#include "ci/search.hpp"

namespace {

using namespace ci;

std::vector<long long> parse_degree_list(const std::string& text) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string tok = text.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw CLI::ValidationError("degrees", "not an integer: '" + tok + "'");
        }
        pos = comma + 1;
    }
    if (out.empty()) throw CLI::ValidationError("degrees", "empty degree list");
    return out;
}

MultiDegree parse_multidegree(int n, const std::string& text) {
    std::vector<long long> degrees = parse_degree_list(text);
    std::size_t ones = 0;
    for (long long d : degrees) {
        if (d < 1) throw CLI::ValidationError("degrees", "degrees must be >= 1");
        if (d == 1) ++ones;
    }
    if (ones > 0)
        std::cerr << "warning: dropped " << ones
                  << " degree-1 entries (linear sections change nothing)\n";
    return MultiDegree(n, std::move(degrees));
}

BasePair load_pair(const std::string& path) {
    if (path.empty()) return BasePair::paper_default();
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("pair-file", "cannot open " + path);
    nlohmann::json j;
    in >> j;
    return BasePair(j.at("first").get<std::vector<long long>>(),
                    j.at("second").get<std::vector<long long>>());
}

std::string profile_table(const MultiDegree& md, const InvariantProfile& p) {
    std::ostringstream os;
    os << "n = " << p.n << "\ndegrees =";
    for (long long d : md.degrees()) os << ' ' << d;
    os << "\nd = " << p.d << '\n';
    for (std::size_t k = 0; k < p.p.size(); ++k)
        os << "p" << k + 1 << " = " << p.p[k] << '\n';
    os << "e = " << p.e << '\n';
    if (denominator(p.e_over_d) == 1)
        os << "e/d = " << numerator(p.e_over_d) << '\n';
    else
        os << "e/d = " << p.e_over_d << " (non-integral)\n";
    return os.str();
}

int env_jobs(int cli_jobs) {
    if (cli_jobs > 0) return cli_jobs;
    if (const char* env = std::getenv("CI_JOBS")) return std::max(1, std::atoi(env));
    return 1;
}

std::string pick_format(std::string format) {
    if (!format.empty()) return format;
    if (const char* env = std::getenv("CI_FORMAT")) return env;
    return "table";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants and moduli dimensions of complex complete intersections"};
    app.require_subcommand(1);
    std::string format;
    app.add_option("--format", format, "output format: json|table")
        ->check(CLI::IsMember({"json", "table"}));

    int n = 5;
    std::string dlist, alist, blist, total_str, pair_file, prefix_str;
    int jobs = 0;

    auto* cmd_inv = app.add_subcommand("invariants", "invariant profile of one multidegree");
    cmd_inv->add_option("--n", n, "complex dimension")->required();
    cmd_inv->add_option("--d", dlist, "comma-separated degrees")->required();

    auto* cmd_cmp = app.add_subcommand("compare", "classify a pair of multidegrees");
    cmd_cmp->add_option("--n", n, "complex dimension")->required();
    cmd_cmp->add_option("--a", alist, "first degree list")->required();
    cmd_cmp->add_option("--b", blist, "second degree list")->required();

    auto* cmd_trav = app.add_subcommand("traving", "prime-exponent smoothing condition");
    cmd_trav->add_option("--n", n, "complex dimension")->required();
    cmd_trav->add_option("--d", total_str, "total degree (decimal, any size)")->required();

    bool naive = false;
    auto* cmd_mod = app.add_subcommand("moduli", "moduli-space dimension");
    cmd_mod->add_option("--n", n, "complex dimension")->required();
    cmd_mod->add_option("--d", dlist, "comma-separated degrees")->required();
    cmd_mod->add_flag("--naive", naive, "use the index-based DFS path");

    long long fam_s = 1;
    int verify_to = 0;
    auto* cmd_fam = app.add_subcommand("family", "composed family at fixed s");
    cmd_fam->add_option("--s", fam_s, "number of base-pair copies")->required();
    cmd_fam->add_option("--pair-file", pair_file, "JSON {first:[...],second:[...]}");
    cmd_fam->add_option("--jobs", jobs, "worker threads");
    cmd_fam->add_option("--verify-to", verify_to,
                        "also run the monotonicity checks for all s up to this bound");

    long long gamma_N = 12;
    auto* cmd_gam = app.add_subcommand("gamma", "triple/pair binomial sum table");
    cmd_gam->add_option("--N", gamma_N, "ambient projective dimension")->required();
    cmd_gam->add_option("--pair-file", pair_file, "JSON {first:[...],second:[...]}");

    int r_min = 1, r_max = 1;
    long long max_degree = 2;
    std::size_t max_records = 0;
    std::string checkpoint;
    auto* cmd_search = app.add_subcommand("search", "bounded collision search");
    cmd_search->add_option("--n", n, "complex dimension")->required();
    cmd_search->add_option("--r-min", r_min, "minimum codimension")->required();
    cmd_search->add_option("--r-max", r_max, "maximum codimension")->required();
    cmd_search->add_option("--max-degree", max_degree, "largest degree")->required();
    cmd_search->add_option("--total", total_str, "fixed total degree");
    cmd_search->add_option("--prefix", prefix_str, "fixed leading degrees");
    cmd_search->add_option("--jobs", jobs, "worker threads");
    cmd_search->add_option("--max-records", max_records, "profile budget (0 = unlimited)");
    cmd_search->add_option("--checkpoint", checkpoint, "checkpoint file on budget overrun");

    std::string corrupt;
    auto* cmd_verify = app.add_subcommand("verify-paper", "recompute every source table");
    cmd_verify->add_option("--self-test-corrupt", corrupt,
                           "corrupt one named expected constant (harness self-test)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const std::string fmt = pick_format(format);
    try {
        if (*cmd_inv) {
            MultiDegree md = parse_multidegree(n, dlist);
            const InvariantProfile p = invariant_profile(md);
            std::cout << (fmt == "json" ? profile_to_json(md, p) + "\n" : profile_table(md, p));
        } else if (*cmd_cmp) {
            const auto r = classify_pair(parse_multidegree(n, alist), parse_multidegree(n, blist));
            if (fmt == "json") {
                std::cout << classification_to_json(r) << '\n';
            } else {
                std::cout << "verdict: " << verdict_name(r.verdict) << '\n';
                if (r.verdict == Verdict::NotHomeomorphic)
                    std::cout << "witness: " << r.witness_invariant << " = " << r.witness_a
                              << " vs " << r.witness_b << '\n';
                for (const auto& c : r.traving.checks)
                    std::cout << "traving p=" << c.prime << " nu=" << c.exponent
                              << " threshold=" << c.threshold
                              << (c.satisfied ? " ok" : " fail") << '\n';
            }
        } else if (*cmd_trav) {
            const auto r = traving_condition(n, BigInt(total_str));
            if (fmt == "json") {
                nlohmann::json j;
                j["holds"] = r.holds;
                j["primes"] = nlohmann::json::array();
                for (const auto& c : r.checks)
                    j["primes"].push_back({{"p", c.prime},
                                           {"exponent", c.exponent},
                                           {"threshold", c.threshold},
                                           {"satisfied", c.satisfied}});
                std::cout << j.dump() << '\n';
            } else {
                std::cout << "holds: " << (r.holds ? "yes" : "no") << '\n';
                for (const auto& c : r.checks)
                    std::cout << "p=" << c.prime << " nu=" << c.exponent
                              << " threshold=" << c.threshold
                              << (c.satisfied ? " ok" : " fail") << '\n';
            }
        } else if (*cmd_mod) {
            MultiDegree md = parse_multidegree(n, dlist);
            const BigInt m = naive ? moduli_dimension_dfs(md) : moduli_dimension(md);
            if (fmt == "json")
                std::cout << "{\"m\":\"" << m << "\"}\n";
            else
                std::cout << "m = " << m << '\n';
        } else if (*cmd_fam) {
            const BasePair pair = load_pair(pair_file);
            const FamilyReport rep = family_report(pair, fam_s, env_jobs(jobs));
            std::cout << (fmt == "json" ? family_to_json(rep) + "\n" : family_to_table(rep));
            if (verify_to > 0) {
                const auto mono = verify_monotonicity(pair, verify_to, env_jobs(jobs));
                if (fmt == "json")
                    std::cout << monotonicity_to_json(mono) << '\n';
                else
                    std::cout << "monotonicity to s=" << verify_to << ": "
                              << (mono.all_ok ? "all checks pass" : "FAILED") << '\n';
                if (!mono.all_ok) return 2;
            }
        } else if (*cmd_gam) {
            const BasePair pair = load_pair(pair_file);
            std::cout << gamma_to_json(gamma_table(pair, gamma_N), gamma_N) << '\n';
        } else if (*cmd_search) {
            SearchConfig cfg;
            cfg.n = n;
            cfg.r_min = r_min;
            cfg.r_max = r_max;
            cfg.max_degree = max_degree;
            if (!total_str.empty()) cfg.fixed_total = BigInt(total_str);
            if (!prefix_str.empty()) cfg.prefix = parse_degree_list(prefix_str);
            cfg.jobs = env_jobs(jobs);
            cfg.max_records = max_records;
            cfg.checkpoint_path = checkpoint;
            const SearchResult result = find_collisions(cfg);
            if (fmt == "json") {
                std::cout << search_to_json(result) << '\n';
            } else {
                std::cout << "enumerated " << result.enumerated << " multidegrees, "
                          << result.collisions.size() << " collision groups"
                          << (result.completed ? "" : " (budget exceeded, partial)") << '\n';
                for (const auto& rec : result.collisions) {
                    std::cout << "d=" << rec.profile.d << ":";
                    for (const auto& md : rec.members) {
                        std::cout << " (";
                        for (std::size_t i = 0; i < md.degrees().size(); ++i)
                            std::cout << (i ? "," : "") << md.degrees()[i];
                        std::cout << ")";
                    }
                    std::cout << '\n';
                }
            }
        } else if (*cmd_verify) {
            const auto checks = verify_paper_examples(corrupt);
            if (fmt == "json") {
                std::cout << checks_to_json(checks) << '\n';
            } else {
                for (const auto& c : checks)
                    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                              << (c.pass ? "" : "  expected=" + c.expected +
                                                    " actual=" + c.actual)
                              << '\n';
            }
            if (!all_pass(checks)) return 2;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
