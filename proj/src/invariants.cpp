#include "ci/invariants.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ci/symfun.hpp"

namespace ci {

MultiDegree::MultiDegree(int n, std::vector<long long> degrees) : n_(n) {
    if (n < 1) throw std::invalid_argument("MultiDegree: n must be >= 1");
    for (long long d : degrees) {
        if (d < 1) throw std::invalid_argument("MultiDegree: degrees must be >= 1");
    }
    std::erase(degrees, 1);
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    degrees_ = std::move(degrees);
}

BigInt total_degree(const MultiDegree& md) {
    BigInt d = 1;
    for (long long di : md.degrees()) d *= di;
    return d;
}

namespace {

// e_1..e_k of t_i = n+r+1 - s_i (or the even-index variant), with
// integrality enforced on every entry.
std::vector<BigInt> shifted_elementary(const MultiDegree& md, int k, int stride) {
    if (k == 0) return {};  // n = 1 has no Pontrjagin entries
    std::vector<BigInt> s = power_sums(md.degrees(), k * stride);
    const BigInt shift = md.ambient_dimension() + 1;
    std::vector<BigInt> t(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i)
        t[static_cast<std::size_t>(i - 1)] = shift - s[static_cast<std::size_t>(i * stride - 1)];
    std::vector<Rational> e = elementary_from_power_sums(t);
    std::vector<BigInt> out;
    out.reserve(e.size());
    for (const Rational& q : e) {
        if (denominator(q) != 1)
            throw std::logic_error("invariants: non-integer class coefficient (arithmetic bug)");
        out.push_back(numerator(q));
    }
    return out;
}

}  // namespace

std::vector<BigInt> chern_coefficients(const MultiDegree& md) {
    return shifted_elementary(md, md.n(), 1);
}

std::vector<BigInt> pontrjagin_coefficients(const MultiDegree& md) {
    return shifted_elementary(md, md.n() / 2, 2);
}

BigInt euler_characteristic(const MultiDegree& md) {
    std::vector<BigInt> c = chern_coefficients(md);
    return total_degree(md) * c.back();
}

InvariantProfile invariant_profile(const MultiDegree& md) {
    InvariantProfile profile;
    profile.n = md.n();
    profile.d = total_degree(md);
    profile.p = pontrjagin_coefficients(md);
    profile.e = euler_characteristic(md);
    profile.e_over_d = Rational(profile.e) / Rational(profile.d);
    return profile;
}

std::string InvariantProfile::key() const {
    std::ostringstream os;
    os << n << '|' << d;
    for (const BigInt& pk : p) os << '|' << pk;
    os << '|' << e;
    return os.str();
}

std::string profile_to_json(const MultiDegree& md, const InvariantProfile& profile) {
    nlohmann::json j;
    j["n"] = profile.n;
    j["degrees"] = md.degrees();
    j["d"] = to_decimal(profile.d);
    j["p"] = nlohmann::json::array();
    for (const BigInt& pk : profile.p) j["p"].push_back(to_decimal(pk));
    j["e"] = to_decimal(profile.e);
    if (denominator(profile.e_over_d) == 1)
        j["e_over_d"] = to_decimal(numerator(profile.e_over_d));
    else
        j["e_over_d"] = nullptr;
    return j.dump();
}

}  // namespace ci
