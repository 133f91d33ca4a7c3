#include <httplib.h>

#include "hgm/cli.hpp"

namespace hgm::cli {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long long label_level(const std::string& label) {
    auto dot = label.find('.');
    try {
        return std::stoll(label.substr(0, dot));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad newform label '" + label + "'");
    }
}

std::string strip_slash(std::string s) {
    while (!s.empty() && s.back() == '/') s.pop_back();
    return s;
}

}  // namespace

nlohmann::json OrbitComparison::to_json() const {
    return {{"label", label}, {"dim", dim}, {"compared", compared}, {"mismatched_primes", mismatched_primes},
            {"pass", pass}};
}

OrbitComparison compare_orbit(const EigenformSpec& spec, const std::string& label, const nlohmann::json& record,
                              long long p_max) {
    OrbitComparison out;
    out.label = label;
    const auto& rec = record.contains("data") ? record.at("data").at(0) : record;
    out.dim = rec.at("dim").get<long long>();
    const auto& traces = rec.at("traces");
    // traces start at a_1, which is the dimension
    if (traces.empty() || traces.at(0).get<long long>() != out.dim)
        throw std::invalid_argument("traces for " + label + " do not start at a_1");
    long long lvl = label_level(label);
    long long ours = level(spec.family.front());
    for (long long p = 3; p <= p_max; ++p) {
        if (!is_prime(p) || lvl % p == 0 || ours % p == 0) continue;
        if (static_cast<size_t>(p) > traces.size()) break;
        Surd lam = verify_eigen(spec, p);
        long long expect = 0;
        if (lam.is_rational()) {
            Rat v = lam.rational_value();
            if (v.denominator() != 1) throw std::logic_error("non-integral eigenvalue");
            expect = std::llabs(v.numerator()) * out.dim;
        }
        long long trace = traces.at(static_cast<size_t>(p - 1)).get<long long>();
        if (std::llabs(trace) != expect) out.mismatched_primes.push_back(p);
        ++out.compared;
    }
    out.pass = out.compared > 0 && out.mismatched_primes.empty();
    return out;
}

nlohmann::json fetch_newform(const std::string& base_url, const std::string& label) {
    httplib::Client client(strip_slash(base_url));
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    client.set_follow_location(true);
    std::string path = "/api/mf_newforms/?label=" + label + "&_format=json&_fields=label,dim,traces";
    auto res = client.Get(path);
    if (!res) throw NetworkError("request to " + base_url + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200) throw NetworkError("HTTP " + std::to_string(res->status) + " for " + label);
    try {
        auto js = nlohmann::json::parse(res->body);
        if (!js.contains("data") || js["data"].empty()) throw NetworkError("no record for " + label);
        return js;
    } catch (const nlohmann::json::exception& e) {
        throw NetworkError(std::string("malformed response: ") + e.what());
    }
}

}  // namespace hgm::cli
