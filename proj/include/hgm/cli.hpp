#pragma once

#include <functional>
#include <iosfwd>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgm/hecke.hpp"

namespace hgm::cli {

enum Exit { ok = 0, failure = 1, input_error = 2, network_error = 3 };

// flags > HGM_* environment > defaults
struct Config {
    long bits = 256;
    long long n = 512;
    std::string tol = "1e-40";
    std::string format = "text";
    bool offline = false;
    int jobs = 1;
    std::string lmfdb_base_url = "https://www.lmfdb.org";
};

struct CheckResult {
    std::string name;
    bool pass = false;
    bool expected_failure = false;  // printed forms, reported but not counted
    bool skipped = false;
    nlohmann::json detail;
};

std::vector<std::string> suite_names();  // without "all"
// results sorted by name; throws std::invalid_argument on an unknown suite
std::vector<CheckResult> run_suite(const std::string& suite, const Config& cfg, bool printed = false);
nlohmann::json suite_json(const std::string& suite, const Config& cfg, const std::vector<CheckResult>& results);

using Task = std::function<std::vector<CheckResult>()>;
// runs tasks on `jobs` workers; results concatenated in task order
std::vector<CheckResult> run_parallel(const std::vector<Task>& tasks, int jobs);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// lmfdb
struct NetworkError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OrbitComparison {
    std::string label;
    long long dim = 0;
    long long compared = 0;
    std::vector<long long> mismatched_primes;
    bool pass = false;
    nlohmann::json to_json() const;
};

// |trace a_p| = dim |lambda_p| for rational lambda_p, trace 0 otherwise; p up to p_max
OrbitComparison compare_orbit(const EigenformSpec& spec, const std::string& label, const nlohmann::json& record,
                              long long p_max = 50);
// GET {base}/api/mf_newforms/?label=...; throws NetworkError
nlohmann::json fetch_newform(const std::string& base_url, const std::string& label);

}  // namespace hgm::cli
