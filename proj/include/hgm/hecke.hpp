#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgm/qseries.hpp"
#include "hgm/surd.hpp"

namespace hgm {

struct BadPrime : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotProportional : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Inconsistent : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotEigen : std::runtime_error {
    long long index;
    NotEigen(const std::string& what, long long n) : std::runtime_error(what), index(n) {}
};
struct NotCharacter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

constexpr long long kDisplayTerms = 512;
constexpr long long kHeckeTerms = 4096;
constexpr long long kMinMatches = 32;

// B_n = A_{np} + p^2 chi(p) A_{n/p}
IntQSeries hecke_tp(const IntQSeries& series, long long p, const HDPair& pair, long long n_max);

// A Galois family (or the part of it inside S2'), indexed by numerator residue mod b.
class HeckeFamily {
public:
    explicit HeckeFamily(std::vector<HDPair> members);
    static HeckeFamily of(const HDPair& p);  // conjugate family of p

    long long b() const { return b_; }
    long long level() const { return level_; }
    const std::vector<HDPair>& members() const { return members_; }
    const HDPair* member(long long residue) const;  // nullptr if absent
    const HDPair& unit_member() const;
    std::vector<long long> residues() const;
    long long target_residue(long long p, long long j) const;  // j * p^{-1} mod b

    // cached k2_series of the member at residue j, at least to n_max
    const IntQSeries& series(long long j, long long n_max) const;

private:
    std::vector<HDPair> members_;
    long long b_ = 1;
    long long level_ = 1;
    mutable std::map<long long, IntQSeries> cache_;
};

struct HeckeConstant {
    long long p = 0;
    long long j = 0;
    long long k = 0;        // target residue
    long long C = 0;        // T_p K_j = C K_k; 0 when the target lies outside S2'
    bool target_present = true;
    long long matched = 0;  // nonzero coefficients compared
};

HeckeConstant hecke_constant(const HeckeFamily& fam, long long p, long long j, long long n_max = kHeckeTerms);
// smallest prime congruent to c mod b and coprime to the level
long long representative_prime(const HeckeFamily& fam, long long c);
Rat d_constant(const HeckeFamily& fam, long long p, long long ell, long long n_max = kHeckeTerms);
std::vector<HeckeConstant> hecke_table(const HeckeFamily& fam, const std::vector<long long>& primes,
                                       long long n_max = kHeckeTerms);

struct EigenformSpec {
    std::string label;  // e.g. "6.a"; empty when no table row
    std::vector<HDPair> family;
    std::map<HDPair, Surd> betas;
    std::vector<std::string> lmfdb;
    bool reconstructed = false;  // no table row to compare against

    Surd beta(const HDPair& p) const;
    nlohmann::json to_json() const;
    std::string pretty() const;
};

EigenformSpec build_eigenform(const HeckeFamily& fam);
EigenformSpec table_eigenform(const std::string& label);  // throws std::out_of_range

// exact coefficients of sum beta_i K2(i/b, s_i)(N tau)
std::vector<SurdSum> eigen_coefficients(const EigenformSpec& spec, long long n_max);
// n_max = 0 picks max(4096/p, 40b) image terms
Surd verify_eigen(const EigenformSpec& spec, long long p, long long n_max = 0);

std::map<long long, int> trivial_character(long long b);
std::vector<std::map<long long, int>> quadratic_characters(long long b);
EigenformSpec twist_by_quadratic(const EigenformSpec& spec, const std::map<long long, int>& character);

struct TwistReport {
    HDPair pair;
    HDPair twist;
    long long n_max = 0;
    long long equal = 0;    // nonzero coefficients equal, on n = a mod N
    long long flipped = 0;  // nonzero coefficients negated, on n = a + N/2 mod N
    std::vector<long long> mismatches;
    bool pass = false;
    nlohmann::json to_json() const;
};

TwistReport twist_pair_check(const HDPair& pair, long long n_max = kDisplayTerms);

}  // namespace hgm
