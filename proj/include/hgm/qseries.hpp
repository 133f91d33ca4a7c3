#pragma once

#include <array>
#include <gmpxx.h>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgm/rational.hpp"

namespace hgm {

struct NotInS2 : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotCongruence : std::domain_error {
    using std::domain_error::domain_error;
};
struct BadModulus : std::domain_error {
    using std::domain_error::domain_error;
};
struct InsufficientTruncation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HDPair {
    Rat r;
    Rat s;

    HDPair() = default;
    HDPair(Rat r_, Rat s_) : r(r_), s(s_) {}

    bool in_s2() const;
    bool degenerate() const;             // r or s-r integral
    long long M() const;                 // lcm of denominators of 1/2, r, s
    // eta exponents of eta(tau/2), eta(2tau), eta(tau); the last enters with a minus sign
    std::array<Rat, 3> exponents() const;
    std::string str() const;             // "(r,s)"

    auto operator<=>(const HDPair& o) const {
        if (r != o.r) return r < o.r ? std::strong_ordering::less : std::strong_ordering::greater;
        if (s != o.s) return s < o.s ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    bool operator==(const HDPair& o) const = default;
};

HDPair parse_pair(const std::string& r, const std::string& s);
void require_s2(const HDPair& p);

// Truncated series sum_k coeffs[k] q^(lead_exp + k*step); exponents live on (1/48)Z.
struct FracQSeries {
    Rat lead_exp{0};
    Rat step{1};
    std::vector<mpz_class> coeffs;
    size_t reliable = 0;  // number of leading terms known exactly

    size_t size() const { return coeffs.size(); }
    Rat exponent(size_t k) const { return lead_exp + step * Rat(static_cast<long long>(k)); }
    // coefficient at q^e, zero if e is off-grid or beyond the stored terms
    mpz_class at(const Rat& e) const;

    FracQSeries operator*(const FracQSeries& o) const;
    FracQSeries inverse() const;         // needs leading coefficient +-1
    FracQSeries pow(long long e) const;  // negative exponents use inverse()
    FracQSeries refine(const Rat& new_step) const;  // same series on a finer grid
    FracQSeries substitute(const Rat& c) const;     // tau -> c*tau
};

// Coefficients a_n of q^n for 0 <= n <= n_max.
struct IntQSeries {
    std::vector<mpz_class> c;
    long long n_max = 0;

    IntQSeries() = default;
    explicit IntQSeries(long long n) : c(static_cast<size_t>(n + 1)), n_max(n) {}
    const mpz_class& operator[](long long n) const { return c.at(static_cast<size_t>(n)); }
    mpz_class& operator[](long long n) { return c.at(static_cast<size_t>(n)); }
    long long first_nonzero() const;  // -1 when zero
    bool is_zero() const { return first_nonzero() < 0; }
    std::string str(long long upto = -1) const;
};

FracQSeries eta_series(size_t truncation);
// Product form via eta powers and series inversion; the independent route.
FracQSeries k2_raw_series_product(const HDPair& p, size_t truncation);
// truncation counts terms on the step-1/2 grid
FracQSeries k2_raw_series(const HDPair& p, size_t truncation);
// K2(r,s)(N tau) with N = N(r)
IntQSeries k2_series(const HDPair& p, long long n_max);

long long n_of(const Rat& r);
long long level(const HDPair& p);

struct S2Entry {
    HDPair pair;
    bool degenerate;
    std::array<long long, 3> exponents;  // e1, e2, e3
};
std::vector<S2Entry> enumerate_s2_entries();
std::vector<HDPair> enumerate_s2();

int nebentypus(const HDPair& p, long long d);

nlohmann::json series_json(const HDPair& p, const IntQSeries& s);

}  // namespace hgm
