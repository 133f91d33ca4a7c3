#pragma once

#include <complex>
#include <gmpxx.h>
#include <map>
#include <string>

#include "hgm/rational.hpp"

namespace hgm {

// i^unit * k * sqrt(m), k >= 0 rational, m squarefree positive; k == 0 is the zero surd
struct Surd {
    int unit = 0;
    Rat k{0};
    long long m = 1;

    Surd() = default;
    Surd(int unit_, Rat k_, long long m_);  // canonicalizes, m may be negative
    static Surd one() { return {0, Rat(1), 1}; }
    static Surd integer(long long n);
    // text like "-4*sqrt(-3)", "2*i", "1/2*i*sqrt(6)", "-8"
    static Surd parse(const std::string& text);
    // principal square root of t: positive, or positive times i
    static Surd sqrt_of(const Rat& t);

    bool is_zero() const { return k == Rat(0); }
    bool is_rational() const { return is_zero() || (m == 1 && unit % 2 == 0); }
    Rat rational_value() const;  // throws unless is_rational()
    Rat square() const;          // always rational
    Surd operator*(const Surd& o) const;
    Surd operator/(const Surd& o) const;
    Surd operator-() const;
    Surd conj() const;
    bool operator==(const Surd& o) const;

    std::complex<long double> value() const;
    std::string str() const;     // parse() round-trips it
    std::string pretty() const;  // e.g. "-4√3 i"
};

// sum over squarefree m of (re_m + i im_m) sqrt(m), rational coefficients; exact equality
class SurdSum {
public:
    SurdSum() = default;
    SurdSum(const Surd& s, const mpz_class& scale = 1);

    SurdSum& operator+=(const SurdSum& o);
    SurdSum operator*(const Surd& s) const;
    SurdSum operator*(const mpz_class& n) const;
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const SurdSum& o) const { return terms_ == o.terms_; }
    std::complex<long double> value() const;
    std::string str() const;

private:
    std::map<long long, std::pair<mpq_class, mpq_class>> terms_;
    void add(long long m, const mpq_class& re, const mpq_class& im);
};

}  // namespace hgm
