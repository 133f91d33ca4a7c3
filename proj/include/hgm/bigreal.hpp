#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "hgm/rational.hpp"

namespace hgm {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Working precision and acceptance threshold, passed explicitly to every numeric call.
struct PrecisionContext {
    long bits = 256;
    double tolerance = 1e-40;
    int level_cap = 14;  // tanh-sinh halvings

    PrecisionContext() = default;
    PrecisionContext(long bits_, double tol_, int cap = 14);
    void validate() const;  // tolerance >= 2^(8-bits)
    long digits() const;    // decimal digits carried by bits
    static PrecisionContext with_bits(long bits);  // default tolerance, or the guard floor if larger
};

// RAII mpfr_t. Binary operations round to the larger operand precision.
class BigReal {
public:
    explicit BigReal(long bits = 256);
    BigReal(long value, long bits);
    BigReal(const Rat& value, long bits);
    BigReal(const std::string& decimal, long bits);
    BigReal(const BigReal& o);
    BigReal(BigReal&& o) noexcept;
    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept;
    ~BigReal();

    long bits() const { return static_cast<long>(mpfr_get_prec(v_)); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static BigReal pi(long bits);
    static BigReal two_pow(const Rat& e, long bits);

    BigReal operator-() const;
    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);
    friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
    friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
    friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
    friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool finite() const { return mpfr_number_p(v_) != 0; }
    int cmp(const BigReal& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigReal& o) const { return cmp(o) < 0; }
    bool operator>(const BigReal& o) const { return cmp(o) > 0; }
    bool operator<=(const BigReal& o) const { return cmp(o) <= 0; }
    bool operator>=(const BigReal& o) const { return cmp(o) >= 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long exponent10() const;  // floor(log10 |x|), very negative for zero

    // scientific notation with `digits` significant digits
    std::string str(long digits) const;
    std::string str() const;

private:
    mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal tan(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal max(const BigReal& a, const BigReal& b);
BigReal atan2(const BigReal& y, const BigReal& x);

struct BigComplex {
    BigReal re;
    BigReal im;

    explicit BigComplex(long bits = 256) : re(bits), im(bits) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(const BigReal& r) : re(r), im(r.bits()) {}

    long bits() const { return re.bits(); }
    static BigComplex i(long bits);

    BigComplex operator-() const { return {-re, -im}; }
    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);
    BigComplex& operator*=(const BigReal& o);
    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
    friend BigComplex operator*(BigComplex a, const BigReal& b) { return a *= b; }

    BigComplex conj() const { return {re, -im}; }
    BigReal abs() const;
    std::string str(long digits) const;
};

BigComplex sqrt(const BigComplex& z);  // principal branch
BigComplex expi(const BigReal& theta);  // e^{i theta}

}  // namespace hgm
