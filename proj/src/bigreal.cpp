#include "hgm/bigreal.hpp"

#include <cmath>
#include <cstdlib>

namespace hgm {

PrecisionContext::PrecisionContext(long bits_, double tol_, int cap) : bits(bits_), tolerance(tol_), level_cap(cap) {
    validate();
}

void PrecisionContext::validate() const {
    if (bits < 32) throw std::invalid_argument("precision below 32 bits");
    if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
    // guard digits: tol >= 2^(8 - bits)
    if (std::log2(tolerance) < static_cast<double>(8 - bits))
        throw std::invalid_argument("tolerance " + std::to_string(tolerance) + " is below 2^(8-" +
                                    std::to_string(bits) + ")");
}

long PrecisionContext::digits() const { return static_cast<long>(std::floor(static_cast<double>(bits) * 0.30103)); }

PrecisionContext PrecisionContext::with_bits(long bits) {
    PrecisionContext c;
    c.bits = bits;
    double floor_tol = std::ldexp(1.0, static_cast<int>(8 - bits));
    if (c.tolerance < floor_tol) c.tolerance = floor_tol;
    c.validate();
    return c;
}

BigReal::BigReal(long bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, long bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const Rat& value, long bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, static_cast<long>(value.numerator()), MPFR_RNDN);
    mpfr_div_si(v_, v_, static_cast<long>(value.denominator()), MPFR_RNDN);
}

BigReal::BigReal(const std::string& decimal, long bits) {
    mpfr_init2(v_, bits);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
        throw ParseError("bad decimal '" + decimal + "'");
}

BigReal::BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::pi(long bits) {
    BigReal x(bits);
    mpfr_const_pi(x.v_, MPFR_RNDN);
    return x;
}

BigReal BigReal::two_pow(const Rat& e, long bits) {
    BigReal x(bits);
    if (e.denominator() == 1) {
        mpfr_set_ui_2exp(x.v_, 1, static_cast<mpfr_exp_t>(e.numerator()), MPFR_RNDN);
        return x;
    }
    BigReal ee(e, bits + 16);
    mpfr_ui_pow(x.v_, 2, ee.v_, MPFR_RNDN);
    return x;
}

namespace {

long wider(const BigReal& a, const BigReal& b) { return std::max(a.bits(), b.bits()); }

}  // namespace

BigReal BigReal::operator-() const {
    BigReal x(*this);
    mpfr_neg(x.v_, x.v_, MPFR_RNDN);
    return x;
}

BigReal& BigReal::operator+=(const BigReal& o) {
    if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
    if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
    if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

long BigReal::exponent10() const {
    if (is_zero()) return -1000000;
    BigReal a(53);
    mpfr_abs(a.v_, v_, MPFR_RNDN);
    mpfr_log10(a.v_, a.v_, MPFR_RNDN);
    return static_cast<long>(std::floor(a.to_double()));
}

std::string BigReal::str(long digits) const {
    if (!finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", static_cast<int>(std::max(1L, digits - 1)), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

std::string BigReal::str() const { return str(static_cast<long>(static_cast<double>(bits()) * 0.30103)); }

#define HGM_UNARY(name, fn)                \
    BigReal name(const BigReal& x) {       \
        BigReal y(x.bits());               \
        fn(y.raw(), x.raw(), MPFR_RNDN);   \
        return y;                          \
    }

HGM_UNARY(abs, mpfr_abs)
HGM_UNARY(exp, mpfr_exp)
HGM_UNARY(sin, mpfr_sin)
HGM_UNARY(cos, mpfr_cos)
HGM_UNARY(tan, mpfr_tan)
HGM_UNARY(sinh, mpfr_sinh)
HGM_UNARY(cosh, mpfr_cosh)
#undef HGM_UNARY

BigReal sqrt(const BigReal& x) {
    if (x.sign() < 0) throw DomainError("sqrt of a negative number");
    BigReal y(x.bits());
    mpfr_sqrt(y.raw(), x.raw(), MPFR_RNDN);
    return y;
}

BigReal log(const BigReal& x) {
    if (x.sign() <= 0) throw DomainError("log of a non-positive number");
    BigReal y(x.bits());
    mpfr_log(y.raw(), x.raw(), MPFR_RNDN);
    return y;
}

BigReal pow(const BigReal& x, const BigReal& y) {
    BigReal z(wider(x, y));
    mpfr_pow(z.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return z;
}

BigReal max(const BigReal& a, const BigReal& b) { return a >= b ? a : b; }

BigReal atan2(const BigReal& y, const BigReal& x) {
    BigReal z(wider(x, y));
    mpfr_atan2(z.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return z;
}

// ---------------------------------------------------------------- BigComplex

BigComplex BigComplex::i(long bits) { return {BigReal(bits), BigReal(1, bits)}; }

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    BigReal r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
    BigReal d = o.re * o.re + o.im * o.im;
    if (d.is_zero()) throw DomainError("complex division by zero");
    BigReal r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& o) {
    re *= o;
    im *= o;
    return *this;
}

BigReal BigComplex::abs() const {
    BigReal y(std::max(re.bits(), im.bits()));
    mpfr_hypot(y.raw(), re.raw(), im.raw(), MPFR_RNDN);
    return y;
}

std::string BigComplex::str(long digits) const {
    std::string s = re.str(digits);
    std::string t = im.str(digits);
    if (!t.empty() && t[0] == '-')
        return s + " - " + t.substr(1) + "i";
    return s + " + " + t + "i";
}

BigComplex sqrt(const BigComplex& z) {
    BigReal r = z.abs();
    if (r.is_zero()) return BigComplex(z.bits());
    BigReal two(2, z.bits());
    BigReal a = sqrt(abs((r + z.re) / two));
    BigReal b = sqrt(abs((r - z.re) / two));
    if (z.im.sign() < 0) b = -b;
    return {a, b};
}

BigComplex expi(const BigReal& theta) { return {cos(theta), sin(theta)}; }

}  // namespace hgm
