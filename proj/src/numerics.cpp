#include "hgm/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace hgm {

namespace {

BigReal tanh_value(const BigReal& x) {
    BigReal y(x.bits());
    mpfr_tanh(y.raw(), x.raw(), MPFR_RNDN);
    return y;
}

bool nonpositive_integer(const Rat& x) { return x.denominator() == 1 && x.numerator() <= 0; }

long guard(const PrecisionContext& ctx) { return ctx.bits + 32; }

// 2^{-e} at the given precision
BigReal ulp(long e, long bits) { return BigReal::two_pow(Rat(-e), bits); }

// sum over t = k h of g(t), both directions, until the contributions die out
void sum_nodes(const std::function<BigReal(const BigReal&)>& g, const BigReal& h, long k0, long dk,
               const BigReal& scale, long bits, BigReal& acc) {
    BigReal tiny = ulp(bits + 8, bits);
    for (int side : {1, -1}) {
        int quiet = 0;
        for (long k = k0;; k += dk) {
            BigReal t = h * BigReal(side * k, bits);
            if (abs(t).to_double() > 24) break;
            BigReal v = g(t);
            acc += v;
            BigReal ref = max(abs(acc), scale);
            if (abs(v) <= ref * tiny) {
                if (++quiet >= 2) break;
            } else {
                quiet = 0;
            }
        }
    }
}

// g(t) already includes the Jacobian
Quadrature de_levels(const std::function<BigReal(const BigReal&)>& g, const PrecisionContext& ctx) {
    long bits = guard(ctx);
    BigReal h(Rat(1, 2), bits);
    BigReal sum = g(BigReal(bits));
    BigReal zero_scale = abs(sum);
    sum_nodes(g, h, 1, 1, zero_scale, bits, sum);
    BigReal prev = sum * h;
    BigReal diff(bits);
    BigReal stop = ulp(ctx.bits - 24, bits);
    for (int level = 1; level <= ctx.level_cap; ++level) {
        h = h / BigReal(2, bits);
        BigReal odd(bits);
        sum_nodes(g, h, 1, 2, abs(sum), bits, odd);
        sum += odd;
        BigReal cur = sum * h;
        diff = abs(cur - prev);
        prev = cur;
        if (level >= 3 && diff <= abs(cur) * stop) {
            return {cur, diff + abs(cur) * ulp(ctx.bits - 8, bits), level};
        }
    }
    return {prev, diff + abs(prev) * ulp(ctx.bits - 8, bits), ctx.level_cap};
}

const std::vector<mpq_class>& bernoulli_numbers() {
    static const std::vector<mpq_class> B = [] {
        const int n_max = 200;
        std::vector<mpq_class> b(n_max + 1);
        b[0] = 1;
        for (int m = 1; m <= n_max; ++m) {
            mpq_class s = 0;
            mpz_class binom = 1;  // C(m+1, k)
            for (int k = 0; k < m; ++k) {
                s += binom * b[k];
                binom = binom * (m + 1 - k) / (k + 1);
            }
            b[m] = -s / (m + 1);
        }
        return b;
    }();
    return B;
}

BigReal from_mpq(const mpq_class& q, long bits) {
    BigReal x(bits);
    mpfr_set_q(x.raw(), q.get_mpq_t(), MPFR_RNDN);
    return x;
}

mpq_class to_mpq(const Rat& x) {
    mpq_class q(static_cast<long>(x.numerator()), static_cast<long>(x.denominator()));
    q.canonicalize();
    return q;
}

// sum_{k >= K} k^{-sigma} by Euler-Maclaurin
BigReal hurwitz_tail(const BigReal& sigma, long K, long bits) {
    const auto& B = bernoulli_numbers();
    BigReal Kb(K, bits);
    BigReal one(1, bits);
    BigReal lead = pow(Kb, one - sigma) / (sigma - one);
    BigReal kpow = pow(Kb, -sigma);
    BigReal out = lead + kpow / BigReal(2, bits);
    BigReal tiny = abs(out) * ulp(bits, bits);
    // term_m = B_{2m}/(2m)! * sigma(sigma+1)...(sigma+2m-2) * K^{-sigma-2m+1}
    BigReal poch = sigma;  // rising product up to sigma+2m-2
    BigReal kp = kpow / Kb;  // K^{-sigma-1}
    BigReal fact(2, bits);  // (2m)!
    for (int m = 1; 2 * m < static_cast<int>(B.size()); ++m) {
        if (m > 1) {
            poch *= (sigma + BigReal(2 * m - 3, bits)) * (sigma + BigReal(2 * m - 2, bits));
            kp = kp / (Kb * Kb);
            fact *= BigReal(static_cast<long>((2 * m - 1) * 2 * m), bits);
        }
        BigReal term = from_mpq(B[2 * m], bits) / fact * poch * kp;
        out += term;
        if (abs(term) < tiny) break;
    }
    return out;
}

}  // namespace

BigReal gamma(const BigReal& x) {
    if (mpfr_integer_p(x.raw()) && x.sign() <= 0) throw Pole("gamma pole at " + x.str(20));
    BigReal y(x.bits());
    mpfr_gamma(y.raw(), x.raw(), MPFR_RNDN);
    return y;
}

BigReal gamma(const Rat& x, const PrecisionContext& ctx) {
    if (nonpositive_integer(x)) throw Pole("gamma pole at " + to_string(x));
    return gamma(BigReal(x, guard(ctx)));
}

BigReal beta(const Rat& a, const Rat& b, const PrecisionContext& ctx) {
    return gamma(a, ctx) * gamma(b, ctx) / gamma(a + b, ctx);
}

BigReal agm_2f1(const BigReal& x) {
    if (x.sign() < 0 || x >= BigReal(1, x.bits())) throw DomainError("agm_2f1 needs 0 <= x < 1");
    BigReal one(1, x.bits());
    BigReal m(x.bits());
    BigReal root = sqrt(one - x);
    mpfr_agm(m.raw(), one.raw(), root.raw(), MPFR_RNDN);
    return one / m;
}

BigReal series_2f1(const BigReal& x, long terms) {
    long bits = x.bits();
    BigReal sum(1, bits), t(1, bits);
    for (long k = 0; k < terms; ++k) {
        // t_{k+1} = t_k (k+1/2)^2 / (k+1)^2 x
        mpfr_mul_si(t.raw(), t.raw(), (2 * k + 1) * (2 * k + 1), MPFR_RNDN);
        mpfr_div_si(t.raw(), t.raw(), 4 * (k + 1) * (k + 1), MPFR_RNDN);
        t *= x;
        sum += t;
    }
    return sum;
}

Quadrature tanh_sinh(const std::function<BigReal(const BigReal&)>& f, const BigReal& a, const BigReal& b,
                     const PrecisionContext& ctx) {
    long bits = guard(ctx);
    BigReal two(2, bits);
    BigReal mid = (a + b) / two, half = (b - a) / two;
    BigReal halfpi = BigReal::pi(bits) / two;
    auto g = [&](const BigReal& t) {
        BigReal u = halfpi * sinh(t);
        BigReal c = cosh(u);
        BigReal w = half * halfpi * cosh(t) / (c * c);
        BigReal x = mid + half * tanh_value(u);
        if (x <= a || x >= b) return BigReal(bits);
        return w * f(x);
    };
    return de_levels(g, ctx);
}

Quadrature exp_sinh(const std::function<BigReal(const BigReal&)>& f, const BigReal& a, const BigReal& scale,
                    const PrecisionContext& ctx) {
    long bits = guard(ctx);
    BigReal halfpi = BigReal::pi(bits) / BigReal(2, bits);
    auto g = [&](const BigReal& t) {
        BigReal e = exp(halfpi * sinh(t));
        if (!e.finite() || e.is_zero()) return BigReal(bits);
        BigReal v = f(a + scale * e);
        if (v.is_zero()) return v;
        return scale * halfpi * cosh(t) * e * v;
    };
    return de_levels(g, ctx);
}

Quadrature euler_integral(const Rat& r, const Rat& s, const PrecisionContext& ctx) {
    if (!(Rat(0) < r && r < s)) throw DomainError("F needs 0 < r < s, got (" + to_string(r) + "," + to_string(s) + ")");
    long bits = guard(ctx);
    BigReal R(r, bits), SR(s - r, bits), one(1, bits);
    BigReal pi = BigReal::pi(bits);
    // x = 1/(1+e^{-u}), 1-x = 1/(1+e^{u}), u = pi sinh t, dx = x(1-x) pi cosh t dt
    auto g = [&](const BigReal& t) {
        BigReal u = pi * sinh(t);
        BigReal eu = exp(u);
        if (!eu.finite()) return BigReal(bits);
        BigReal x = eu / (one + eu);
        BigReal xc = one / (one + eu);
        if (x.is_zero() || xc.is_zero()) return BigReal(bits);
        BigReal m(bits);
        BigReal root = sqrt(xc);
        mpfr_agm(m.raw(), one.raw(), root.raw(), MPFR_RNDN);
        return pi * cosh(t) * pow(x, R) * pow(xc, SR) / m;
    };
    return de_levels(g, ctx);
}

FValue f_value(const HDPair& pair, const PrecisionContext& ctx) {
    using Key = std::tuple<long long, long long, long long, long long, long, int>;
    static std::mutex mu;
    static std::map<Key, FValue> cache;
    Key key{pair.r.numerator(), pair.r.denominator(), pair.s.numerator(), pair.s.denominator(), ctx.bits,
            ctx.level_cap};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Quadrature q = euler_integral(pair.r, pair.s, ctx);
    long bits = guard(ctx);
    BigReal norm = BigReal::two_pow(Rat(1) - Rat(4) * pair.r, bits) / BigReal(n_of(pair.r), bits);
    FValue out{pair, q.value * norm, q.err * norm, q.levels};
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, out);
    return out;
}

mpq_class bernoulli_poly(int n, const mpq_class& x) {
    const auto& B = bernoulli_numbers();
    if (n < 0 || n >= static_cast<int>(B.size())) throw std::out_of_range("Bernoulli index");
    mpq_class out = 0;
    mpz_class binom = 1;
    std::vector<mpq_class> powers(n + 1);
    powers[0] = 1;
    for (int j = 1; j <= n; ++j) powers[j] = powers[j - 1] * x;
    for (int k = 0; k <= n; ++k) {
        out += binom * B[k] * powers[n - k];
        binom = binom * (n - k) / (k + 1);
    }
    return out;
}

SeriesValue threef2_direct(const Rat& r, const Rat& s, const PrecisionContext& ctx) {
    if (!(r < s)) throw DomainError("3F2(1) diverges unless s > r");
    if (nonpositive_integer(s)) throw Pole("lower parameter s is a non-positive integer");
    long bits = guard(ctx);
    SeriesValue out{BigReal(bits), BigReal(bits)};
    out.slow = s - r < Rat(1, 4);
    long K = out.slow ? 4000 : 2000;
    out.terms = K;
    long rn = r.numerator(), rd = r.denominator(), sn = s.numerator(), sd = s.denominator();

    BigReal t(1, bits), sum(bits);
    bool terminated = false;
    for (long k = 0; k < K; ++k) {
        sum += t;
        // t_{k+1}/t_k = (k+1/2)^2 (k+r) / ((k+1)^2 (k+s))
        long num_r = k * rd + rn;
        if (num_r == 0) {
            terminated = true;
            break;
        }
        mpfr_mul_si(t.raw(), t.raw(), (2 * k + 1) * (2 * k + 1), MPFR_RNDN);
        mpfr_mul_si(t.raw(), t.raw(), num_r * sd, MPFR_RNDN);
        mpfr_div_si(t.raw(), t.raw(), 4 * (k + 1) * (k + 1), MPFR_RNDN);
        mpfr_div_si(t.raw(), t.raw(), (k * sd + sn) * rd, MPFR_RNDN);
    }
    if (terminated) {
        out.value = sum;
        out.err = abs(sum) * ulp(ctx.bits, bits);
        return out;
    }

    // t_k = C k^{-sigma} exp(sum_n d_n k^{-n}),
    // d_n = (-1)^{n+1}/(n(n+1)) [2 B_{n+1}(1/2) + B_{n+1}(r) - 2 B_{n+1}(1) - B_{n+1}(s)]
    const int J = 120;
    mpq_class qr = to_mpq(r), qs = to_mpq(s), half(1, 2), one(1);
    std::vector<mpq_class> d(J + 1), e(J + 1);
    for (int n = 1; n <= J; ++n) {
        mpq_class b = 2 * bernoulli_poly(n + 1, half) + bernoulli_poly(n + 1, qr) -
                      2 * bernoulli_poly(n + 1, one) - bernoulli_poly(n + 1, qs);
        d[n] = (n % 2 ? b : mpq_class(-b)) / (n * (n + 1));
    }
    e[0] = 1;
    for (int j = 1; j <= J; ++j) {
        mpq_class acc = 0;
        for (int n = 1; n <= j; ++n) acc += n * d[n] * e[j - n];
        e[j] = acc / j;
    }
    PrecisionContext wide = ctx;
    BigReal C = gamma(s, wide) / (BigReal::pi(bits) * gamma(r, wide));
    BigReal sigma(Rat(1) + s - r, bits);
    BigReal tail(bits);
    BigReal tiny = ulp(bits + 4, bits);
    BigReal last(bits);
    int quiet = 0;
    for (int j = 0; j <= J; ++j) {
        if (e[j] == 0) continue;
        BigReal term = from_mpq(e[j], bits) * hurwitz_tail(sigma + BigReal(j, bits), K, bits);
        tail += term;
        last = abs(term);
        if (last <= abs(tail) * tiny) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
    }
    tail *= C;
    out.value = sum + tail;
    out.err = last * abs(C) + abs(out.value) * ulp(ctx.bits - 12, bits);
    return out;
}

BigReal f_from_series(const HDPair& pair, const PrecisionContext& ctx) {
    const Rat& r = pair.r;
    const Rat& s = pair.s;
    if (!(Rat(0) < r && r < s)) throw DomainError("F needs 0 < r < s");
    long bits = guard(ctx);
    BigReal v = threef2_direct(r, s, ctx).value;
    BigReal norm = BigReal::two_pow(Rat(1) - Rat(4) * r, bits) * beta(r, s - r, ctx) / BigReal(n_of(r), bits);
    return v * norm;
}

HDPair kummer_image(const HDPair& p) { return HDPair(Rat(1) - p.r, Rat(1, 2) - p.r + p.s); }

KummerConstant kummer_constant(const HDPair& pair, const PrecisionContext& ctx) {
    const Rat& r = pair.r;
    const Rat& s = pair.s;
    for (const Rat& x : {r, s - r, Rat(1) - r, s - Rat(1, 2)})
        if (nonpositive_integer(x)) throw Pole("Kummer constant of " + pair.str() + " hits a gamma pole");
    BigReal gsr = gamma(s - r, ctx), gsh = gamma(s - Rat(1, 2), ctx);
    BigReal alpha = gamma(r, ctx) * gsr * gsr / (gamma(Rat(1) - r, ctx) * gsh * gsh);
    KummerConstant out{pair, alpha, alpha * BigReal::two_pow(Rat(4) - Rat(8) * r, guard(ctx)), {}, {}};
    if (s == Rat(1))
        out.alpha_closed = csc_pi(r);
    else if (s == Rat(1) - r)
        out.alpha_closed = two_pow(Rat(-4) * r) * csc_pi(r);
    else if (s == r + Rat(1, 2))
        out.alpha_closed = sin_pi(r);
    if (out.alpha_closed) out.full_closed = two_pow(Rat(4) - Rat(8) * r) * *out.alpha_closed;
    return out;
}

// ---------------------------------------------------------------- certificates

nlohmann::json Certificate::to_json() const {
    long digits = static_cast<long>(std::floor(static_cast<double>(precision_bits) * 0.30103));
    auto cx = [&](const BigComplex& z) {
        return nlohmann::json{{"re", z.re.str(digits)}, {"im", z.im.str(digits)}};
    };
    nlohmann::json j{{"identity", identity},
                     {"lhs", cx(lhs)},
                     {"rhs", cx(rhs)},
                     {"residual", residual.str(6)},
                     {"digits", digits},
                     {"precision_bits", precision_bits},
                     {"tolerance", tolerance},
                     {"pass", pass}};
    if (!note.empty()) j["note"] = note;
    return j;
}

void require_pass(const Certificate& c) {
    if (!c.pass) throw IdentityFailed(c.identity + ": residual " + c.residual.str(6));
}

BigComplex evaluate(const FCombination& terms, const PrecisionContext& ctx) {
    BigComplex acc(guard(ctx));
    for (const auto& t : terms) acc += eval_const(t.coeff, ctx) * f_value(t.pair, ctx).value;
    return acc;
}

Certificate check_identity(const std::string& name, const FCombination& lhs, const FCombination& rhs,
                           const PrecisionContext& ctx) {
    ctx.validate();
    Certificate c{name, evaluate(lhs, ctx), evaluate(rhs, ctx), BigReal(guard(ctx)), ctx.bits, ctx.tolerance, false, ""};
    c.residual = (c.lhs - c.rhs).abs();
    c.pass = c.residual.to_double() < ctx.tolerance;
    return c;
}

std::string to_string(Form f) { return f == Form::corrected ? "corrected" : "printed"; }

Certificate verify_kummer(const HDPair& pair, const PrecisionContext& ctx) {
    HDPair img = kummer_image(pair);
    if (!(Rat(0) < img.r && img.r < img.s))
        throw DomainError("Kummer image " + img.str() + " of " + pair.str() + " is divergent");
    KummerConstant k = kummer_constant(pair, ctx);
    ctx.validate();
    long bits = guard(ctx);
    Certificate c{"kummer" + pair.str(), BigComplex(f_value(pair, ctx).value),
                  BigComplex(k.full * f_value(img, ctx).value), BigReal(bits), ctx.bits, ctx.tolerance, false, ""};
    c.residual = (c.lhs - c.rhs).abs();
    c.pass = c.residual.to_double() < ctx.tolerance;
    if (k.full_closed) c.note = "constant " + k.full_closed->str();
    return c;
}

}  // namespace hgm
