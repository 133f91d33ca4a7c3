#include "hgm/lvalues.hpp"

#include <cmath>
#include <mutex>

namespace hgm {

namespace {

long guard(const PrecisionContext& ctx) { return ctx.bits + 32; }

BigReal ulp(long e, long bits) { return BigReal::two_pow(Rat(-e), bits); }

// eta(iy) = e^{-pi y/12} sum_k (-1)^k e^{-pi y k(3k-1)}
BigReal eta_at(const BigReal& y) {
    long bits = y.bits();
    BigReal pi = BigReal::pi(bits);
    BigReal sum(1, bits);
    BigReal tiny = ulp(bits + 8, bits);
    for (long k = 1;; ++k) {
        BigReal a = exp(-pi * y * BigReal(k * (3 * k - 1), bits));
        BigReal b = exp(-pi * y * BigReal(k * (3 * k + 1), bits));
        BigReal t = a + b;
        if (k % 2) t = -t;
        sum += t;
        if (abs(t) <= tiny) break;
    }
    return exp(-pi * y / BigReal(12, bits)) * sum;
}

BigReal pow_si(const BigReal& x, long e) {
    BigReal y(x.bits());
    mpfr_pow_si(y.raw(), x.raw(), e, MPFR_RNDN);
    return y;
}

BigComplex real(BigReal x) { return BigComplex(std::move(x)); }

// sum_k c_k e^{-2 pi e_k u} weight(e_k), with the size of the last few terms as error
struct TailSum {
    BigReal value;
    BigReal err;
};

size_t terms_needed(const Rat& lead, const BigReal& point, long bits) {
    // 2 pi e_T point >= (bits + 64) ln 2 + slack for coefficient growth
    double p = point.to_double();
    double need = ((static_cast<double>(bits) + 64) * 0.6931 + 40) / (2 * M_PI * p);
    double lead_d = boost::rational_cast<double>(lead);
    double k = std::max(0.0, 2 * (need - lead_d));
    return static_cast<size_t>(std::ceil(k)) + 16;
}

constexpr size_t kErrTerms = 8;

}  // namespace

std::string to_string(LMethod m) {
    switch (m) {
        case LMethod::al_split: return "al_split";
        case LMethod::quadrature: return "quadrature";
        default: return "hypergeometric";
    }
}

nlohmann::json LValueResult::to_json(long digits) const {
    return {{"label", label},
            {"method", to_string(method)},
            {"value", {{"re", value.re.str(digits)}, {"im", value.im.str(digits)}}},
            {"error_bound", err.str(6)}};
}

BigReal k2_at(const HDPair& pair, const BigReal& y) {
    require_s2(pair);
    auto e = pair.exponents();
    long bits = y.bits();
    BigReal two(2, bits);
    return pow_si(eta_at(y / two), static_cast<long>(e[0].numerator())) *
           pow_si(eta_at(y * two), static_cast<long>(e[1].numerator())) *
           pow_si(eta_at(y), -static_cast<long>(e[2].numerator()));
}

BigReal k2_series_at(const HDPair& pair, const BigReal& y, size_t terms) {
    FracQSeries raw = k2_raw_series(pair, terms);
    long bits = y.bits();
    BigReal twopi = BigReal::pi(bits) * BigReal(2, bits);
    BigReal sum(bits);
    for (size_t k = 0; k < raw.size(); ++k) {
        if (raw.coeffs[k] == 0) continue;
        BigReal c(bits);
        mpfr_set_z(c.raw(), raw.coeffs[k].get_mpz_t(), MPFR_RNDN);
        sum += c * exp(-twopi * BigReal(raw.exponent(k), bits) * y);
    }
    return sum;
}

BigReal al_factor(const HDPair& pair, long bits) {
    return BigReal::two_pow(Rat(4) * pair.s - Rat(8) * pair.r, bits);
}

Rat default_split(const HDPair& pair) {
    // e^{-pi r u0} = e^{-pi (s-r) / u0}; snap to a rational in [1/2, 2]
    double u0 = std::sqrt(boost::rational_cast<double>((pair.s - pair.r) / pair.r));
    u0 = std::min(2.0, std::max(0.5, u0));
    return Rat(static_cast<long long>(std::llround(u0 * 64)), 64);
}

LValueResult lvalue_k2_al(const HDPair& pair, const PrecisionContext& ctx, std::optional<Rat> split) {
    require_s2(pair);
    long bits = guard(ctx);
    Rat u0r = split.value_or(default_split(pair));
    if (u0r <= Rat(0)) throw std::invalid_argument("split point must be positive");
    HDPair img(pair.s - pair.r, pair.s);
    BigReal u0(u0r, bits), V(Rat(1) / u0r, bits);
    BigReal twopi = BigReal::pi(bits) * BigReal(2, bits);

    auto sum_side = [&](const HDPair& p, const BigReal& point, bool lower) {
        size_t T = terms_needed(p.r / Rat(2), point, ctx.bits);
        FracQSeries raw = k2_raw_series(p, T + kErrTerms);
        TailSum out{BigReal(bits), BigReal(bits)};
        for (size_t k = 0; k < raw.size(); ++k) {
            if (raw.coeffs[k] == 0) continue;
            BigReal c(bits);
            mpfr_set_z(c.raw(), raw.coeffs[k].get_mpz_t(), MPFR_RNDN);
            BigReal rate = twopi * BigReal(raw.exponent(k), bits);
            BigReal decay = exp(-rate * point);
            // int_P^inf e^{-c u} du = e^{-cP}/c, int_P^inf u e^{-c u} du = e^{-cP}(P/c + 1/c^2)
            BigReal w = lower ? decay * (point / rate + BigReal(1, bits) / (rate * rate)) : decay / rate;
            BigReal t = c * w;
            if (k < T)
                out.value += t;
            else
                out.err += abs(t);
        }
        if (T == 0) throw TailBound("no terms for " + p.str());
        return out;
    };

    TailSum up = sum_side(pair, u0, false);
    TailSum low = sum_side(img, V, true);
    BigReal fac = al_factor(pair, bits);
    BigReal pref = twopi / BigReal(n_of(pair.r), bits);
    BigReal value = pref * (up.value + fac * low.value);
    BigReal err = pref * (BigReal(10, bits) * (up.err + fac * low.err)) + abs(value) * ulp(ctx.bits - 8, bits);
    if (err.to_double() > ctx.tolerance)
        throw TailBound("truncation error " + err.str(4) + " exceeds tolerance for " + pair.str());
    return {real(value), LMethod::al_split, err, pair.str()};
}

LValueResult lvalue_k2_quadrature(const HDPair& pair, const PrecisionContext& ctx) {
    require_s2(pair);
    long bits = guard(ctx);
    Rat u0r = default_split(pair);
    HDPair img(pair.s - pair.r, pair.s);
    BigReal u0(u0r, bits), V(Rat(1) / u0r, bits);
    BigReal pi = BigReal::pi(bits);
    double cutoff = (static_cast<double>(bits) + 64) * 0.6931 * 4;
    BigReal rate_up = pi * BigReal(pair.r, bits), rate_low = pi * BigReal(img.r, bits);

    auto upper = [&](const BigReal& u) {
        if ((rate_up * u).to_double() > cutoff) return BigReal(bits);
        return k2_at(pair, u);
    };
    auto lower = [&](const BigReal& y) {
        if ((rate_low * y).to_double() > cutoff) return BigReal(bits);
        return y * k2_at(img, y);
    };
    BigReal one(1, bits);
    Quadrature up = exp_sinh(upper, u0, one / rate_up, ctx);
    Quadrature low = exp_sinh(lower, V, one / rate_low, ctx);
    BigReal fac = al_factor(pair, bits);
    BigReal pref = pi * BigReal(2, bits) / BigReal(n_of(pair.r), bits);
    BigReal value = pref * (up.value + fac * low.value);
    BigReal err = pref * (up.err + fac * low.err);
    return {real(value), LMethod::quadrature, err, pair.str()};
}

LValueResult lvalue_k2_hypergeometric(const HDPair& pair, const PrecisionContext& ctx) {
    FValue f = f_value(pair, ctx);
    return {real(f.value), LMethod::hypergeometric, f.err, pair.str()};
}

Certificate cross_check(const HDPair& pair, const PrecisionContext& ctx) {
    ctx.validate();
    LValueResult al = lvalue_k2_al(pair, ctx);
    LValueResult hy = lvalue_k2_hypergeometric(pair, ctx);
    Certificate c{"lval" + pair.str(), al.value, hy.value, BigReal(guard(ctx)), ctx.bits, ctx.tolerance, false, ""};
    c.residual = (c.lhs - c.rhs).abs();
    BigReal tol(guard(ctx));
    mpfr_set_d(tol.raw(), ctx.tolerance, MPFR_RNDN);
    BigReal bound = al.err + hy.err + tol;
    c.pass = c.residual <= bound;
    c.note = "al_split vs hypergeometric, bound " + bound.str(4);
    return c;
}

Character kronecker_character(long long d, long long b) {
    Character chi;
    for (long long i = 1; i <= b; ++i)
        if (gcd_ll(i, b) == 1) chi[i % b] = kronecker(d, i);
    return chi;
}

namespace {

template <class PerPair>
LValueResult combine(const EigenformSpec& spec, const std::optional<Character>& phi, const PrecisionContext& ctx,
                     LMethod method, PerPair per_pair) {
    if (spec.family.empty()) throw std::invalid_argument("empty eigenform");
    long bits = guard(ctx);
    long long b = spec.family.front().r.denominator();
    BigComplex acc(bits);
    BigReal err(bits);
    for (const auto& [pair, beta] : spec.betas) {
        if (beta.is_zero()) continue;
        int sign = 1;
        if (phi) {
            auto it = phi->find(mod_pos(pair.r.numerator(), b));
            if (it == phi->end()) throw NotCharacter("character undefined at " + pair.str());
            sign = it->second;
        }
        ConstExpr c = ConstExpr::surd(sign > 0 ? beta : -beta);
        BigComplex cv = eval_const(c, ctx);
        auto [v, e] = per_pair(pair);
        acc += cv * v;
        err += cv.abs() * e;
    }
    std::string label = spec.label.empty() ? spec.family.front().str() : spec.label;
    if (phi) label += " (twisted)";
    return {acc, method, err, label};
}

}  // namespace

LValueResult lvalue_eigenform(const EigenformSpec& spec, const std::optional<Character>& phi,
                              const PrecisionContext& ctx) {
    return combine(spec, phi, ctx, LMethod::hypergeometric, [&](const HDPair& p) {
        FValue f = f_value(p, ctx);
        return std::pair<BigReal, BigReal>(f.value, f.err);
    });
}

LValueResult lvalue_eigenform_al(const EigenformSpec& spec, const std::optional<Character>& phi,
                                 const PrecisionContext& ctx) {
    return combine(spec, phi, ctx, LMethod::al_split, [&](const HDPair& p) {
        LValueResult l = lvalue_k2_al(p, ctx);
        return std::pair<BigReal, BigReal>(l.value.re, l.err);
    });
}

const EigenformSpec& eigenform_of(const HDPair& pair) {
    static std::mutex mu;
    static std::map<HDPair, EigenformSpec> cache;
    HeckeFamily fam = HeckeFamily::of(pair);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(fam.unit_member());
    if (it == cache.end()) it = cache.emplace(fam.unit_member(), build_eigenform(fam)).first;
    return it->second;
}

std::vector<std::string> relation_names() { return {"class5", "f5", "class7", "class8", "l1_simplified"}; }

Certificate verify_relation(const std::string& name, const PrecisionContext& ctx, Form form) {
    ctx.validate();
    auto L = [&](const char* r, const char* s, std::optional<Character> phi = {}) {
        return lvalue_eigenform(eigenform_of(parse_pair(r, s)), phi, ctx).value;
    };
    auto k = [&](const ConstExpr& c) { return eval_const(c, ctx); };
    ConstExpr i = ConstExpr::i();
    BigComplex lhs(guard(ctx)), rhs(guard(ctx));
    if (name == "class5") {
        lhs = L("1/4", "3/4");
        rhs = k(i * sin_pi(Rat(1, 4))) * L("1/4", "1");
    } else if (name == "f5") {
        lhs = L("1/8", "5/8");
        rhs = k(ConstExpr(Rat(-1, 2)) * ConstExpr::zeta(48)) * L("1/8", "1");
    } else if (name == "class7") {
        lhs = L("1/8", "3/4");
        ConstExpr c = sqrt(ConstExpr(2) - sqrt(ConstExpr(2)) - ConstExpr(4) * i * sqrt(ConstExpr(3) - ConstExpr(2) * sqrt(ConstExpr(2))));
        rhs = k(c) * L("1/8", "7/8");
    } else if (name == "class8") {
        std::optional<Character> phi;
        if (form == Form::corrected) phi = kronecker_character(-3, 12);
        lhs = L("1/12", "2/3", phi);
        rhs = k(sqrt(ConstExpr(3)) * ConstExpr::zeta(8, 7)) * L("1/12", "11/12");
    } else if (name == "l1_simplified") {
        lhs = L("1/8", "5/8");
        ConstExpr u = ConstExpr(1) - sqrt(ConstExpr(-2)) - sqrt(ConstExpr(3));
        FCombination f;
        if (form == Form::corrected)
            f = {{ConstExpr(2) * u, parse_pair("3/8", "7/8")}, {ConstExpr(4) * i * u, parse_pair("5/8", "9/8")}};
        else
            f = {{ConstExpr(2) * u / ConstExpr(16), parse_pair("3/8", "7/8")},
                 {ConstExpr(4) * i * u / ConstExpr(16), parse_pair("5/8", "9/8")}};
        rhs = evaluate(f, ctx);
    } else {
        throw std::invalid_argument("unknown relation '" + name + "'");
    }
    std::string id = form == Form::corrected ? name : name + " [printed]";
    Certificate c{id, lhs, rhs, BigReal(guard(ctx)), ctx.bits, ctx.tolerance, false, ""};
    c.residual = (c.lhs - c.rhs).abs();
    c.pass = c.residual.to_double() < ctx.tolerance;
    return c;
}

nlohmann::json relations_report(const PrecisionContext& ctx) {
    nlohmann::json out = nlohmann::json::array();
    bool all = true;
    for (const auto& n : relation_names()) {
        Certificate c = verify_relation(n, ctx);
        all = all && c.pass;
        out.push_back(c.to_json());
    }
    return {{"relations", out}, {"pass", all}};
}

}  // namespace hgm
