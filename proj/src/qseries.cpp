#include "hgm/qseries.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hgm {

bool HDPair::in_s2() const {
    if (!(Rat(0) < r && r < s && s < Rat(3, 2))) return false;
    return is_integer(s * Rat(24)) && is_integer((r + s) * Rat(8));
}

bool HDPair::degenerate() const { return is_integer(r) || is_integer(s - r); }

long long HDPair::M() const {
    return lcm_ll(2, lcm_ll(r.denominator(), s.denominator()));
}

std::array<Rat, 3> HDPair::exponents() const {
    return {Rat(16) * s - Rat(8) * r - Rat(12), Rat(8) * r + Rat(8) * s - Rat(12),
            Rat(24) * s - Rat(30)};
}

std::string HDPair::str() const { return "(" + to_string(r) + "," + to_string(s) + ")"; }

HDPair parse_pair(const std::string& r, const std::string& s) {
    return HDPair(parse_rat(r), parse_rat(s));
}

void require_s2(const HDPair& p) {
    auto e = p.exponents();
    for (const auto& x : e)
        if (!is_integer(x))
            throw NotCongruence("eta exponents of " + p.str() + " are not integral");
    if (!p.in_s2()) throw NotInS2(p.str() + " is not in S2'");
}

// ---------------------------------------------------------------- FracQSeries

mpz_class FracQSeries::at(const Rat& e) const {
    Rat k = (e - lead_exp) / step;
    if (!is_integer(k) || k < Rat(0)) return 0;
    auto idx = static_cast<size_t>(k.numerator());
    return idx < coeffs.size() ? coeffs[idx] : mpz_class(0);
}

FracQSeries FracQSeries::operator*(const FracQSeries& o) const {
    if (step != o.step) throw std::invalid_argument("series product needs equal steps");
    FracQSeries out;
    out.lead_exp = lead_exp + o.lead_exp;
    out.step = step;
    out.reliable = std::min(reliable, o.reliable);
    out.coeffs.assign(out.reliable, 0);
    for (size_t i = 0; i < out.reliable && i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (size_t j = 0; i + j < out.reliable && j < o.coeffs.size(); ++j)
            out.coeffs[i + j] += coeffs[i] * o.coeffs[j];
    }
    return out;
}

FracQSeries FracQSeries::inverse() const {
    if (coeffs.empty() || (coeffs[0] != 1 && coeffs[0] != -1))
        throw std::invalid_argument("series inverse needs leading coefficient +-1");
    FracQSeries out;
    out.lead_exp = -lead_exp;
    out.step = step;
    out.reliable = reliable;
    out.coeffs.assign(reliable, 0);
    const mpz_class& c0 = coeffs[0];
    out.coeffs[0] = c0;  // 1/(+-1) = +-1
    for (size_t n = 1; n < reliable; ++n) {
        mpz_class acc = 0;
        for (size_t k = 1; k <= n && k < coeffs.size(); ++k) acc += coeffs[k] * out.coeffs[n - k];
        out.coeffs[n] = -acc * c0;
    }
    return out;
}

FracQSeries FracQSeries::pow(long long e) const {
    FracQSeries base = e < 0 ? inverse() : *this;
    if (e < 0) e = -e;
    FracQSeries acc;
    acc.lead_exp = 0;
    acc.step = step;
    acc.reliable = reliable;
    acc.coeffs.assign(reliable, 0);
    acc.coeffs[0] = 1;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

FracQSeries FracQSeries::refine(const Rat& new_step) const {
    Rat ratio = step / new_step;
    if (!is_integer(ratio) || ratio < Rat(1)) throw std::invalid_argument("refine: step must divide");
    auto k = static_cast<size_t>(ratio.numerator());
    FracQSeries out;
    out.lead_exp = lead_exp;
    out.step = new_step;
    out.reliable = reliable * k;
    out.coeffs.assign(out.reliable, 0);
    for (size_t i = 0; i < coeffs.size() && i * k < out.reliable; ++i) out.coeffs[i * k] = coeffs[i];
    return out;
}

FracQSeries FracQSeries::substitute(const Rat& c) const {
    FracQSeries out = *this;
    out.lead_exp = lead_exp * c;
    out.step = step * c;
    return out;
}

// ---------------------------------------------------------------- IntQSeries

long long IntQSeries::first_nonzero() const {
    for (size_t n = 0; n < c.size(); ++n)
        if (c[n] != 0) return static_cast<long long>(n);
    return -1;
}

std::string IntQSeries::str(long long upto) const {
    if (upto < 0 || upto > n_max) upto = n_max;
    std::ostringstream os;
    bool first = true;
    for (long long n = 0; n <= upto; ++n) {
        const mpz_class& a = c[static_cast<size_t>(n)];
        if (a == 0) continue;
        mpz_class mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (mag == 1);
        if (!unit || n == 0) os << mag.get_str();
        if (n > 0) os << "q" << (n > 1 ? "^" + std::to_string(n) : "");
    }
    if (first) os << "0";
    os << " + O(q^" << upto + 1 << ")";
    return os.str();
}

// ---------------------------------------------------------------- eta and K2

FracQSeries eta_series(size_t truncation) {
    FracQSeries out;
    out.lead_exp = Rat(1, 24);
    out.step = 1;
    out.reliable = truncation + 1;
    out.coeffs.assign(truncation + 1, 0);
    // Euler: prod (1-q^n) = sum_k (-1)^k q^{k(3k-1)/2}, k over Z
    for (long long k = 0;; ++k) {
        bool any = false;
        for (long long kk : {k, -k - 1}) {
            long long e = kk * (3 * kk - 1) / 2;
            if (e <= static_cast<long long>(truncation)) {
                out.coeffs[static_cast<size_t>(e)] += (kk % 2 == 0) ? 1 : -1;
                any = true;
            }
        }
        if (!any) break;
    }
    return out;
}

FracQSeries k2_raw_series_product(const HDPair& p, size_t truncation) {
    require_s2(p);
    auto e = p.exponents();
    FracQSeries eta = eta_series(truncation + 2);
    Rat half(1, 2);
    FracQSeries e_half = eta.substitute(half);
    FracQSeries e_one = eta.refine(half);
    FracQSeries e_two = eta.substitute(Rat(2)).refine(half);
    FracQSeries out = e_half.pow(e[0].numerator()) * e_two.pow(e[1].numerator()) *
                      e_one.pow(-e[2].numerator());
    out.reliable = std::min(out.reliable, truncation);
    out.coeffs.resize(out.reliable);
    return out;
}

FracQSeries k2_raw_series(const HDPair& p, size_t truncation) {
    require_s2(p);
    auto e = p.exponents();
    long long e1 = e[0].numerator(), e2 = e[1].numerator(), e3 = e[2].numerator();
    size_t T = truncation;
    // prod_m (1-x^m)^{c_m}, x = q^{1/2}
    std::vector<long> g(T + 1, 0);
    for (size_t m = 1; m <= T; ++m) {
        long long cm = e1 + (m % 2 == 0 ? -e3 : 0) + (m % 4 == 0 ? e2 : 0);
        if (cm == 0) continue;
        for (size_t n = m; n <= T; n += m) g[n] -= static_cast<long>(m) * static_cast<long>(cm);
    }
    FracQSeries out;
    out.lead_exp = p.r / Rat(2);
    out.step = Rat(1, 2);
    out.reliable = T;
    out.coeffs.assign(T, 0);
    if (T == 0) return out;
    out.coeffs[0] = 1;
    mpz_class acc;
    for (size_t n = 1; n < T; ++n) {
        acc = 0;
        for (size_t k = 1; k <= n; ++k)
            if (g[k] != 0) acc += out.coeffs[n - k] * g[k];
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), n))
            throw std::logic_error("non-integral coefficient in K2 expansion of " + p.str());
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), n);
        out.coeffs[n] = acc;
    }
    return out;
}

IntQSeries k2_series(const HDPair& p, long long n_max) {
    require_s2(p);
    long long a = p.r.numerator(), b = p.r.denominator();
    IntQSeries out(n_max);
    if (n_max < a) return out;
    long long terms = (n_max - a) / b + 1;
    FracQSeries raw = k2_raw_series(p, static_cast<size_t>(terms));
    for (long long m = 0; m < terms; ++m) out[a + m * b] = raw.coeffs[static_cast<size_t>(m)];
    return out;
}

long long n_of(const Rat& r) {
    // 48 / gcd(24 r, 24) with the gcd taken over Q
    long long p = r.numerator() < 0 ? -r.numerator() : r.numerator();
    long long q = r.denominator();
    return 48 * q / gcd_ll(24 * p, 24 * q);
}

long long level(const HDPair& p) {
    require_s2(p);
    return n_of(p.r) * n_of(p.s - p.r);
}

std::vector<S2Entry> enumerate_s2_entries() {
    std::vector<S2Entry> out;
    for (long long k = 1; k < 36; ++k) {
        Rat s(k, 24);
        for (long long j = 1; j < 24; ++j) {
            HDPair p(Rat(j, 8) - s, s);
            if (!p.in_s2()) continue;
            auto e = p.exponents();
            out.push_back({p, p.degenerate(), {e[0].numerator(), e[1].numerator(), e[2].numerator()}});
        }
    }
    std::sort(out.begin(), out.end(), [](const S2Entry& x, const S2Entry& y) { return x.pair < y.pair; });
    return out;
}

std::vector<HDPair> enumerate_s2() {
    std::vector<HDPair> out;
    for (const auto& e : enumerate_s2_entries()) out.push_back(e.pair);
    return out;
}

int nebentypus(const HDPair& p, long long d) {
    long long lev = level(p);
    if (gcd_ll(d < 0 ? -d : d, lev) != 1)
        throw BadModulus("nebentypus: gcd(" + std::to_string(d) + ", " + std::to_string(lev) + ") != 1");
    auto e = p.exponents();
    long long b = p.r.denominator();
    // K2(N tau) = eta(b tau)^e1 eta(4b tau)^e2 eta(2b tau)^-e3 ; chi(d) = (-prod delta^r_delta / d)
    std::map<long long, long long> parity;
    auto add = [&](long long delta, long long mult) {
        for (long long q = 2; q <= delta; ++q)
            while (delta % q == 0) {
                parity[q] += mult;
                delta /= q;
            }
    };
    add(b, e[0].numerator());
    add(4 * b, e[1].numerator());
    add(2 * b, -e[2].numerator());
    long long D = -1;
    for (auto [q, v] : parity)
        if (mod_pos(v, 2)) D *= q;
    int sign = 1;
    if (d < 0) {
        d = -d;
        sign = -1;  // (D/-1) = -1 since D < 0
    }
    return sign * kronecker(D, d);
}

nlohmann::json series_json(const HDPair& p, const IntQSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (long long n = 0; n <= s.n_max; ++n)
        if (s[n] != 0) coeffs.push_back({n, s[n].get_str()});
    return {{"pair", {p.r.numerator(), p.r.denominator(), p.s.numerator(), p.s.denominator()}},
            {"N", n_of(p.r)},
            {"level", level(p)},
            {"coeffs", coeffs}};
}

}  // namespace hgm
