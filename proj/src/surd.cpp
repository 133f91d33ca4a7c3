#include "hgm/surd.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hgm {

Surd::Surd(int unit_, Rat k_, long long m_) : unit(unit_), k(k_), m(m_) {
    if (m == 0 || k == Rat(0)) {
        *this = Surd();
        return;
    }
    if (k < Rat(0)) {
        k = -k;
        unit += 2;
    }
    if (m < 0) {
        m = -m;
        unit += 1;
    }
    long long root = 1;
    m = squarefree_part(m, &root);
    k *= Rat(root);
    unit = static_cast<int>(mod_pos(unit, 4));
}

Surd Surd::integer(long long n) { return {0, Rat(n), 1}; }

Surd Surd::sqrt_of(const Rat& t) {
    if (t == Rat(0)) return {};
    long long num = t.numerator(), den = t.denominator();
    return {num < 0 ? 1 : 0, Rat(1, den), std::abs(num) * den};
}

Surd Surd::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty surd");
    Surd out = one();
    size_t pos = 0;
    if (s[0] == '-' || s[0] == '+') {
        if (s[0] == '-') out = -out;
        pos = 1;
    }
    if (pos == s.size()) throw ParseError("bad surd '" + text + "'");
    while (pos <= s.size()) {
        size_t star = s.find('*', pos);
        std::string tok = s.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        if (tok == "i") {
            out = out * Surd(1, Rat(1), 1);
        } else if (tok.rfind("sqrt(", 0) == 0 && tok.back() == ')') {
            Rat r = parse_rat(tok.substr(5, tok.size() - 6));
            if (r.denominator() != 1) throw ParseError("sqrt of a fraction in '" + text + "'");
            out = out * Surd(0, Rat(1), r.numerator());
        } else {
            out = out * Surd(0, parse_rat(tok), 1);
        }
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    return out;
}

Rat Surd::rational_value() const {
    if (!is_rational()) throw std::domain_error(str() + " is not rational");
    return unit == 2 ? -k : k;
}

Rat Surd::square() const {
    Rat v = k * k * Rat(m);
    return unit % 2 ? -v : v;
}

Surd Surd::operator*(const Surd& o) const {
    if (is_zero() || o.is_zero()) return {};
    long long g = gcd_ll(m, o.m);
    // sqrt(m) sqrt(m') = g sqrt(m m' / g^2)
    return {unit + o.unit, k * o.k * Rat(g), (m / g) * (o.m / g)};
}

Surd Surd::operator/(const Surd& o) const {
    if (o.is_zero()) throw std::domain_error("division by the zero surd");
    // 1/(i^u k sqrt(m)) = i^{-u} sqrt(m) / (k m)
    Surd inv{-o.unit, Rat(1) / (o.k * Rat(o.m)), o.m};
    return *this * inv;
}

Surd Surd::operator-() const {
    if (is_zero()) return {};
    return {unit + 2, k, m};
}

Surd Surd::conj() const {
    if (is_zero()) return {};
    return {-unit, k, m};
}

bool Surd::operator==(const Surd& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return unit == o.unit && k == o.k && m == o.m;
}

std::complex<long double> Surd::value() const {
    if (is_zero()) return 0;
    long double mag = static_cast<long double>(k.numerator()) / static_cast<long double>(k.denominator()) *
                      std::sqrt(static_cast<long double>(m));
    static const std::complex<long double> units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return mag * units[unit];
}

std::string Surd::str() const {
    if (is_zero()) return "0";
    // fold i*sqrt(m) back into sqrt(-m)
    bool neg = unit >= 2;
    bool imag = unit % 2 == 1;
    std::ostringstream os;
    if (neg) os << '-';
    bool need_star = false;
    if (k != Rat(1) || (m == 1 && !imag)) {
        os << to_string(k);
        need_star = true;
    }
    if (m == 1 && imag) {
        os << (need_star ? "*" : "") << "i";
    } else if (m != 1) {
        os << (need_star ? "*" : "") << "sqrt(" << (imag ? "-" : "") << m << ")";
    }
    return os.str();
}

std::string Surd::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    if (unit >= 2) os << "−";
    if (k != Rat(1) || (m == 1 && unit % 2 == 0)) os << to_string(k);
    if (m != 1) os << "√" << m;
    if (unit % 2) os << (m != 1 ? " i" : "i");
    return os.str();
}

// ---------------------------------------------------------------- SurdSum

SurdSum::SurdSum(const Surd& s, const mpz_class& scale) {
    if (s.is_zero() || scale == 0) return;
    mpq_class c(mpz_class(static_cast<long>(s.k.numerator())) * scale, mpz_class(static_cast<long>(s.k.denominator())));
    c.canonicalize();
    switch (s.unit) {
        case 0: add(s.m, c, 0); break;
        case 1: add(s.m, 0, c); break;
        case 2: add(s.m, -c, 0); break;
        default: add(s.m, 0, -c); break;
    }
}

void SurdSum::add(long long m, const mpq_class& re, const mpq_class& im) {
    auto& t = terms_[m];
    t.first += re;
    t.second += im;
    if (t.first == 0 && t.second == 0) terms_.erase(m);
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
    for (const auto& [m, c] : o.terms_) add(m, c.first, c.second);
    return *this;
}

SurdSum SurdSum::operator*(const Surd& s) const {
    SurdSum out;
    if (s.is_zero()) return out;
    for (const auto& [m, c] : terms_) {
        // (re + i im) sqrt(m) * i^u k sqrt(m') = (re + i im) i^u k g sqrt(m m'/g^2)
        long long g = gcd_ll(m, s.m);
        mpq_class f(mpz_class(static_cast<long>(s.k.numerator())) * static_cast<long>(g), mpz_class(static_cast<long>(s.k.denominator())));
        f.canonicalize();
        mpq_class re = c.first * f, im = c.second * f;
        for (int u = 0; u < s.unit; ++u) {
            mpq_class t = re;
            re = -im;
            im = t;
        }
        out.add((m / g) * (s.m / g), re, im);
    }
    return out;
}

SurdSum SurdSum::operator*(const mpz_class& n) const {
    SurdSum out;
    if (n == 0) return out;
    for (const auto& [m, c] : terms_) out.add(m, c.first * n, c.second * n);
    return out;
}

std::complex<long double> SurdSum::value() const {
    std::complex<long double> v = 0;
    for (const auto& [m, c] : terms_)
        v += std::complex<long double>(c.first.get_d(), c.second.get_d()) * std::sqrt(static_cast<long double>(m));
    return v;
}

std::string SurdSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.first.get_str() << (c.second >= 0 ? "+" : "") << c.second.get_str() << "i)";
        if (m != 1) os << "*sqrt(" << m << ")";
    }
    return os.str();
}

}  // namespace hgm
