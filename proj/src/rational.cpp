#include "hgm/rational.hpp"

#include <cctype>
#include <numeric>

namespace hgm {

namespace {

long long parse_int(const std::string& s, const std::string& whole) {
    if (s.empty()) throw ParseError("bad rational: '" + whole + "'");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParseError("bad rational: '" + whole + "'");
    for (size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw ParseError("bad rational: '" + whole + "' (use a/b, decimals are not accepted)");
    return std::stoll(s);
}

}  // namespace

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_int(text, text));
    long long num = parse_int(text.substr(0, slash), text);
    long long den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator: '" + text + "'");
    return Rat(num, den);
}

std::string to_string(const Rat& x) {
    if (x.denominator() == 1) return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long mod_pos(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

Rat frac_part(const Rat& x) {
    return x - Rat(floor_div(x.numerator(), x.denominator()));
}

bool is_integer(const Rat& x) { return x.denominator() == 1; }

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long long euler_phi(long long n) {
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

long long squarefree_part(long long n, long long* square_root) {
    long long sign = n < 0 ? -1 : 1;
    n *= sign;
    long long root = 1, core = 1;
    for (long long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (int k = 0; k < e / 2; ++k) root *= p;
        if (e % 2) core *= p;
    }
    core *= n;
    if (square_root) *square_root = root;
    return sign * core;
}

int kronecker(long long a, long long n) {
    if (n <= 0) throw std::invalid_argument("kronecker: n must be positive");
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        long long r = mod_pos(a, 8);
        if (r == 3 || r == 5) result = -result;
    }
    // Jacobi symbol for odd n
    a = mod_pos(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

}  // namespace hgm
