#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hgm {

using Rat = boost::rational<long long>;

// Parses "a/b" or "a". Decimals are rejected.
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& x);

long long floor_div(long long a, long long b);
long long mod_pos(long long a, long long m);
Rat frac_part(const Rat& x);  // x - floor(x), in [0,1)
bool is_integer(const Rat& x);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);
bool is_prime(long long n);
long long euler_phi(long long n);
long long squarefree_part(long long n, long long* square_root = nullptr);

// Kronecker symbol (a/n) for n > 0.
int kronecker(long long a, long long n);

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace hgm
