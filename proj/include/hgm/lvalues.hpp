#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgm/hecke.hpp"
#include "hgm/numerics.hpp"

namespace hgm {

struct TailBound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class LMethod { al_split, quadrature, hypergeometric };
std::string to_string(LMethod m);

struct LValueResult {
    BigComplex value;
    LMethod method = LMethod::al_split;
    BigReal err;
    std::string label;  // pair or eigenform label

    nlohmann::json to_json(long digits) const;
};

using Character = std::map<long long, int>;  // residue mod b -> +-1

// eta quotient K2(r,s)(iy), y > 0, by the pentagonal series of each eta factor
BigReal k2_at(const HDPair& pair, const BigReal& y);
// the same point from the truncated q-expansion
BigReal k2_series_at(const HDPair& pair, const BigReal& y, size_t terms);
// 2^{4s-8r}: K2(r,s)(i/y) = y^3 2^{4s-8r} K2(s-r,s)(iy)
BigReal al_factor(const HDPair& pair, long bits);
// balancing point of the two tails, in u = N t
Rat default_split(const HDPair& pair);

// L(K2(r,s)(N tau), 1) = (2 pi / N) int_0^inf K2(r,s)(iu) du; u < u0 goes through the AL image
LValueResult lvalue_k2_al(const HDPair& pair, const PrecisionContext& ctx, std::optional<Rat> split = {});
LValueResult lvalue_k2_quadrature(const HDPair& pair, const PrecisionContext& ctx);
LValueResult lvalue_k2_hypergeometric(const HDPair& pair, const PrecisionContext& ctx);
Certificate cross_check(const HDPair& pair, const PrecisionContext& ctx);

// sum_i phi(i) beta_i F(i/b, s_i)
LValueResult lvalue_eigenform(const EigenformSpec& spec, const std::optional<Character>& phi,
                              const PrecisionContext& ctx);
// the same sum with each F replaced by the AL-split period integral
LValueResult lvalue_eigenform_al(const EigenformSpec& spec, const std::optional<Character>& phi,
                                 const PrecisionContext& ctx);
// i -> (d/i) on the units mod b
Character kronecker_character(long long d, long long b);

// assembled eigenform of the family of a pair, cached
const EigenformSpec& eigenform_of(const HDPair& pair);

std::vector<std::string> relation_names();  // class5, f5, class7, class8, l1_simplified
Certificate verify_relation(const std::string& name, const PrecisionContext& ctx, Form form = Form::corrected);
nlohmann::json relations_report(const PrecisionContext& ctx);

}  // namespace hgm
