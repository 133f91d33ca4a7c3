#pragma once

#include <functional>
#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgm/bigreal.hpp"
#include "hgm/cexpr.hpp"
#include "hgm/qseries.hpp"

namespace hgm {

struct Pole : std::domain_error {
    using std::domain_error::domain_error;
};
struct PoleInCoefficient : std::domain_error {
    using std::domain_error::domain_error;
};
struct IdentityFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BigReal gamma(const BigReal& x);
BigReal gamma(const Rat& x, const PrecisionContext& ctx);
BigReal beta(const Rat& a, const Rat& b, const PrecisionContext& ctx);

// 2F1(1/2,1/2;1;x) = 1/AGM(1, sqrt(1-x))
BigReal agm_2f1(const BigReal& x);
// direct series, for testing the AGM route
BigReal series_2f1(const BigReal& x, long terms);

// tanh-sinh on [a,b] for integrands smooth inside; err is the last level difference
struct Quadrature {
    BigReal value;
    BigReal err;
    int levels = 0;
};
Quadrature tanh_sinh(const std::function<BigReal(const BigReal&)>& f, const BigReal& a, const BigReal& b,
                     const PrecisionContext& ctx);

// exp-sinh on [a, inf) for integrands with exponential decay on the given length scale
Quadrature exp_sinh(const std::function<BigReal(const BigReal&)>& f, const BigReal& a, const BigReal& scale,
                    const PrecisionContext& ctx);

struct FValue {
    HDPair pair;
    BigReal value;
    BigReal err;
    int levels = 0;
};

// F(r,s) = 2^{1-4r} B(r,s-r) 3F2(1/2,1/2,r;1,s;1) / N(r), by quadrature of the Euler integral
FValue f_value(const HDPair& pair, const PrecisionContext& ctx);
// B(r,s-r) 3F2(...) by the same quadrature, without the normalisation
Quadrature euler_integral(const Rat& r, const Rat& s, const PrecisionContext& ctx);

struct SeriesValue {
    BigReal value;
    BigReal err;
    long terms = 0;
    bool slow = false;  // s - r < 1/4, longer direct sum
};
// 3F2(1/2,1/2,r;1,s;1) by direct summation plus an asymptotic tail
SeriesValue threef2_direct(const Rat& r, const Rat& s, const PrecisionContext& ctx);
// F(r,s) assembled from threef2_direct
BigReal f_from_series(const HDPair& pair, const PrecisionContext& ctx);

// Bernoulli polynomial B_n(x), exact
mpq_class bernoulli_poly(int n, const mpq_class& x);

struct KummerConstant {
    HDPair pair;
    BigReal alpha;  // Gamma(r)Gamma(s-r)^2 / (Gamma(1-r)Gamma(s-1/2)^2)
    BigReal full;   // 2^{4-8r} alpha
    std::optional<ConstExpr> alpha_closed;
    std::optional<ConstExpr> full_closed;
};
KummerConstant kummer_constant(const HDPair& pair, const PrecisionContext& ctx);
HDPair kummer_image(const HDPair& pair);  // (1-r, 1/2-r+s)

struct Certificate {
    std::string identity;
    BigComplex lhs;
    BigComplex rhs;
    BigReal residual;
    long precision_bits = 0;
    double tolerance = 0;
    bool pass = false;
    std::string note;

    nlohmann::json to_json() const;
};
void require_pass(const Certificate& c);  // throws IdentityFailed

// A linear combination sum c_i F(pair_i)
struct FTerm {
    ConstExpr coeff;
    HDPair pair;
};
using FCombination = std::vector<FTerm>;
BigComplex evaluate(const FCombination& terms, const PrecisionContext& ctx);
Certificate check_identity(const std::string& name, const FCombination& lhs, const FCombination& rhs,
                           const PrecisionContext& ctx);

enum class Form { corrected, printed };
std::string to_string(Form f);

Certificate verify_kummer(const HDPair& pair, const PrecisionContext& ctx);
Certificate verify_thomae(const HDPair& pair, const PrecisionContext& ctx, Form form = Form::corrected);
Certificate verify_cor(const Rat& r, const PrecisionContext& ctx, Form form = Form::corrected);
Certificate verify_threeterm(const Rat& r, const PrecisionContext& ctx, Form form = Form::corrected);
Certificate verify_4term(const PrecisionContext& ctx, Form form = Form::corrected);
// threeterm and cor at r, plus the 4-term identity when r = 1/12
std::vector<Certificate> verify_threeterm_split(const Rat& r, const PrecisionContext& ctx,
                                                Form form = Form::corrected);
// l1 ... l6
Certificate verify_class_identity(const std::string& id, const PrecisionContext& ctx, Form form = Form::corrected);
std::vector<std::string> class_identity_names();

}  // namespace hgm
