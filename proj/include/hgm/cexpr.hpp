#pragma once

#include <memory>
#include <string>

#include "hgm/bigreal.hpp"
#include "hgm/rational.hpp"
#include "hgm/surd.hpp"

namespace hgm {

// Immutable expression tree for exact constants. Evaluation uses the embedding i = +sqrt(-1)
// and the principal square root.
class ConstExpr {
public:
    enum class Op { rat, imag, add, sub, mul, div, neg, sqrt, zeta, sin_pi, cos_pi, tan_pi, csc_pi, cot_pi, pow };

    ConstExpr();  // zero
    ConstExpr(const Rat& q);
    ConstExpr(long long n) : ConstExpr(Rat(n)) {}
    ConstExpr(int n) : ConstExpr(Rat(n)) {}

    static ConstExpr i();
    static ConstExpr zeta(long long n, long long k = 1);   // e^{2 pi i k / n}
    static ConstExpr trig(Op kind, const Rat& multiple);  // f(pi * multiple)
    static ConstExpr surd(const Surd& s);

    Op op() const;
    bool operator==(const ConstExpr& o) const;  // structural
    std::string str() const;
    BigComplex eval(long bits) const;

    friend ConstExpr operator+(const ConstExpr& a, const ConstExpr& b);
    friend ConstExpr operator-(const ConstExpr& a, const ConstExpr& b);
    friend ConstExpr operator*(const ConstExpr& a, const ConstExpr& b);
    friend ConstExpr operator/(const ConstExpr& a, const ConstExpr& b);
    ConstExpr operator-() const;

    struct Node;

private:
    explicit ConstExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;

    friend ConstExpr sqrt(const ConstExpr& a);
    friend ConstExpr pow(const ConstExpr& base, const Rat& e);
    static ConstExpr make(Op op, Rat q, long long n, long long k, ConstExpr a, ConstExpr b);
};

ConstExpr sqrt(const ConstExpr& a);
ConstExpr pow(const ConstExpr& base, const Rat& e);  // positive real base
inline ConstExpr sin_pi(const Rat& q) { return ConstExpr::trig(ConstExpr::Op::sin_pi, q); }
inline ConstExpr cos_pi(const Rat& q) { return ConstExpr::trig(ConstExpr::Op::cos_pi, q); }
inline ConstExpr tan_pi(const Rat& q) { return ConstExpr::trig(ConstExpr::Op::tan_pi, q); }
inline ConstExpr csc_pi(const Rat& q) { return ConstExpr::trig(ConstExpr::Op::csc_pi, q); }
inline ConstExpr cot_pi(const Rat& q) { return ConstExpr::trig(ConstExpr::Op::cot_pi, q); }
inline ConstExpr two_pow(const Rat& e) { return pow(ConstExpr(2), e); }

struct MalformedExpr : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

BigComplex eval_const(const ConstExpr& e, const PrecisionContext& ctx);

}  // namespace hgm
