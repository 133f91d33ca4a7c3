#include "hgm/cexpr.hpp"

#include <sstream>

namespace hgm {

struct ConstExpr::Node {
    Op op = Op::rat;
    Rat q{0};
    long long n = 0;
    long long k = 0;
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
};

namespace {

using Op = ConstExpr::Op;
using NodePtr = std::shared_ptr<const ConstExpr::Node>;

bool same(const NodePtr& x, const NodePtr& y) {
    if (x == y) return true;
    if (!x || !y) return false;
    if (x->op != y->op || x->q != y->q || x->n != y->n || x->k != y->k) return false;
    return same(x->a, y->a) && same(x->b, y->b);
}

const char* trig_name(Op op) {
    switch (op) {
        case Op::sin_pi: return "sin";
        case Op::cos_pi: return "cos";
        case Op::tan_pi: return "tan";
        case Op::csc_pi: return "csc";
        default: return "cot";
    }
}

std::string show(const NodePtr& x) {
    if (!x) throw MalformedExpr("empty node");
    switch (x->op) {
        case Op::rat: {
            std::string s = to_string(x->q);
            return x->q.denominator() != 1 || x->q < Rat(0) ? "(" + s + ")" : s;
        }
        case Op::imag: return "i";
        case Op::add: return "(" + show(x->a) + " + " + show(x->b) + ")";
        case Op::sub: return "(" + show(x->a) + " - " + show(x->b) + ")";
        case Op::mul: return show(x->a) + "*" + show(x->b);
        case Op::div: return show(x->a) + "/" + show(x->b);
        case Op::neg: return "-" + show(x->a);
        case Op::sqrt: return "sqrt(" + show(x->a) + ")";
        case Op::zeta: return "zeta" + std::to_string(x->n) + (x->k != 1 ? "^" + std::to_string(x->k) : "");
        case Op::pow: return show(x->a) + "^(" + to_string(x->q) + ")";
        default: return std::string(trig_name(x->op)) + "(" + to_string(x->q) + "*pi)";
    }
}

BigComplex real(BigReal x) { return BigComplex(std::move(x)); }

BigReal trig_value(Op op, const Rat& q, long bits) {
    Rat f = frac_part(q);
    bool integral = f == Rat(0);
    bool half = f == Rat(1, 2);
    if ((op == Op::csc_pi || op == Op::cot_pi) && integral)
        throw DomainError(std::string(trig_name(op)) + " pole at " + to_string(q) + "*pi");
    if (op == Op::tan_pi && half) throw DomainError("tan pole at " + to_string(q) + "*pi");
    if (op == Op::sin_pi && integral) return BigReal(bits);
    if ((op == Op::cos_pi || op == Op::cot_pi) && half) return BigReal(bits);
    if (op == Op::tan_pi && integral) return BigReal(bits);
    BigReal x = BigReal::pi(bits + 16) * BigReal(q, bits + 16);
    switch (op) {
        case Op::sin_pi: return sin(x);
        case Op::cos_pi: return cos(x);
        case Op::tan_pi: return tan(x);
        case Op::csc_pi: return BigReal(1, bits + 16) / sin(x);
        default: return cos(x) / sin(x);
    }
}

BigComplex eval_node(const NodePtr& x, long bits) {
    if (!x) throw MalformedExpr("empty node");
    switch (x->op) {
        case Op::rat: return real(BigReal(x->q, bits));
        case Op::imag: return BigComplex::i(bits);
        case Op::add: return eval_node(x->a, bits) + eval_node(x->b, bits);
        case Op::sub: return eval_node(x->a, bits) - eval_node(x->b, bits);
        case Op::mul: return eval_node(x->a, bits) * eval_node(x->b, bits);
        case Op::div: return eval_node(x->a, bits) / eval_node(x->b, bits);
        case Op::neg: return -eval_node(x->a, bits);
        case Op::sqrt: return sqrt(eval_node(x->a, bits));
        case Op::zeta: {
            if (x->n <= 0) throw MalformedExpr("zeta needs a positive order");
            BigReal theta = BigReal::pi(bits + 16) * BigReal(Rat(2 * x->k, x->n), bits + 16);
            return expi(theta);
        }
        case Op::pow: {
            BigComplex base = eval_node(x->a, bits);
            if (!base.im.is_zero() || base.re.sign() <= 0) throw MalformedExpr("pow needs a positive real base");
            return real(pow(base.re, BigReal(x->q, bits)));
        }
        default: return real(trig_value(x->op, x->q, bits));
    }
}

}  // namespace

ConstExpr::ConstExpr() : ConstExpr(Rat(0)) {}

ConstExpr::ConstExpr(const Rat& q) {
    auto n = std::make_shared<Node>();
    n->op = Op::rat;
    n->q = q;
    node_ = n;
}

ConstExpr ConstExpr::make(Op op, Rat q, long long n, long long k, ConstExpr a, ConstExpr b) {
    auto x = std::make_shared<Node>();
    x->op = op;
    x->q = q;
    x->n = n;
    x->k = k;
    x->a = a.node_;
    x->b = b.node_;
    return ConstExpr(NodePtr(x));
}

ConstExpr ConstExpr::i() {
    auto x = std::make_shared<Node>();
    x->op = Op::imag;
    return ConstExpr(NodePtr(x));
}

ConstExpr ConstExpr::zeta(long long n, long long k) {
    if (n <= 0) throw MalformedExpr("zeta needs a positive order");
    auto x = std::make_shared<Node>();
    x->op = Op::zeta;
    x->n = n;
    x->k = k;
    return ConstExpr(NodePtr(x));
}

ConstExpr ConstExpr::trig(Op kind, const Rat& multiple) {
    if (kind != Op::sin_pi && kind != Op::cos_pi && kind != Op::tan_pi && kind != Op::csc_pi && kind != Op::cot_pi)
        throw MalformedExpr("not a trig node");
    auto x = std::make_shared<Node>();
    x->op = kind;
    x->q = multiple;
    return ConstExpr(NodePtr(x));
}

ConstExpr ConstExpr::surd(const Surd& s) {
    if (s.is_zero()) return ConstExpr();
    ConstExpr out(s.k);
    if (s.m != 1) out = out * sqrt(ConstExpr(Rat(s.m)));
    if (s.unit % 2) out = out * i();
    if (s.unit >= 2) out = -out;
    return out;
}

ConstExpr::Op ConstExpr::op() const { return node_->op; }

bool ConstExpr::operator==(const ConstExpr& o) const { return same(node_, o.node_); }

std::string ConstExpr::str() const { return show(node_); }

BigComplex ConstExpr::eval(long bits) const { return eval_node(node_, bits); }

ConstExpr operator+(const ConstExpr& a, const ConstExpr& b) { return ConstExpr::make(Op::add, 0, 0, 0, a, b); }
ConstExpr operator-(const ConstExpr& a, const ConstExpr& b) { return ConstExpr::make(Op::sub, 0, 0, 0, a, b); }
ConstExpr operator*(const ConstExpr& a, const ConstExpr& b) { return ConstExpr::make(Op::mul, 0, 0, 0, a, b); }
ConstExpr operator/(const ConstExpr& a, const ConstExpr& b) { return ConstExpr::make(Op::div, 0, 0, 0, a, b); }
ConstExpr ConstExpr::operator-() const { return make(Op::neg, 0, 0, 0, *this, ConstExpr()); }

ConstExpr sqrt(const ConstExpr& a) { return ConstExpr::make(ConstExpr::Op::sqrt, 0, 0, 0, a, ConstExpr()); }

ConstExpr pow(const ConstExpr& base, const Rat& e) {
    return ConstExpr::make(ConstExpr::Op::pow, e, 0, 0, base, ConstExpr());
}

BigComplex eval_const(const ConstExpr& e, const PrecisionContext& ctx) { return e.eval(ctx.bits + 32); }

}  // namespace hgm
