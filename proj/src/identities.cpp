#include "hgm/numerics.hpp"

namespace hgm {

namespace {

FTerm term(ConstExpr c, const char* r, const char* s) { return {std::move(c), parse_pair(r, s)}; }
FTerm term(ConstExpr c, const HDPair& p) { return {std::move(c), p}; }

ConstExpr I() { return ConstExpr::i(); }
ConstExpr root(long long m) { return sqrt(ConstExpr(m)); }

FCombination scaled(const ConstExpr& c, const FCombination& terms) {
    FCombination out;
    for (const auto& t : terms) out.push_back({c * t.coeff, t.pair});
    return out;
}

std::string tagged(const std::string& name, Form form) {
    return form == Form::corrected ? name : name + " [printed]";
}

}  // namespace

Certificate verify_thomae(const HDPair& pair, const PrecisionContext& ctx, Form form) {
    const Rat& r = pair.r;
    const Rat& s = pair.s;
    HDPair Y(Rat(3, 2) - s, Rat(3, 2) - r), Z(s - r, s);
    FCombination rhs;
    if (form == Form::corrected) {
        if (frac_part(r) == Rat(1, 2)) throw PoleInCoefficient("cos(pi r) vanishes at " + pair.str());
        Rat ny(n_of(Y.r), n_of(r)), nz(n_of(Z.r), n_of(r));
        rhs.push_back(term(ConstExpr(ny) * two_pow(Rat(6) - Rat(4) * s - Rat(4) * r) * cos_pi(s) / cos_pi(r), Y));
        rhs.push_back(term(ConstExpr(nz) * two_pow(Rat(4) * s - Rat(8) * r) * tan_pi(r), Z));
    } else {
        Rat f = frac_part(r);
        if (f == Rat(0) || f == Rat(1, 2)) throw PoleInCoefficient("printed Thomae coefficient pole at " + pair.str());
        rhs.push_back(term(-two_pow(Rat(6) - Rat(4) * s - Rat(4) * r) * cos_pi(s) / cos_pi(r - Rat(1, 2)), Y));
        rhs.push_back(
            term(-two_pow(Rat(4) * s - Rat(8) * r + Rat(1)) * sin_pi(r) / sin_pi(r - Rat(1, 2)), Z));
    }
    return check_identity(tagged("thomae" + pair.str(), form), {term(1, pair)}, rhs, ctx);
}

Certificate verify_cor(const Rat& r, const PrecisionContext& ctx, Form form) {
    Rat e = (form == Form::corrected ? Rat(3) : Rat(5)) - Rat(12) * r;
    FCombination lhs{term(1, HDPair(r, Rat(1) - r))};
    FCombination rhs{term(-4, HDPair(r + Rat(1, 2), Rat(3, 2) - r)),
                     term(two_pow(e) * tan_pi(r), HDPair(Rat(1) - Rat(2) * r, Rat(1) - r))};
    return check_identity(tagged("cor(" + to_string(r) + ")", form), lhs, rhs, ctx);
}

Certificate verify_threeterm(const Rat& r, const PrecisionContext& ctx, Form form) {
    if (!(Rat(0) < r && r < Rat(1, 2))) throw DomainError("threeterm needs 0 < r < 1/2");
    ConstExpr c = form == Form::corrected ? ConstExpr(2) : ConstExpr(Rat(1, 2));
    FCombination lhs{term(c, HDPair(r, Rat(1) - r))};
    FCombination rhs{term(1, HDPair(Rat(2) * r, r + Rat(1, 2))), term(1, HDPair(Rat(2) * r, r + Rat(1)))};
    return check_identity(tagged("threeterm(" + to_string(r) + ")", form), lhs, rhs, ctx);
}

Certificate verify_4term(const PrecisionContext& ctx, Form form) {
    ConstExpr c = ConstExpr(form == Form::corrected ? 4 : 8) * tan_pi(Rat(1, 12));
    FCombination lhs{term(1, "1/12", "11/12")};
    FCombination rhs{term(-4, "7/12", "17/12"), term(c, "5/12", "7/12"), term(c * ConstExpr(4), "11/12", "13/12")};
    return check_identity(tagged("4term", form), lhs, rhs, ctx);
}

std::vector<Certificate> verify_threeterm_split(const Rat& r, const PrecisionContext& ctx, Form form) {
    std::vector<Certificate> out{verify_threeterm(r, ctx, form), verify_cor(r, ctx, form)};
    if (r == Rat(1, 12)) out.push_back(verify_4term(ctx, form));
    return out;
}

std::vector<std::string> class_identity_names() { return {"l1", "l2", "l3", "l4", "l5", "l6"}; }

Certificate verify_class_identity(const std::string& id, const PrecisionContext& ctx, Form form) {
    FCombination lhs, rhs;
    if (id == "l1") {
        lhs = {term(1, "1/8", "5/8"), term(ConstExpr(-8) * I(), "7/8", "11/8")};
        rhs = scaled(ConstExpr(1) - root(-2), {term(2, "3/8", "7/8"), term(ConstExpr(4) * I(), "5/8", "9/8")});
    } else if (id == "l2") {
        lhs = {term(1, "1/8", "1"), term(ConstExpr(8) * I(), "7/8", "1")};
        rhs = scaled(ConstExpr(-2) * (ConstExpr(1) - root(-2)) * (ConstExpr(1) + root(2)),
                     {term(1, "3/8", "1"), term(ConstExpr(-2) * I(), "5/8", "1")});
    } else if (id == "l3") {
        lhs = {term(1, "1/8", "7/8"), term(ConstExpr(8) * I() * root(2), "7/8", "9/8")};
        rhs = scaled(ConstExpr::zeta(8), {term(ConstExpr(2) * root(2), "3/8", "5/8"), term(ConstExpr(4) * I(), "5/8", "11/8")});
    } else if (id == "l4") {
        lhs = {term(1, "1/8", "3/4"), term(ConstExpr(-8) * root(-2), "7/8", "5/4")};
        ConstExpr c = ConstExpr::zeta(8, 3) * (ConstExpr(1) - root(2));
        if (form == Form::corrected)
            rhs = scaled(c, {term(4, "5/8", "3/4"), term(ConstExpr(2) * root(-2), "3/8", "5/4")});
        else
            rhs = scaled(c, {term(4, "5/8", "11/8"), term(ConstExpr(2) * root(-2), "3/8", "5/8")});
    } else if (id == "l5") {
        lhs = {term(1, "1/12", "11/12"), term(ConstExpr(16) * I(), "11/12", "13/12")};
        rhs = scaled(ConstExpr::zeta(3, 2), {term(-4, "5/12", "7/12"), term(ConstExpr(-4) * I(), "7/12", "17/12")});
    } else if (id == "l6") {
        ConstExpr second = form == Form::corrected ? ConstExpr(-16) * I() : ConstExpr(-16);
        lhs = {term(1, "1/12", "2/3"), term(second, "11/12", "4/3")};
        ConstExpr c = ConstExpr(-4) + ConstExpr(6) * I() + (ConstExpr(2) - ConstExpr(4) * I()) * root(3);
        rhs = scaled(c, {term(-1, "5/12", "4/3"), term(I(), "7/12", "2/3")});
    } else {
        throw std::invalid_argument("unknown class identity '" + id + "'");
    }
    return check_identity(tagged(id, form), lhs, rhs, ctx);
}

}  // namespace hgm
