#include <doctest.h>

#include <random>
#include <set>

#include "hgm/coxeter.hpp"
#include "hgm/fixtures.hpp"
#include "hgm/hecke.hpp"

using namespace hgm;

namespace {

HDPair P(long long a, long long b, long long c, long long d) { return {Rat(a, b), Rat(c, d)}; }

std::map<long long, Surd> by_residue(const EigenformSpec& s) {
    std::map<long long, Surd> out;
    for (const auto& [p, b] : s.betas) out[mod_pos(p.r.numerator(), p.r.denominator())] = b;
    return out;
}

const std::vector<long long> kOddPrimes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

}  // namespace

TEST_CASE("surd canonical form") {
    CHECK(Surd::parse("sqrt(48)") == Surd(0, Rat(4), 3));
    CHECK(Surd::parse("sqrt(-3)") == Surd(1, Rat(1), 3));
    CHECK(Surd::parse("-4*sqrt(-3)").str() == "-4*sqrt(-3)");
    CHECK(Surd::parse("4*i*sqrt(3)") == Surd::parse("4*sqrt(-3)"));
    CHECK(Surd::parse("i*i") == Surd::integer(-1));
    CHECK(Surd::parse("-8*i").unit == 3);
    CHECK(Surd::parse("1/2*sqrt(12)") == Surd::parse("sqrt(3)"));
    CHECK(Surd::parse("0").is_zero());
    CHECK(Surd::sqrt_of(Rat(-48)) == Surd::parse("4*i*sqrt(3)"));
    CHECK(Surd::sqrt_of(Rat(3, 4)).str() == "1/2*sqrt(3)");
    CHECK(Surd::parse("2*sqrt(3)").square() == Rat(12));
    CHECK(Surd::parse("4*sqrt(-3)").square() == Rat(-48));
    CHECK(Surd::parse("-2").rational_value() == Rat(-2));
    CHECK_THROWS_AS(Surd::parse("2*x"), ParseError);
    CHECK_THROWS_AS(Surd::parse(""), ParseError);
    CHECK_THROWS(Surd::parse("sqrt(2)").rational_value());
    CHECK(Surd::parse("-4*sqrt(-3)").pretty() == "−4√3 i");
}

TEST_CASE("surd arithmetic against floating evaluation") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> unit(0, 3), k(1, 12), m(-30, 30);
    for (int t = 0; t < 2000; ++t) {
        int m1 = m(rng), m2 = m(rng);
        if (m1 == 0 || m2 == 0) continue;
        Surd a(unit(rng), Rat(k(rng), k(rng)), m1), b(unit(rng), Rat(k(rng), k(rng)), m2);
        auto prod = (a * b).value(), quot = (a / b).value();
        CHECK(std::abs(prod - a.value() * b.value()) < 1e-15L * (1 + std::abs(prod)));
        CHECK(std::abs(quot - a.value() / b.value()) < 1e-15L * (1 + std::abs(quot)));
        CHECK(Surd::parse(a.str()) == a);
        CHECK((a * b) / b == a);
        CHECK((a * a.conj()).is_rational());
        CHECK(std::abs(SurdSum(a, 3).value() - 3.0L * a.value()) < 1e-15L * (1 + std::abs(a.value())));
    }
}

TEST_CASE("surd sums compare exactly") {
    SurdSum s(Surd::parse("sqrt(2)"));
    s += SurdSum(Surd::parse("sqrt(3)"));
    SurdSum t(Surd::parse("sqrt(3)"));
    t += SurdSum(Surd::parse("sqrt(2)"));
    CHECK(s == t);
    s += SurdSum(Surd::parse("-sqrt(2)"));
    CHECK(s == SurdSum(Surd::parse("sqrt(3)")));
    CHECK((SurdSum(Surd::parse("sqrt(6)")) * Surd::parse("sqrt(2)")) == SurdSum(Surd::parse("2*sqrt(3)")));
    CHECK((SurdSum(Surd::parse("2")) * Surd::parse("i")) == SurdSum(Surd::parse("2*i")));
    CHECK((SurdSum(Surd::one()) * mpz_class(0)).is_zero());
}

TEST_CASE("hecke_tp basics") {
    HDPair p = P(1, 8, 5, 8);
    CHECK(hecke_tp(IntQSeries(300), 3, p, 100).is_zero());
    CHECK_THROWS_AS(hecke_tp(k2_series(p, 100), 3, p, 100), InsufficientTruncation);
    CHECK_THROWS_AS(hecke_tp(k2_series(p, 400), 2, p, 100), BadPrime);
    CHECK_THROWS_AS(hecke_tp(k2_series(p, 400), 9, p, 100), BadPrime);
    // T_3 K(1/8,5/8) = 12 K(3/8,7/8), T_5 K(1/8,5/8) = -48 K(5/8,9/8)
    auto t3 = hecke_tp(k2_series(p, 3000), 3, p, 1000);
    auto t5 = hecke_tp(k2_series(p, 5000), 5, p, 1000);
    auto k3 = k2_series(P(3, 8, 7, 8), 1000), k5 = k2_series(P(5, 8, 9, 8), 1000);
    for (long long n = 0; n <= 1000; ++n) {
        CHECK(t3[n] == 12 * k3[n]);
        CHECK(t5[n] == -48 * k5[n]);
    }
}

TEST_CASE("the class 6 Hecke table") {
    auto fam = HeckeFamily::of(P(1, 8, 5, 8));
    CHECK(fam.b() == 8);
    CHECK(fam.level() == 64);
    CHECK(fam.residues() == std::vector<long long>{1, 3, 5, 7});
    // rows T_3, T_5, T_7; columns K_1, K_3, K_5, K_7: {C, target}
    std::map<std::pair<long long, long long>, std::pair<long long, long long>> expect{
        {{3, 1}, {12, 3}}, {{3, 3}, {1, 1}},  {{3, 5}, {-4, 7}},  {{3, 7}, {-3, 5}},
        {{5, 1}, {-48, 5}}, {{5, 3}, {16, 7}}, {{5, 5}, {1, 1}},   {{5, 7}, {-3, 3}},
        {{7, 1}, {-64, 7}}, {{7, 3}, {16, 5}}, {{7, 5}, {-4, 3}},  {{7, 7}, {1, 1}}};
    auto table = hecke_table(fam, {3, 5, 7});
    REQUIRE(table.size() == 12);
    for (const auto& h : table) {
        CHECK(h.target_present);
        CHECK(h.matched >= kMinMatches);
        auto e = expect.at({h.p, h.j});
        CHECK_MESSAGE(h.C == e.first, "T_" << h.p << " K_" << h.j);
        CHECK(h.k == e.second);
    }
    auto h = hecke_constant(fam, 7, 3);
    CHECK(h.C == 16);
    CHECK(h.k == 5);
    for (long long j : fam.residues()) CHECK(hecke_constant(fam, 17, j).k == j);  // 17 = 1 mod 8
    CHECK(d_constant(fam, 3, 3) == Rat(12));
    CHECK(d_constant(fam, 5, 5) == Rat(-48));
    CHECK(d_constant(fam, 3, 5) == Rat(-3));
    CHECK(representative_prime(fam, 7) == 7);
    CHECK(representative_prime(fam, 1) == 17);
    CHECK_THROWS_AS(hecke_constant(fam, 2, 1), BadPrime);
}

TEST_CASE("permutation property on every Galois family") {
    const auto cl = classify();
    int families = 0;
    for (const auto& f : cl.families) {
        if (!f.galois) continue;
        HeckeFamily fam(f.members);
        ++families;
        for (long long p : kOddPrimes) {
            if (fam.level() % p == 0) continue;
            for (long long j : fam.residues()) {
                HeckeConstant h;
                CHECK_NOTHROW(h = hecke_constant(fam, p, j));
                CHECK(h.matched >= kMinMatches);
                if (mod_pos(p, fam.b()) == 1) CHECK(h.k == j);
            }
        }
        // characters agree across the family
        for (long long p : kOddPrimes)
            if (fam.level() % p != 0)
                for (const auto& q : fam.members()) CHECK(nebentypus(q, p) == nebentypus(fam.unit_member(), p));
    }
    CHECK(families == 21);
}

TEST_CASE("Hecke operators commute and D is independent of j") {
    for (HDPair base : {P(1, 8, 5, 8), P(1, 12, 11, 12), P(1, 24, 17, 24)}) {
        auto fam = HeckeFamily::of(base);
        const long long n = 40;
        for (long long p : kOddPrimes)
            for (long long l : kOddPrimes) {
                if (p >= l || l >= 30 || fam.level() % p == 0 || fam.level() % l == 0) continue;
                auto A = k2_series(base, n * p * l);
                auto pl = hecke_tp(hecke_tp(A, l, base, n * p), p, base, n);
                auto lp = hecke_tp(hecke_tp(A, p, base, n * l), l, base, n);
                bool same = true;
                for (long long m = 0; m <= n; ++m) same &= pl[m] == lp[m];
                CHECK_MESSAGE(same, base.str() << " p=" << p << " l=" << l);
            }
        for (long long p : {5LL, 7LL})
            for (long long l : {5LL, 7LL, 11LL}) CHECK_NOTHROW(d_constant(fam, p, l));
    }
}

TEST_CASE("eigenforms reproduce the table") {
    for (const auto& row : fixtures::eigenforms()) {
        auto fam = HeckeFamily::of(row.terms.front().pair);
        EigenformSpec spec;
        REQUIRE_NOTHROW(spec = build_eigenform(fam));
        CHECK(spec.label == row.label);
        CHECK_FALSE(spec.reconstructed);
        CHECK(spec.betas.size() == row.terms.size());
        for (const auto& t : row.terms) CHECK_MESSAGE(spec.beta(t.pair) == Surd::parse(t.beta), row.label);
        auto from_table = table_eigenform(row.label);
        CHECK(from_table.betas == spec.betas);
    }
    auto f51 = build_eigenform(HeckeFamily::of(P(1, 4, 1, 1)));
    CHECK(by_residue(f51) == std::map<long long, Surd>{{1, Surd::one()}, {3, Surd::parse("-4*i")}});
    auto f3b = build_eigenform(HeckeFamily::of(P(1, 3, 2, 3)));
    CHECK(by_residue(f3b) == std::map<long long, Surd>{{1, Surd::one()}, {2, Surd::integer(2)}});
    CHECK(table_eigenform("6.a").lmfdb == std::vector<std::string>{"64.3.d.a"});
    CHECK(table_eigenform("6.b").lmfdb == std::vector<std::string>{"256.3.c.g"});
    CHECK_THROWS_AS(table_eigenform("11.a"), std::out_of_range);
}

TEST_CASE("singleton and untabulated families are reconstructed") {
    auto f = build_eigenform(HeckeFamily::of(P(1, 2, 1, 1)));
    CHECK(f.reconstructed);
    CHECK(f.betas.size() == 1);
    CHECK(verify_eigen(f, 5).is_rational());
}

TEST_CASE("eigenvalues") {
    auto f6 = table_eigenform("6.a");
    auto fam6 = HeckeFamily::of(P(1, 8, 5, 8));
    auto l3 = verify_eigen(f6, 3);
    CHECK(l3.square() == Rat(12));
    CHECK(l3 == Surd::parse("-2*sqrt(3)"));
    for (long long p : {3LL, 5LL, 7LL, 11LL, 13LL}) {
        auto l = verify_eigen(f6, p);
        CHECK(Rat(l.square()) == d_constant(fam6, p, p));
    }
    auto l17 = verify_eigen(f6, 17);
    CHECK(l17.is_rational());
    CHECK(l17.rational_value() == Rat(hecke_constant(fam6, 17, 1).C));
    CHECK(verify_eigen(table_eigenform("5.b"), 5) == Surd::integer(-2));

    // the variant displayed with the worked example is the (2/.) twist of row 6.a
    EigenformSpec variant = f6;
    variant.betas[P(3, 8, 7, 8)] = Surd::parse("2*sqrt(3)");
    variant.betas[P(5, 8, 9, 8)] = Surd::parse("4*i*sqrt(3)");
    variant.betas[P(7, 8, 11, 8)] = Surd::parse("-8*i");
    CHECK(verify_eigen(variant, 3) == Surd::parse("2*sqrt(3)"));
    std::map<long long, int> two{{1, 1}, {3, -1}, {5, -1}, {7, 1}};
    CHECK(twist_by_quadratic(f6, two).betas == variant.betas);

    // not an eigenform: flip one beta
    EigenformSpec broken = f6;
    broken.betas[P(3, 8, 7, 8)] = Surd::parse("2*sqrt(3)");
    CHECK_THROWS_AS(verify_eigen(broken, 3), NotEigen);
    CHECK_THROWS_AS(verify_eigen(f6, 2), BadPrime);
}

TEST_CASE("beta multiplicativity with table signs") {
    auto b = by_residue(table_eigenform("6.a"));
    CHECK(b[3] * b[5] == Surd::integer(-3) * b[7]);
    // beta_i beta_j = beta_{ij} * C-ratio: every product lands on +-beta_k up to a rational
    for (const auto& row : fixtures::eigenforms()) {
        auto br = by_residue(table_eigenform(row.label));
        for (auto [i, bi] : br)
            for (auto [j, bj] : br) {
                long long k = mod_pos(i * j, row.b);
                if (!br.count(k)) continue;
                CHECK((bi * bj / br[k]).is_rational());
            }
    }
}

TEST_CASE("eigenform support") {
    for (const auto& row : fixtures::eigenforms()) {
        auto coeffs = eigen_coefficients(table_eigenform(row.label), 300);
        for (long long n = 0; n <= 300; ++n)
            if (!coeffs[static_cast<size_t>(n)].is_zero()) CHECK(gcd_ll(n, row.b) == 1);
    }
}

TEST_CASE("quadratic twists") {
    auto f6 = table_eigenform("6.a");
    CHECK(twist_by_quadratic(f6, trivial_character(8)).betas == f6.betas);
    CHECK(quadratic_characters(8).size() == 4);
    CHECK(quadratic_characters(24).size() == 8);
    CHECK(quadratic_characters(3).size() == 2);
    std::map<long long, int> bad{{1, 1}, {3, -1}, {5, -1}, {7, -1}};
    CHECK_THROWS_AS(twist_by_quadratic(f6, bad), NotCharacter);
    std::set<std::string> distinct;
    for (const auto& chi : quadratic_characters(8)) distinct.insert(twist_by_quadratic(f6, chi).to_json().dump());
    CHECK(distinct.size() == 4);

    // f_{1/4,3/4} twisted mod 4 carries the betas of f_{1/4,1}; the coefficients then differ by a character mod 8
    auto f5a = table_eigenform("5.a"), f5b = table_eigenform("5.b");
    auto tw = twist_by_quadratic(f5a, {{1, 1}, {3, -1}});
    CHECK(by_residue(tw) == by_residue(f5b));
    auto ca = eigen_coefficients(tw, 400), cb = eigen_coefficients(f5b, 400);
    std::map<long long, int> psi;
    bool ok = true;
    for (long long n = 1; n <= 400; ++n) {
        if (ca[n] == cb[n] && ca[n].is_zero()) continue;
        int sign = ca[n] == cb[n] ? 1 : (ca[n] * mpz_class(-1) == cb[n] ? -1 : 0);
        if (sign == 0) ok = false;
        auto [it, fresh] = psi.emplace(n % 8, sign);
        if (!fresh && it->second != sign) ok = false;
    }
    CHECK(ok);
    CHECK(psi == std::map<long long, int>{{1, 1}, {3, 1}, {5, -1}, {7, -1}});
}

TEST_CASE("Kummer twist pairs agree up to sign") {
    auto r = twist_pair_check(P(1, 4, 1, 1), 512);
    CHECK(r.pass);
    CHECK(r.twist == P(1, 4, 3, 4));
    CHECK(r.flipped > 0);
    auto s = k2_series(P(1, 4, 1, 1), 30), t = k2_series(P(1, 4, 3, 4), 30);
    CHECK(s[5] == -t[5]);
    CHECK(s[9] == t[9]);
    auto r2 = twist_pair_check(P(1, 8, 5, 8), 512);
    CHECK(r2.pass);
    CHECK(r2.twist == P(1, 8, 1, 1));
    int checked = 0, self = 0;
    for (const auto& p : enumerate_s2()) {
        if (!twist_in_range(p) || !kummer_twist(p).in_s2()) continue;
        auto rep = twist_pair_check(p, 256);
        CHECK_MESSAGE(rep.pass, p.str());
        if (rep.twist == p) {
            ++self;
            CHECK(rep.flipped == 0);
        }
        ++checked;
    }
    CHECK(checked > 100);
    CHECK(self > 0);
    CHECK(twist_pair_check(P(1, 4, 1, 1)).to_json()["pass"] == true);
}

TEST_CASE("serialization") {
    auto f6 = table_eigenform("6.a");
    auto js = f6.to_json();
    CHECK(js["label"] == "6.a");
    CHECK(js["betas"].size() == 4);
    CHECK(js["betas"][0]["k"] == 1);
    CHECK(js["betas"][2]["unit_power"] == 3);
    CHECK(js["betas"][2]["m"] == 3);
    CHECK(js["lmfdb"][0] == "64.3.d.a");
    CHECK(f6.pretty() ==
          "6.a  f_{1/8,5/8} = K2(1/8,5/8) - 2√3 K2(3/8,7/8) - 4√3 i K2(5/8,9/8) - 8i K2(7/8,11/8)   [64.3.d.a]");
}
