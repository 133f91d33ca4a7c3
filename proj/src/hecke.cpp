#include "hgm/hecke.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hgm/coxeter.hpp"
#include "hgm/fixtures.hpp"

namespace hgm {

namespace {

long long inverse_mod(long long a, long long m) {
    a = mod_pos(a, m);
    for (long long x = 1; x < m; ++x)
        if (a * x % m == 1) return x;
    if (m == 1) return 0;
    throw std::domain_error(std::to_string(a) + " is not invertible mod " + std::to_string(m));
}

long long residue_of(const HDPair& p) { return mod_pos(p.r.numerator(), p.r.denominator()); }

nlohmann::json pair_json(const HDPair& p) { return {to_string(p.r), to_string(p.s)}; }

void require_prime_to(long long p, long long lev) {
    if (!is_prime(p)) throw BadPrime(std::to_string(p) + " is not prime");
    if (lev % p == 0) throw BadPrime(std::to_string(p) + " divides the level " + std::to_string(lev));
}

}  // namespace

IntQSeries hecke_tp(const IntQSeries& series, long long p, const HDPair& pair, long long n_max) {
    require_prime_to(p, level(pair));
    if (series.n_max < n_max * p)
        throw InsufficientTruncation("T_" + std::to_string(p) + " to n = " + std::to_string(n_max) + " needs " +
                                     std::to_string(n_max * p) + " terms, have " + std::to_string(series.n_max));
    long long chi = nebentypus(pair, p);
    IntQSeries out(n_max);
    const long p2chi = static_cast<long>(p * p * chi);
    for (long long n = 0; n <= n_max; ++n) {
        out[n] = series[n * p];
        if (n % p == 0) out[n] += p2chi * series[n / p];
    }
    return out;
}

// ---------------------------------------------------------------- families

HeckeFamily::HeckeFamily(std::vector<HDPair> members) : members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("empty family");
    std::sort(members_.begin(), members_.end());
    b_ = members_.front().r.denominator();
    std::set<long long> seen;
    for (const auto& p : members_) {
        require_s2(p);
        if (p.r.denominator() != b_) throw Inconsistent("family members with different denominators");
        if (!seen.insert(residue_of(p)).second) throw Inconsistent("family is not Galois: repeated r mod 1");
    }
    if (!member(1)) throw Inconsistent("family has no member with r = 1/b mod 1");
    level_ = hgm::level(unit_member());
}

HeckeFamily HeckeFamily::of(const HDPair& p) { return HeckeFamily(conjugate_family(p)); }

const HDPair* HeckeFamily::member(long long residue) const {
    residue = mod_pos(residue, b_);
    for (const auto& p : members_)
        if (residue_of(p) == residue) return &p;
    return nullptr;
}

const HDPair& HeckeFamily::unit_member() const { return *member(1); }

std::vector<long long> HeckeFamily::residues() const {
    std::vector<long long> out;
    for (const auto& p : members_) out.push_back(residue_of(p));
    std::sort(out.begin(), out.end());
    return out;
}

long long HeckeFamily::target_residue(long long p, long long j) const {
    return mod_pos(j * inverse_mod(p, b_), b_);
}

const IntQSeries& HeckeFamily::series(long long j, long long n_max) const {
    const HDPair* m = member(j);
    if (!m) throw std::out_of_range("no member at residue " + std::to_string(j));
    auto it = cache_.find(residue_of(*m));
    if (it == cache_.end() || it->second.n_max < n_max)
        it = cache_.insert_or_assign(residue_of(*m), k2_series(*m, n_max)).first;
    return it->second;
}

// ---------------------------------------------------------------- constants

HeckeConstant hecke_constant(const HeckeFamily& fam, long long p, long long j, long long n_max) {
    require_prime_to(p, fam.level());
    const HDPair* src = fam.member(j);
    if (!src) throw std::invalid_argument("no family member at residue " + std::to_string(j));
    HeckeConstant out;
    out.p = p;
    out.j = mod_pos(j, fam.b());
    out.k = fam.target_residue(p, j);
    const HDPair* dst = fam.member(out.k);
    out.target_present = dst != nullptr;

    long long image = std::max(n_max / p, 40 * fam.b());
    for (int attempt = 0; attempt < 6; ++attempt, image *= 2) {
        IntQSeries B = hecke_tp(fam.series(out.j, image * p), p, *src, image);
        if (!dst) {
            for (long long n = 0; n <= image; ++n)
                if (B[n] != 0)
                    throw NotProportional("T_" + std::to_string(p) + " " + src->str() +
                                          " is nonzero but its predicted target lies outside S2'");
            out.C = 0;
            out.matched = image / fam.b();
            return out;
        }
        const IntQSeries& T = fam.series(out.k, image);
        std::optional<mpz_class> C;
        long long matched = 0;
        for (long long n = 0; n <= image; ++n) {
            if (T[n] == 0) {
                if (B[n] != 0)
                    throw NotProportional("T_" + std::to_string(p) + " " + src->str() + " has a_" +
                                          std::to_string(n) + " off the support of " + dst->str());
                continue;
            }
            if (!C) {
                if (B[n] % T[n] != 0)
                    throw NotProportional("T_" + std::to_string(p) + " " + src->str() +
                                          ": non-integral ratio at n = " + std::to_string(n));
                C = B[n] / T[n];
            }
            if (B[n] != *C * T[n])
                throw NotProportional("T_" + std::to_string(p) + " " + src->str() + " is not a multiple of " +
                                      dst->str() + " (first mismatch at n = " + std::to_string(n) + ")");
            ++matched;
        }
        if (matched >= kMinMatches) {
            out.C = C ? C->get_si() : 0;
            out.matched = matched;
            return out;
        }
    }
    throw InsufficientTruncation("fewer than 32 nonzero coefficients for T_" + std::to_string(p) + " " +
                                 src->str());
}

long long representative_prime(const HeckeFamily& fam, long long c) {
    c = mod_pos(c, fam.b());
    for (long long q = 2; q < 100000; ++q)
        if (mod_pos(q, fam.b()) == c && is_prime(q) && fam.level() % q != 0) return q;
    throw std::domain_error("no prime in residue class " + std::to_string(c));
}

Rat d_constant(const HeckeFamily& fam, long long p, long long ell, long long n_max) {
    require_prime_to(p, fam.level());
    require_prime_to(ell, fam.level());
    long long composite = mod_pos(p * ell, fam.b());
    long long q = composite == 1 ? 0 : representative_prime(fam, composite);
    std::optional<Rat> D;
    for (long long j : fam.residues()) {
        auto c1 = hecke_constant(fam, ell, j, n_max);
        if (!c1.target_present || c1.C == 0) continue;
        auto c2 = hecke_constant(fam, p, c1.k, n_max);
        if (!c2.target_present || c2.C == 0) continue;
        long long c3 = 1;
        if (q) {
            auto h = hecke_constant(fam, q, j, n_max);
            if (!h.target_present || h.C == 0) continue;
            c3 = h.C;
        }
        Rat d = Rat(c1.C) * Rat(c2.C) / Rat(c3);
        if (D && *D != d)
            throw Inconsistent("D(" + std::to_string(p) + "," + std::to_string(ell) + ") depends on j: " +
                               to_string(*D) + " vs " + to_string(d));
        D = d;
    }
    if (!D) throw Inconsistent("no residue with nonzero Hecke constants");
    return *D;
}

std::vector<HeckeConstant> hecke_table(const HeckeFamily& fam, const std::vector<long long>& primes,
                                       long long n_max) {
    std::vector<HeckeConstant> out;
    for (long long p : primes)
        for (long long j : fam.residues()) out.push_back(hecke_constant(fam, p, j, n_max));
    return out;
}

// ---------------------------------------------------------------- eigenforms

Surd EigenformSpec::beta(const HDPair& p) const {
    auto it = betas.find(p);
    return it == betas.end() ? Surd() : it->second;
}

nlohmann::json EigenformSpec::to_json() const {
    nlohmann::json fam = nlohmann::json::array(), bs = nlohmann::json::array();
    for (const auto& p : family) fam.push_back(pair_json(p));
    for (const auto& [p, s] : betas) {
        nlohmann::json k = s.k.denominator() == 1 ? nlohmann::json(s.k.numerator()) : nlohmann::json(to_string(s.k));
        bs.push_back({{"pair", pair_json(p)}, {"unit_power", s.unit}, {"k", k}, {"m", s.m}, {"value", s.str()}});
    }
    return {{"label", label}, {"family", fam}, {"betas", bs}, {"lmfdb", lmfdb}, {"reconstructed", reconstructed}};
}

std::string EigenformSpec::pretty() const {
    std::ostringstream os;
    auto kname = [](const HDPair& p) { return "K2(" + to_string(p.r) + "," + to_string(p.s) + ")"; };
    if (!label.empty()) os << label << "  ";
    if (!family.empty()) os << "f_{" << to_string(family.front().r) << "," << to_string(family.front().s) << "} = ";
    bool first = true;
    for (const auto& [p, s] : betas) {
        if (s.is_zero()) continue;
        bool neg = s.unit >= 2;
        Surd mag = neg ? -s : s;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        if (!(mag == Surd::one())) os << mag.pretty() << " ";
        os << kname(p);
    }
    if (!lmfdb.empty()) {
        os << "   [";
        for (size_t i = 0; i < lmfdb.size(); ++i) os << (i ? ", " : "") << lmfdb[i];
        os << "]";
    }
    return os.str();
}

namespace {

std::vector<std::string> lmfdb_for(const fixtures::EigenRow& row) {
    for (const auto& c : fixtures::galois_classes()) {
        if (c.label != row.class_label) continue;
        for (const auto& t : row.terms) {
            if (t.pair == c.data) return c.lmfdb;
            if (t.pair == c.k_data) return c.k_lmfdb;
        }
    }
    return {};
}

EigenformSpec spec_from_row(const fixtures::EigenRow& row) {
    EigenformSpec spec;
    spec.label = row.label;
    for (const auto& t : row.terms) {
        spec.family.push_back(t.pair);
        spec.betas[t.pair] = Surd::parse(t.beta);
    }
    std::sort(spec.family.begin(), spec.family.end());
    spec.lmfdb = lmfdb_for(row);
    return spec;
}

}  // namespace

EigenformSpec table_eigenform(const std::string& label) {
    const auto* row = fixtures::eigenform_by_label(label);
    if (!row) throw std::out_of_range("no eigenform row " + label);
    return spec_from_row(*row);
}

EigenformSpec build_eigenform(const HeckeFamily& fam) {
    const auto* row = fixtures::eigenform_containing(fam.unit_member());
    std::map<HDPair, Surd> fixture;
    if (row)
        for (const auto& t : row->terms) fixture[t.pair] = Surd::parse(t.beta);

    std::map<long long, Surd> beta{{1, Surd::one()}};
    auto present = fam.residues();
    for (long long g : present) {
        if (beta.count(g)) continue;
        long long q = representative_prime(fam, g);
        auto c1 = hecke_constant(fam, q, 1);
        auto cg = hecke_constant(fam, q, g);
        if (c1.C == 0 || cg.C == 0)
            throw Inconsistent("cannot fix beta at residue " + std::to_string(g) + ": zero Hecke constant");
        // lambda_q beta_{g^-1} = C(q,1) and lambda_q beta_1 = beta_g C(q,g)
        Surd bg = Surd::sqrt_of(Rat(c1.C, cg.C));
        auto fx = fixture.find(*fam.member(g));
        if (fx != fixture.end() && fx->second == -bg) bg = -bg;
        beta[g] = bg;
        // close up under multiplication by g: beta_{j g^-1} = beta_j beta_g C(q,j) / C(q,1)
        bool grew = true;
        while (grew) {
            grew = false;
            for (auto [j, bj] : std::map<long long, Surd>(beta)) {
                long long k = fam.target_residue(q, j);
                if (beta.count(k) || !fam.member(k)) continue;
                auto cj = hecke_constant(fam, q, j);
                beta[k] = bj * bg * Surd::integer(cj.C) / Surd::integer(c1.C);
                grew = true;
            }
        }
    }

    EigenformSpec spec;
    spec.family = fam.members();
    for (const auto& [j, b] : beta)
        if (fam.member(j)) spec.betas[*fam.member(j)] = b;
    if (!row) {
        spec.reconstructed = true;
        return spec;
    }
    spec.label = row->label;
    spec.lmfdb = lmfdb_for(*row);
    std::ostringstream bad;
    for (const auto& [p, b] : fixture)
        if (!(spec.beta(p) == b)) bad << " " << p.str() << ": computed " << spec.beta(p).str() << ", table " << b.str();
    for (const auto& [p, b] : spec.betas)
        if (!fixture.count(p)) bad << " " << p.str() << " missing from table";
    if (!bad.str().empty()) throw Inconsistent("eigenform " + row->label + " disagrees with the table:" + bad.str());
    return spec;
}

std::vector<SurdSum> eigen_coefficients(const EigenformSpec& spec, long long n_max) {
    std::vector<SurdSum> out(static_cast<size_t>(n_max + 1));
    for (const auto& [p, b] : spec.betas) {
        if (b.is_zero()) continue;
        auto s = k2_series(p, n_max);
        for (long long n = 0; n <= n_max; ++n)
            if (s[n] != 0) out[static_cast<size_t>(n)] += SurdSum(b, s[n]);
    }
    return out;
}

Surd verify_eigen(const EigenformSpec& spec, long long p, long long n_max) {
    if (spec.family.empty()) throw std::invalid_argument("empty eigenform");
    const HDPair& base = spec.family.front();
    long long b = base.r.denominator();
    require_prime_to(p, level(base));
    int chi = nebentypus(base, p);
    for (const auto& [q, beta] : spec.betas) {
        require_prime_to(p, level(q));
        if (nebentypus(q, p) != chi) throw Inconsistent("family members disagree on the character at " + std::to_string(p));
    }
    if (n_max <= 0) n_max = std::max(kHeckeTerms / p, 40 * b);
    auto f = eigen_coefficients(spec, n_max * p);
    // lambda_p = a_p / a_1 with a_1 = 1
    if (!(f[1] == SurdSum(Surd::one()))) throw Inconsistent("eigenform not normalized: a_1 = " + f[1].str());
    Surd lambda;
    for (const auto& [q, beta] : spec.betas)
        if (mod_pos(q.r.numerator() - p, b) == 0) lambda = beta * Surd::integer(k2_series(q, p)[p].get_si());
    const mpz_class p2chi = static_cast<long>(p * p * chi);
    for (long long n = 1; n <= n_max; ++n) {
        SurdSum Bn = f[static_cast<size_t>(n * p)];
        if (n % p == 0) Bn += f[static_cast<size_t>(n / p)] * p2chi;
        if (!(Bn == f[static_cast<size_t>(n)] * lambda))
            throw NotEigen("T_" + std::to_string(p) + " f differs from " + lambda.str() + " f at n = " + std::to_string(n), n);
    }
    return lambda;
}

// ---------------------------------------------------------------- twists

std::map<long long, int> trivial_character(long long b) {
    std::map<long long, int> out;
    for (long long i = 1; i <= b; ++i)
        if (gcd_ll(i, b) == 1) out[i % b] = 1;
    return out;
}

namespace {

void require_character(const std::map<long long, int>& chi, long long b) {
    auto units = trivial_character(b);
    for (auto [i, one] : units) {
        auto it = chi.find(i);
        if (it == chi.end() || (it->second != 1 && it->second != -1))
            throw NotCharacter("character undefined or not +-1 at " + std::to_string(i));
    }
    for (auto [i, x] : units)
        for (auto [j, y] : units)
            if (chi.at(i) * chi.at(j) != chi.at(mod_pos(i * j, b)))
                throw NotCharacter("map is not multiplicative at " + std::to_string(i) + "*" + std::to_string(j));
}

}  // namespace

std::vector<std::map<long long, int>> quadratic_characters(long long b) {
    std::vector<long long> units;
    for (auto [i, one] : trivial_character(b)) units.push_back(i);
    std::vector<std::map<long long, int>> out;
    for (unsigned long mask = 0; mask < (1ul << units.size()); ++mask) {
        std::map<long long, int> chi;
        for (size_t t = 0; t < units.size(); ++t) chi[units[t]] = (mask >> t) & 1 ? -1 : 1;
        try {
            require_character(chi, b);
            out.push_back(chi);
        } catch (const NotCharacter&) {
        }
    }
    return out;
}

EigenformSpec twist_by_quadratic(const EigenformSpec& spec, const std::map<long long, int>& character) {
    if (spec.family.empty()) throw std::invalid_argument("empty eigenform");
    long long b = spec.family.front().r.denominator();
    require_character(character, b);
    EigenformSpec out = spec;
    bool trivial = true;
    for (auto& [p, beta] : out.betas)
        if (character.at(mod_pos(p.r.numerator(), b)) == -1) {
            beta = -beta;
            trivial = false;
        }
    if (trivial) return out;
    out.label = spec.label.empty() ? "" : spec.label + "(twist)";
    for (long long p = 5, done = 0; done < 2; p += 2)
        if (is_prime(p) && level(spec.family.front()) % p != 0) {
            verify_eigen(out, p);
            ++done;
        }
    return out;
}

nlohmann::json TwistReport::to_json() const {
    return {{"pair", pair_json(pair)}, {"twist", pair_json(twist)}, {"n_max", n_max}, {"equal", equal},
            {"flipped", flipped}, {"mismatches", mismatches}, {"pass", pass}};
}

TwistReport twist_pair_check(const HDPair& pair, long long n_max) {
    require_s2(pair);
    if (!twist_in_range(pair)) throw std::domain_error("twist of " + pair.str() + " leaves 0 < h < 3/2");
    TwistReport rep;
    rep.pair = pair;
    rep.twist = kummer_twist(pair);
    rep.n_max = n_max;
    auto s = k2_series(pair, n_max), t = k2_series(rep.twist, n_max);
    long long a = pair.r.numerator(), b = pair.r.denominator(), N = 2 * b;
    for (long long n = 0; n <= n_max; ++n) {
        long long c = mod_pos(n - a, N);
        bool ok;
        if (c == 0) {
            ok = s[n] == t[n];
            if (ok && s[n] != 0) ++rep.equal;
        } else if (c == b) {
            ok = s[n] == -t[n];
            if (ok && s[n] != 0) ++rep.flipped;
        } else {
            ok = s[n] == 0 && t[n] == 0;
        }
        if (!ok) rep.mismatches.push_back(n);
    }
    rep.pass = rep.mismatches.empty();
    return rep;
}

}  // namespace hgm
