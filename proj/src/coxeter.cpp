#include "hgm/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hgm {

// ---------------------------------------------------------------- vectors and matrices

HyperVector HyperVector::of(const HDPair& p) {
    return {{Rat(1, 2), Rat(1, 2), p.r, Rat(1), p.s}};
}

bool HyperVector::is_pair() const { return v[0] == Rat(1, 2) && v[1] == Rat(1, 2) && v[3] == Rat(1); }

HDPair HyperVector::pair() const {
    if (!is_pair()) throw std::domain_error("hypervector is not of the form (1/2,1/2,r,1,s)");
    return {v[2], v[4]};
}

GroupElement GroupElement::identity() {
    GroupElement g;
    for (int i = 0; i < 5; ++i) g.m[i][i] = 1;
    return g;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    GroupElement g;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            long long acc = 0;
            for (int k = 0; k < 5; ++k) acc += m[i][k] * o.m[k][j];
            g.m[i][j] = acc;
        }
    g.word = word + o.word;
    return g;
}

HyperVector GroupElement::operator*(const HyperVector& x) const {
    HyperVector y;
    for (int i = 0; i < 5; ++i) {
        Rat acc(0);
        for (int k = 0; k < 5; ++k)
            if (m[i][k]) acc += Rat(m[i][k]) * x.v[k];
        y.v[i] = acc;
    }
    return y;
}

bool GroupElement::is_identity() const { return m == identity().m; }

int GroupElement::order() const {
    GroupElement g = *this;
    for (int k = 1; k <= 64; ++k) {
        if (g.is_identity()) return k;
        g = g * *this;
    }
    throw std::logic_error("group element of order > 64");
}

GroupElement matrix_A() {
    GroupElement g;
    g.m = {{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, -1, 0, 1}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}};
    g.word = "A";
    return g;
}

GroupElement matrix_K() {
    GroupElement g;
    g.m = {{{1, 0, 0, 0, 0}, {0, -1, 0, 1, 0}, {0, 0, -1, 1, 0}, {0, 0, 0, 1, 0}, {0, -1, -1, 1, 1}}};
    g.word = "K";
    return g;
}

GroupElement matrix_of(const std::string& word) {
    GroupElement g = GroupElement::identity();
    for (char ch : word) {
        if (ch == 'A') g = g * matrix_A();
        else if (ch == 'K') g = g * matrix_K();
        else throw std::invalid_argument(std::string("unknown generator '") + ch + "'");
    }
    return g;
}

std::vector<GroupElement> generate_group() {
    std::vector<GroupElement> out{GroupElement::identity()};
    std::deque<GroupElement> todo{out.front()};
    while (!todo.empty()) {
        GroupElement g = todo.front();
        todo.pop_front();
        for (const auto& gen : {matrix_A(), matrix_K()}) {
            GroupElement h = g * gen;
            if (std::find(out.begin(), out.end(), h) == out.end()) {
                out.push_back(h);
                todo.push_back(h);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- pair maps

HDPair apply_A(const HDPair& p) { return {p.s - p.r, p.s}; }
HDPair apply_K(const HDPair& p) { return {Rat(1) - p.r, Rat(1, 2) - p.r + p.s}; }
Rat twist_h(const HDPair& p) { return p.r - p.s + Rat(3, 2); }
HDPair kummer_twist(const HDPair& p) { return {p.r, twist_h(p)}; }
bool twist_in_range(const HDPair& p) {
    Rat h = twist_h(p);
    return Rat(0) < h && h < Rat(3, 2);
}

std::optional<long long> are_conjugate(const HDPair& p1, const HDPair& p2) {
    long long M = lcm_ll(p1.M(), p2.M());
    for (long long c = 1; c < M; ++c) {
        if (gcd_ll(c, M) != 1) continue;
        if (is_integer(p1.r - Rat(c) * p2.r) && is_integer(p1.s - Rat(c) * p2.s)) return c;
    }
    return std::nullopt;
}

std::vector<HDPair> conjugate_family(const HDPair& p) {
    require_s2(p);
    std::vector<HDPair> out;
    for (const auto& q : enumerate_s2())
        if (are_conjugate(p, q)) out.push_back(q);
    return out;
}

bool is_galois(const std::vector<HDPair>& family) {
    std::set<Rat> rs;
    for (const auto& p : family) rs.insert(p.r);
    return rs.size() == family.size();
}

HDPair normalize_to_unit_numerator(const HDPair& p) {
    long long b = p.r.denominator();
    for (const auto& q : conjugate_family(p))
        if (q.r == Rat(1, b)) return q;
    throw NotInS2("no unit-numerator conjugate for " + p.str());
}

std::vector<GroupElement> stabilizer(const HDPair& p) {
    std::vector<GroupElement> out;
    HyperVector x = HyperVector::of(p);
    for (const auto& g : generate_group()) {
        HyperVector y = g * x;
        if (y.is_pair() && are_conjugate(y.pair(), p)) out.push_back(g);
    }
    return out;
}

std::string to_string(EdgeKind k) {
    switch (k) {
        case EdgeKind::atkin_lehner: return "atkin_lehner";
        case EdgeKind::kummer: return "kummer";
        case EdgeKind::twist: return "twist";
        case EdgeKind::conjugate: return "conjugate";
    }
    return "?";
}

// ---------------------------------------------------------------- classification

namespace {

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    size_t find(size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

nlohmann::json pair_json(const HDPair& p) { return {to_string(p.r), to_string(p.s)}; }

}  // namespace

const FamilyClass& Classification::by_label(int label) const {
    for (const auto& c : classes)
        if (c.label == label) return c;
    throw std::out_of_range("no class " + std::to_string(label));
}

const FamilyClass& Classification::class_of(const HDPair& p) const {
    for (const auto& c : classes)
        if (std::find(c.pairs.begin(), c.pairs.end(), p) != c.pairs.end()) return c;
    throw NotInS2(p.str() + " is not in S2'");
}

size_t Classification::family_index(const HDPair& p) const {
    for (size_t i = 0; i < families.size(); ++i)
        if (std::find(families[i].members.begin(), families[i].members.end(), p) != families[i].members.end())
            return i;
    throw NotInS2(p.str() + " is not in S2'");
}

Classification classify() {
    Classification out;
    out.entries = enumerate_s2_entries();
    std::vector<HDPair> pairs;
    std::map<HDPair, size_t> index;
    for (const auto& e : out.entries) {
        index[e.pair] = pairs.size();
        pairs.push_back(e.pair);
    }
    auto inside = [&](const HDPair& q) { return index.count(q) > 0; };

    // conjugate families
    std::vector<long long> fam_of(pairs.size(), -1);
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (fam_of[i] >= 0) continue;
        Family f;
        for (size_t j = i; j < pairs.size(); ++j)
            if (fam_of[j] < 0 && are_conjugate(pairs[i], pairs[j])) {
                fam_of[j] = static_cast<long long>(out.families.size());
                f.members.push_back(pairs[j]);
            }
        f.galois = is_galois(f.members);
        for (const auto& m : f.members) {
            HDPair t = kummer_twist(m);
            if (std::find(f.members.begin(), f.members.end(), t) != f.members.end()) f.self_twisted = true;
            if (m.degenerate()) f.degenerate = true;
        }
        out.families.push_back(std::move(f));
    }

    UnionFind uf(pairs.size());
    std::vector<Edge> edges;
    std::map<size_t, std::vector<std::string>> dangling;
    for (size_t i = 0; i < pairs.size(); ++i) {
        const HDPair& p = pairs[i];
        std::pair<HDPair, EdgeKind> images[] = {{apply_A(p), EdgeKind::atkin_lehner},
                                                {apply_K(p), EdgeKind::kummer},
                                                {kummer_twist(p), EdgeKind::twist}};
        for (const auto& [q, kind] : images) {
            if (!inside(q)) {
                dangling[i].push_back(to_string(kind) + " " + p.str() + " -> " + q.str());
                continue;
            }
            uf.unite(i, index[q]);
            if (p < q) edges.push_back({p, q, kind});
        }
        for (const auto& q : out.families[static_cast<size_t>(fam_of[i])].members) {
            uf.unite(i, index[q]);
            if (p < q) edges.push_back({p, q, EdgeKind::conjugate});
        }
    }

    std::map<size_t, FamilyClass> comps;
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto& c = comps[uf.find(i)];
        c.pairs.push_back(pairs[i]);
        auto f = static_cast<size_t>(fam_of[i]);
        if (std::find(c.families.begin(), c.families.end(), f) == c.families.end()) c.families.push_back(f);
        for (auto& d : dangling[i]) c.dangling.push_back(d);
    }
    for (const auto& e : edges) comps[uf.find(index[e.from])].edges.push_back(e);

    auto attach = [&](const fixtures::ClassRow& row) {
        if (!inside(row.data)) throw std::logic_error("fixture pair outside S2': " + row.data.str());
        auto& c = comps[uf.find(index[row.data])];
        if (c.label != 0)
            throw std::logic_error("classes " + std::to_string(c.label) + " and " + std::to_string(row.label) +
                                   " share a component");
        c.label = row.label;
        c.cm = row.cm;
        c.row = row;
    };
    for (const auto& row : fixtures::galois_classes()) attach(row);
    for (const auto& row : fixtures::nongalois_classes()) attach(row);

    for (auto& [root, c] : comps) {
        if (c.label == 0) throw std::logic_error("component of " + c.pairs.front().str() + " has no table row");
        for (auto f : c.families)
            if (out.families[f].galois) c.galois = true;
        out.classes.push_back(std::move(c));
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const FamilyClass& a, const FamilyClass& b) { return a.label < b.label; });

    for (const auto& c : out.classes) {
        long long counted = 0;
        for (auto f : c.families) {
            const Family& fam = out.families[f];
            if (fam.galois) ++out.distinct_r_families;
            if (fam.counted_galois()) ++counted;
        }
        out.galois_families += counted;
        if (c.galois) ++out.galois_components;
        if (!c.cm && counted > 0) {
            out.noncm_galois_families += counted;
            ++out.noncm_galois_components;
        }
        auto n = static_cast<long long>(c.pairs.size());
        if (c.label <= 10) {
            out.tally.galois_classes += n;
        } else if (c.label == 11) {
            out.tally.class11 += n;
        } else {
            for (const auto& p : c.pairs) {
                if (p.r > Rat(1)) ++out.tally.shifted;
                else ++out.tally.nongalois_regular;
            }
        }
    }
    return out;
}

nlohmann::json Classification::to_json() const {
    nlohmann::json cls = nlohmann::json::array();
    for (const auto& c : classes) {
        nlohmann::json fams = nlohmann::json::array();
        for (auto f : c.families) {
            nlohmann::json mem = nlohmann::json::array();
            for (const auto& p : families[f].members) mem.push_back(pair_json(p));
            fams.push_back({{"members", mem},
                            {"galois", families[f].galois},
                            {"self_twisted", families[f].self_twisted},
                            {"degenerate", families[f].degenerate}});
        }
        nlohmann::json edge_list = nlohmann::json::array();
        for (const auto& e : c.edges) edge_list.push_back({pair_json(e.from), pair_json(e.to), to_string(e.kind)});
        nlohmann::json j = {{"label", c.label},
                            {"cm", c.cm},
                            {"galois", c.galois},
                            {"size", c.pairs.size()},
                            {"families", fams},
                            {"edges", edge_list},
                            {"dangling", c.dangling}};
        if (c.row) {
            j["data"] = pair_json(c.row->data);
            j["lmfdb"] = c.row->lmfdb;
            j["k_data"] = pair_json(c.row->k_data);
            j["k_lmfdb"] = c.row->k_lmfdb;
            if (c.row->al_k_data) j["al_k_data"] = pair_json(*c.row->al_k_data);
        }
        cls.push_back(j);
    }
    return {{"pairs", entries.size()},
            {"nondegenerate",
             std::count_if(entries.begin(), entries.end(), [](const S2Entry& e) { return !e.degenerate; })},
            {"families", families.size()},
            {"distinct_r_families", distinct_r_families},
            {"galois_families", galois_families},
            {"galois_components", galois_components},
            {"noncm_galois_families", noncm_galois_families},
            {"noncm_galois_components", noncm_galois_components},
            {"tally",
             {{"galois_classes", tally.galois_classes},
              {"nongalois", tally.nongalois_regular},
              {"class11", tally.class11},
              {"shifted", tally.shifted},
              {"total", tally.total()}}},
            {"classes", cls}};
}

std::string Classification::to_dot() const {
    std::ostringstream os;
    auto node = [](const HDPair& p) { return "\"" + to_string(p.r) + "," + to_string(p.s) + "\""; };
    os << "graph classes {\n  node [shape=box, fontsize=10];\n";
    for (const auto& c : classes) {
        os << "  subgraph cluster_" << c.label << " {\n    label=\"class " << c.label << (c.cm ? " (CM)" : "")
           << "\";\n";
        for (const auto& p : c.pairs) os << "    " << node(p) << ";\n";
        for (const auto& e : c.edges) {
            os << "    " << node(e.from) << " -- " << node(e.to);
            switch (e.kind) {
                case EdgeKind::conjugate: os << " [style=dashed]"; break;
                case EdgeKind::atkin_lehner: os << " [color=red]"; break;
                case EdgeKind::kummer: os << " [color=black]"; break;
                case EdgeKind::twist: os << " [color=blue]"; break;
            }
            os << ";\n";
        }
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

std::string Classification::summary() const {
    auto nondeg = std::count_if(entries.begin(), entries.end(), [](const S2Entry& e) { return !e.degenerate; });
    std::ostringstream os;
    os << entries.size() << " pairs; " << nondeg << " non-degenerate; " << galois_families << " Galois families; "
       << galois_components << " Galois components";
    return os.str();
}

}  // namespace hgm
