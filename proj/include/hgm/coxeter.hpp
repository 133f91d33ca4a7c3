#pragma once

#include <array>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "hgm/fixtures.hpp"
#include "hgm/qseries.hpp"

namespace hgm {

// (a,b,c,d,e) for the datum {a,b,c; d,e}; an HDPair is (1/2,1/2,r,1,s)
struct HyperVector {
    std::array<Rat, 5> v;

    static HyperVector of(const HDPair& p);
    bool is_pair() const;
    HDPair pair() const;  // throws if not of pair shape
    bool operator==(const HyperVector&) const = default;
};

struct GroupElement {
    using Matrix = std::array<std::array<long long, 5>, 5>;
    Matrix m{};
    std::string word;

    static GroupElement identity();
    GroupElement operator*(const GroupElement& o) const;
    HyperVector operator*(const HyperVector& x) const;
    bool is_identity() const;
    int order() const;
    bool operator==(const GroupElement& o) const { return m == o.m; }
};

GroupElement matrix_A();
GroupElement matrix_K();
GroupElement matrix_of(const std::string& word);  // letters 'A' and 'K', applied right to left
std::vector<GroupElement> generate_group();

HDPair apply_A(const HDPair& p);
HDPair apply_K(const HDPair& p);
Rat twist_h(const HDPair& p);
HDPair kummer_twist(const HDPair& p);
bool twist_in_range(const HDPair& p);  // 0 < h < 3/2

std::optional<long long> are_conjugate(const HDPair& p1, const HDPair& p2);
std::vector<HDPair> conjugate_family(const HDPair& p);
bool is_galois(const std::vector<HDPair>& family);
HDPair normalize_to_unit_numerator(const HDPair& p);

// elements g of D6 with g.p conjugate to p
std::vector<GroupElement> stabilizer(const HDPair& p);

enum class EdgeKind { atkin_lehner, kummer, twist, conjugate };
std::string to_string(EdgeKind k);

struct Edge {
    HDPair from;
    HDPair to;
    EdgeKind kind;
};

struct Family {
    std::vector<HDPair> members;
    bool galois = false;        // pairwise distinct r
    bool self_twisted = false;  // Kummer twist of a member lies in the family
    bool degenerate = false;
    bool counted_galois() const { return galois && !self_twisted; }
};

struct FamilyClass {
    int label = 0;
    std::vector<HDPair> pairs;
    std::vector<size_t> families;  // indices into Classification::families
    std::vector<Edge> edges;
    std::vector<std::string> dangling;  // images leaving S2'
    bool cm = false;
    bool galois = false;  // contains a Galois family
    std::optional<fixtures::ClassRow> row;
};

struct Tally {
    long long galois_classes = 0;  // classes 1-10
    long long nongalois_regular = 0;
    long long class11 = 0;
    long long shifted = 0;
    long long total() const { return galois_classes + nongalois_regular + class11 + shifted; }
};

struct Classification {
    std::vector<S2Entry> entries;
    std::vector<Family> families;
    std::vector<FamilyClass> classes;  // sorted by label

    long long distinct_r_families = 0;
    long long galois_families = 0;
    long long galois_components = 0;
    long long noncm_galois_families = 0;
    long long noncm_galois_components = 0;
    Tally tally;

    const FamilyClass& by_label(int label) const;
    const FamilyClass& class_of(const HDPair& p) const;
    size_t family_index(const HDPair& p) const;

    nlohmann::json to_json() const;
    std::string to_dot() const;
    std::string summary() const;
};

Classification classify();

}  // namespace hgm
