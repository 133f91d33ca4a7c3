#include "hgm/fixtures.hpp"

#include <json.hpp>
#include <string_view>

namespace hgm::fixtures {

namespace raw {
extern const std::string_view table1;
extern const std::string_view table2;
extern const std::string_view table4;
}  // namespace raw

namespace {

using nlohmann::json;

HDPair pair_of(const json& j) {
    return parse_pair(j.at(0).get<std::string>(), j.at(1).get<std::string>());
}

std::vector<ClassRow> load_classes(std::string_view text) {
    std::vector<ClassRow> out;
    const json doc = json::parse(text);
    for (const auto& row : doc.at("rows")) {
        ClassRow c;
        c.label = row.at("label").get<int>();
        c.data = pair_of(row.at("data"));
        c.lmfdb = row.at("lmfdb").get<std::vector<std::string>>();
        c.k_data = pair_of(row.at("k_data"));
        c.k_lmfdb = row.at("k_lmfdb").get<std::vector<std::string>>();
        if (row.contains("al_k_data")) c.al_k_data = pair_of(row.at("al_k_data"));
        c.cm = row.at("cm").get<bool>();
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<EigenRow> load_eigen(std::string_view text) {
    std::vector<EigenRow> out;
    const json doc = json::parse(text);
    for (const auto& row : doc.at("rows")) {
        EigenRow e;
        e.label = row.at("label").get<std::string>();
        e.printed_label = row.at("printed_label").get<std::string>();
        e.class_label = row.at("class").get<int>();
        e.b = row.at("b").get<long long>();
        e.name = row.at("name").get<std::string>();
        for (const auto& t : row.at("terms")) {
            EigenTerm term;
            term.pair = pair_of(t.at("pair"));
            term.beta = t.at("beta").get<std::string>();
            term.printed_beta = t.value("printed_beta", "");
            term.printed_pair = t.value("printed_pair", "");
            e.terms.push_back(std::move(term));
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

const std::vector<ClassRow>& galois_classes() {
    static const std::vector<ClassRow> rows = load_classes(raw::table1);
    return rows;
}

const std::vector<ClassRow>& nongalois_classes() {
    static const std::vector<ClassRow> rows = load_classes(raw::table2);
    return rows;
}

const std::vector<EigenRow>& eigenforms() {
    static const std::vector<EigenRow> rows = load_eigen(raw::table4);
    return rows;
}

const EigenRow* eigenform_by_label(const std::string& label) {
    for (const auto& row : eigenforms())
        if (row.label == label) return &row;
    return nullptr;
}

const EigenRow* eigenform_containing(const HDPair& p) {
    for (const auto& row : eigenforms())
        for (const auto& t : row.terms)
            if (t.pair == p) return &row;
    return nullptr;
}

}  // namespace hgm::fixtures
