#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgm/qseries.hpp"

namespace hgm::fixtures {

struct ClassRow {
    int label = 0;
    HDPair data;
    std::vector<std::string> lmfdb;
    HDPair k_data;
    std::vector<std::string> k_lmfdb;
    std::optional<HDPair> al_k_data;  // Galois classes only
    bool cm = false;
};

struct EigenTerm {
    HDPair pair;
    std::string beta;          // e.g. "-4*sqrt(-3)"
    std::string printed_beta;  // non-empty where the printed value was corrected
    std::string printed_pair;
};

struct EigenRow {
    std::string label;
    std::string printed_label;
    int class_label = 0;
    long long b = 0;
    std::string name;
    std::vector<EigenTerm> terms;
};

const std::vector<ClassRow>& galois_classes();     // classes 1-10
const std::vector<ClassRow>& nongalois_classes();  // classes 11-15
const std::vector<EigenRow>& eigenforms();
const EigenRow* eigenform_by_label(const std::string& label);
const EigenRow* eigenform_containing(const HDPair& p);

}  // namespace hgm::fixtures
