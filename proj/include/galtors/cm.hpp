#pragma once

// The thirteen rational j-invariants of CM elliptic curves.

#include <algorithm>
#include <vector>

#include "bigrat.hpp"

namespace galtors {

inline const std::vector<BigRat>& cm_j_invariants() {
    static const std::vector<BigRat> table = [] {
        std::vector<BigRat> t;
        for (const char* s : {"0", "1728", "-3375", "8000", "-32768", "54000", "287496", "-884736", "-12288000",
                              "16581375", "-884736000", "-147197952000", "-262537412640768000"})
            t.emplace_back(BigInt(s));
        return t;
    }();
    return table;
}

inline bool is_cm_j(const BigRat& j) {
    const auto& t = cm_j_invariants();
    return std::find(t.begin(), t.end(), j) != t.end();
}

}  // namespace galtors
