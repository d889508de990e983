#pragma once

// Subgroups with published generators, plus the reconstructed 3Cs.1.1.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "group.hpp"

namespace galtors {

/// How printed generator matrices act on torsion vectors. The library
/// itself always uses g.v on column vectors; row-convention matrices
/// (v.g) are transposed on ingestion.
enum class MatrixConvention { Column, Row };

struct NamedGroupSpec {
    std::string label;
    int level;
    std::vector<std::array<int, 4>> generators;  // row-major, as printed
    MatrixConvention convention = MatrixConvention::Column;
};

/// Generators of every group whose generators are written out explicitly.
inline const std::vector<NamedGroupSpec>& named_group_specs() {
    static const std::vector<NamedGroupSpec> specs{
        {"2B", 2, {{1, 1, 0, 1}}},
        {"3B.1.1", 3, {{1, 0, 0, 2}, {1, 1, 0, 1}}},
        {"3B.1.2", 3, {{2, 0, 0, 1}, {1, 1, 0, 1}}},
        {"9B0-9a", 9, {{1, 1, 0, 1}, {2, 0, 0, 5}, {1, 0, 0, 2}}, MatrixConvention::Row},
        {"9J0-9b", 9, {{1, 3, 0, 1}, {2, 2, 3, 8}, {2, 1, 0, 1}}, MatrixConvention::Row},
        {"9H0-9b", 9, {{1, 0, 3, 1}, {5, 3, 0, 2}, {2, 0, 1, 1}}, MatrixConvention::Row},
    };
    return specs;
}

/// Labels of the embedded level-9 groups.
inline std::vector<std::string> level9_labels() { return {"9B0-9a", "9H0-9b", "9J0-9b"}; }

inline GenGroup group_from_spec(const NamedGroupSpec& spec) {
    std::vector<GMat> gens;
    for (const auto& e : spec.generators) {
        GMat m(e[0], e[1], e[2], e[3], spec.level);
        gens.push_back(spec.convention == MatrixConvention::Row ? transposed(m) : m);
    }
    return closure(gens, spec.level, spec.label);
}

/// Candidates for 3Cs.1.1: order-2 subgroups of the split Cartan mod 3 with
/// surjective det fixing a vector of order 3, sorted by generator code.
inline std::vector<GenGroup> split_cartan_order2_candidates() {
    const int n = 3;
    const auto cartan = standard_subgroup(StandardKind::SplitCartan, n);
    const auto vecs = exact_order_vectors(n);
    std::vector<GenGroup> out;
    for (const auto& m : cartan.elements()) {
        if (element_order(m) != 2) continue;
        auto g = closure({m}, n);
        if (det_image(g) != units_mod(n)) continue;
        bool fixes = false;
        for (const auto& v : vecs) fixes = fixes || m.apply(v) == v;
        if (fixes) out.push_back(g);
    }
    return out;
}

/// 3Cs.1.1 as reconstructed: the candidate fixing e1 = (1, 0). Both
/// candidates are conjugate under the coordinate swap.
inline GenGroup reconstructed_3cs11() {
    const TorVec e1(1, 0, 3);
    for (const auto& g : split_cartan_order2_candidates()) {
        if (g.generators().front().apply(e1) == e1) return g.with_label("3Cs.1.1");
    }
    throw std::logic_error("no 3Cs.1.1 candidate fixes e1");
}

inline std::vector<std::string> named_group_labels() {
    std::vector<std::string> out;
    for (const auto& s : named_group_specs()) out.push_back(s.label);
    out.push_back("3Cs.1.1");
    return out;
}

/// Embedded group by label; throws std::out_of_range for unknown labels.
/// Accepts the superscript spelling (9B⁰-9a) as well as 9B0-9a.
inline GenGroup named_group(std::string label) {
    const std::string sup0 = "⁰";
    for (auto pos = label.find(sup0); pos != std::string::npos; pos = label.find(sup0))
        label.replace(pos, sup0.size(), "0");
    if (label == "3Cs.1.1") return reconstructed_3cs11();
    for (const auto& s : named_group_specs())
        if (s.label == label) return group_from_spec(s);
    throw std::out_of_range("unknown group label: " + label);
}

}  // namespace galtors
