#pragma once

// Conjugacy of subgroups of GL2(Z/nZ) by exhaustive search over cosets, and
// Dickson-style classification of subgroups of GL2(F_p).

#include <optional>
#include <string>
#include <vector>

#include "group.hpp"

namespace galtors {

namespace detail {

inline bool order_stats_dominated(const std::map<int, int>& small, const std::map<int, int>& big) {
    for (const auto& [ord, cnt] : small) {
        auto it = big.find(ord);
        if (it == big.end() || it->second < cnt) return false;
    }
    return true;
}

inline bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Searches x with x G x^{-1} <= H. Whether x works depends only on the
/// coset Hx, so each coset is tested once.
inline std::optional<GMat> find_conjugator_into(const GenGroup& g, const GenGroup& h) {
    const int n = g.modulus();
    const auto hs = h.elements();
    std::vector<bool> covered(code_space(n), false);
    for (std::uint32_t code = 0; code < code_space(n); ++code) {
        if (covered[code]) continue;
        GMat x = GMat::from_code(code, n);
        if (!x.is_invertible()) continue;
        const GMat xi = mat_inverse(x);
        bool ok = true;
        for (const auto& s : g.generators()) {
            if (!h.contains(x * s * xi)) {
                ok = false;
                break;
            }
        }
        if (ok) return x;
        for (const auto& y : hs) covered[(y * x).code()] = true;
    }
    return std::nullopt;
}

}  // namespace detail

/// Some x with x G x^{-1} contained in H, if one exists.
inline std::optional<GMat> conjugator_into(const GenGroup& g, const GenGroup& h) {
    if (g.modulus() != h.modulus()) throw ModulusMismatch(g.modulus(), h.modulus());
    if (h.order() % g.order() != 0) return std::nullopt;
    if (!detail::is_subset(det_image(g), det_image(h))) return std::nullopt;
    if (!detail::order_stats_dominated(order_statistics(g), order_statistics(h))) return std::nullopt;
    return detail::find_conjugator_into(g, h);
}

inline bool is_conjugate_subgroup(const GenGroup& g, const GenGroup& h) {
    return conjugator_into(g, h).has_value();
}

inline bool is_conjugate(const GenGroup& g, const GenGroup& h) {
    if (g.modulus() != h.modulus()) throw ModulusMismatch(g.modulus(), h.modulus());
    if (g.order() != h.order()) return false;
    if (det_image(g) != det_image(h)) return false;
    if (order_statistics(g) != order_statistics(h)) return false;
    if (trace_det_classes(g) != trace_det_classes(h)) return false;
    return detail::find_conjugator_into(g, h).has_value();
}

enum class SubgroupClass {
    BorelContained,
    ContainsSL2,
    SplitCartanNormalizer,
    NonsplitCartanNormalizer,
    ExceptionalA4,
    ExceptionalS4,
    ExceptionalA5,
    Other
};

inline std::string to_string(SubgroupClass c) {
    switch (c) {
        case SubgroupClass::BorelContained: return "borel-contained";
        case SubgroupClass::ContainsSL2: return "contains-SL2";
        case SubgroupClass::SplitCartanNormalizer: return "split-cartan-normalizer";
        case SubgroupClass::NonsplitCartanNormalizer: return "nonsplit-cartan-normalizer";
        case SubgroupClass::ExceptionalA4: return "exceptional-A4";
        case SubgroupClass::ExceptionalS4: return "exceptional-S4";
        case SubgroupClass::ExceptionalA5: return "exceptional-A5";
        case SubgroupClass::Other: return "other";
    }
    return "?";
}

/// Projective image G / (G cap scalars): its order and element-order multiset.
struct ProjectiveImage {
    std::size_t order;
    std::map<int, int> order_stats;
};

inline ProjectiveImage projective_image(const GenGroup& g) {
    std::size_t scalars = 0;
    std::map<int, int> stats;
    for (const auto& m : g.elements()) {
        if (m.is_scalar()) ++scalars;
        GMat p = m;
        int k = 1;
        while (!p.is_scalar()) {
            p = p * m;
            ++k;
        }
        ++stats[k];
    }
    // Each projective element has `scalars` lifts of the same projective order.
    for (auto& [k, cnt] : stats) cnt /= static_cast<int>(scalars);
    return {g.order() / scalars, stats};
}

namespace detail {

inline const std::map<int, int>& a4_stats() {
    static const std::map<int, int> s{{1, 1}, {2, 3}, {3, 8}};
    return s;
}
inline const std::map<int, int>& s4_stats() {
    static const std::map<int, int> s{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
    return s;
}
inline const std::map<int, int>& a5_stats() {
    static const std::map<int, int> s{{1, 1}, {2, 15}, {3, 20}, {5, 24}};
    return s;
}

}  // namespace detail

/// Classification of a subgroup of GL2(F_p). Tags are tried in the order of
/// the enum, so a small group in both a Borel and a Cartan normalizer is
/// reported as borel-contained.
inline SubgroupClass dickson_classify(const GenGroup& g) {
    const int p = g.modulus();
    if (!is_prime(p)) throw std::invalid_argument("dickson_classify needs a prime modulus, got " + std::to_string(p));

    if (stable_lines(g) > 0) return SubgroupClass::BorelContained;

    const auto sl2 = standard_subgroup(StandardKind::SL2, p);
    if (sl2.is_subgroup_of(g)) return SubgroupClass::ContainsSL2;

    if (p != 2) {
        if (is_conjugate_subgroup(g, standard_subgroup(StandardKind::SplitCartanNormalizer, p)))
            return SubgroupClass::SplitCartanNormalizer;
        const int phi = least_nonresidue(p).value();
        if (is_conjugate_subgroup(g, standard_subgroup(StandardKind::NonsplitCartanNormalizer, p, phi)))
            return SubgroupClass::NonsplitCartanNormalizer;
    }

    const auto proj = projective_image(g);
    if (proj.order == 12 && proj.order_stats == detail::a4_stats()) return SubgroupClass::ExceptionalA4;
    if (proj.order == 24 && proj.order_stats == detail::s4_stats()) return SubgroupClass::ExceptionalS4;
    if (proj.order == 60 && proj.order_stats == detail::a5_stats()) return SubgroupClass::ExceptionalA5;
    return SubgroupClass::Other;
}

}  // namespace galtors
