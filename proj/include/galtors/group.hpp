#pragma once

// Finite subgroups of GL2(Z/nZ) given by generators, with their full element
// sets, and the standard subgroups (Borel, Cartan and normalizers, SL2).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ring2x2.hpp"

namespace galtors {

class GenGroup {
public:
    int modulus() const noexcept { return n_; }
    std::size_t order() const noexcept { return codes_.size(); }
    const std::vector<GMat>& generators() const noexcept { return gens_; }
    /// Sorted element codes (see GMat::code).
    const std::vector<std::uint32_t>& element_codes() const noexcept { return codes_; }
    const std::string& label() const noexcept { return label_; }

    std::vector<GMat> elements() const {
        std::vector<GMat> out;
        out.reserve(codes_.size());
        for (auto c : codes_) out.push_back(GMat::from_code(c, n_));
        return out;
    }

    bool contains(const GMat& m) const {
        return m.modulus() == n_ && member_[m.code()];
    }
    bool contains_code(std::uint32_t code) const { return member_[code]; }

    /// Index-in-sorted-order lookup; -1 when absent.
    std::ptrdiff_t index_of(std::uint32_t code) const {
        auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
        if (it == codes_.end() || *it != code) return -1;
        return it - codes_.begin();
    }

    GenGroup with_label(std::string label) const {
        GenGroup g = *this;
        g.label_ = std::move(label);
        return g;
    }

    bool is_subgroup_of(const GenGroup& other) const {
        if (other.n_ != n_) throw ModulusMismatch(n_, other.n_);
        for (const auto& g : gens_)
            if (!other.contains(g)) return false;
        return true;
    }

    friend bool operator==(const GenGroup& x, const GenGroup& y) noexcept {
        return x.n_ == y.n_ && x.codes_ == y.codes_;
    }

    /// Builds a group from an element set already known to be a subgroup.
    /// Generators are chosen greedily, largest element order first.
    static GenGroup from_elements(int n, std::vector<std::uint32_t> codes, std::string label = {});

private:
    friend GenGroup closure(const std::vector<GMat>& gens, int n, std::string label);

    GenGroup(int n, std::vector<GMat> gens, std::vector<std::uint32_t> codes, std::vector<bool> member,
             std::string label)
        : n_(n), gens_(std::move(gens)), codes_(std::move(codes)), member_(std::move(member)),
          label_(std::move(label)) {}

    int n_;
    std::vector<GMat> gens_;
    std::vector<std::uint32_t> codes_;
    std::vector<bool> member_;
    std::string label_;
};

inline std::size_t code_space(int n) {
    std::size_t s = static_cast<std::size_t>(n);
    return s * s * s * s;
}

/// The subgroup generated by `gens`, by breadth-first closure under left
/// multiplication. In a finite group this also yields all inverses.
inline GenGroup closure(const std::vector<GMat>& gens, int n, std::string label = {}) {
    detail::check_modulus(n);
    for (const auto& g : gens) {
        if (g.modulus() != n) throw ModulusMismatch(n, g.modulus());
        if (!g.is_invertible()) throw NotInvertible(g.det().value(), n);
    }
    std::vector<bool> member(code_space(n), false);
    std::vector<std::uint32_t> codes;
    std::vector<GMat> frontier{GMat::identity(n)};
    member[frontier.front().code()] = true;
    codes.push_back(frontier.front().code());
    while (!frontier.empty()) {
        GMat x = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            GMat y = g * x;
            auto c = y.code();
            if (!member[c]) {
                member[c] = true;
                codes.push_back(c);
                frontier.push_back(y);
            }
        }
    }
    std::sort(codes.begin(), codes.end());
    return GenGroup(n, gens, std::move(codes), std::move(member), std::move(label));
}

inline GenGroup closure(const std::vector<GMat>& gens, int n, const char* label) {
    return closure(gens, n, std::string(label));
}

inline GenGroup GenGroup::from_elements(int n, std::vector<std::uint32_t> codes, std::string label) {
    std::vector<std::pair<int, std::uint32_t>> by_order;
    by_order.reserve(codes.size());
    for (auto c : codes) by_order.emplace_back(-element_order(GMat::from_code(c, n)), c);
    std::sort(by_order.begin(), by_order.end());

    std::vector<GMat> gens;
    GenGroup current = closure({}, n);
    for (const auto& [neg_order, c] : by_order) {
        if (current.contains_code(c)) continue;
        gens.push_back(GMat::from_code(c, n));
        current = closure(gens, n);
        if (current.order() == codes.size()) break;
    }
    std::sort(codes.begin(), codes.end());
    if (current.codes_ != codes) throw std::logic_error("from_elements: element set is not a group");
    current.label_ = std::move(label);
    return current;
}

/// A generating set with few elements, found greedily (largest order first).
inline std::vector<GMat> small_generating_set(const GenGroup& g) {
    return GenGroup::from_elements(g.modulus(), g.element_codes()).generators();
}

inline GenGroup full_group_of(int n);

enum class StandardKind {
    Full,
    SL2,
    Borel,
    SplitCartan,
    SplitCartanNormalizer,
    NonsplitCartan,
    NonsplitCartanNormalizer
};

inline std::string to_string(StandardKind k) {
    switch (k) {
        case StandardKind::Full: return "full";
        case StandardKind::SL2: return "sl2";
        case StandardKind::Borel: return "borel";
        case StandardKind::SplitCartan: return "split-cartan";
        case StandardKind::SplitCartanNormalizer: return "split-cartan-normalizer";
        case StandardKind::NonsplitCartan: return "nonsplit-cartan";
        case StandardKind::NonsplitCartanNormalizer: return "nonsplit-cartan-normalizer";
    }
    return "?";
}

inline std::optional<StandardKind> parse_standard_kind(const std::string& s) {
    for (auto k : {StandardKind::Full, StandardKind::SL2, StandardKind::Borel, StandardKind::SplitCartan,
                   StandardKind::SplitCartanNormalizer, StandardKind::NonsplitCartan,
                   StandardKind::NonsplitCartanNormalizer})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

namespace detail {

/// Units mod n that generate (Z/nZ)^x, picked greedily.
inline std::vector<int> unit_generators(int n) {
    std::vector<int> gens;
    std::vector<bool> reached(static_cast<std::size_t>(n), false);
    reached[1 % n] = true;
    for (int u : units_mod(n)) {
        if (reached[static_cast<std::size_t>(u)]) continue;
        gens.push_back(u);
        // Saturate under multiplication by all generators.
        std::vector<int> frontier;
        for (int i = 0; i < n; ++i)
            if (reached[static_cast<std::size_t>(i)]) frontier.push_back(i);
        while (!frontier.empty()) {
            int x = frontier.back();
            frontier.pop_back();
            for (int g : gens) {
                int y = static_cast<int>(static_cast<long long>(x) * g % n);
                if (!reached[static_cast<std::size_t>(y)]) {
                    reached[static_cast<std::size_t>(y)] = true;
                    frontier.push_back(y);
                }
            }
        }
    }
    return gens;
}

inline int prime_power_base(int n) {
    auto ps = prime_divisors(n);
    if (ps.size() != 1) return 0;
    return ps.front();
}

}  // namespace detail

/// The named standard subgroup at level n. `phi` is required for the
/// non-split kinds and must be a non-residue mod p where n = p^k, p odd.
inline GenGroup standard_subgroup(StandardKind kind, int n, std::optional<int> phi = std::nullopt) {
    detail::check_modulus(n);
    const GMat upper(1, 1, 0, 1, n);
    const GMat lower(1, 0, 1, 1, n);
    std::vector<GMat> gens;
    auto add_diagonals = [&] {
        for (int u : detail::unit_generators(n)) {
            gens.push_back(diag(u, 1, n));
            gens.push_back(diag(1, u, n));
        }
    };
    const bool cartan = kind == StandardKind::SplitCartan || kind == StandardKind::SplitCartanNormalizer ||
                        kind == StandardKind::NonsplitCartan || kind == StandardKind::NonsplitCartanNormalizer;
    int p = detail::prime_power_base(n);
    if (cartan && (p == 0 || p == 2))
        throw std::invalid_argument("Cartan subgroups need an odd prime power level, got " + std::to_string(n));

    switch (kind) {
        case StandardKind::Full:
            gens = {upper, lower};
            for (int u : detail::unit_generators(n)) gens.push_back(diag(u, 1, n));
            break;
        case StandardKind::SL2: gens = {upper, lower}; break;
        case StandardKind::Borel:
            add_diagonals();
            gens.push_back(upper);
            break;
        case StandardKind::SplitCartan: add_diagonals(); break;
        case StandardKind::SplitCartanNormalizer:
            add_diagonals();
            gens.push_back(swap_matrix(n));
            break;
        case StandardKind::NonsplitCartan:
        case StandardKind::NonsplitCartanNormalizer: {
            if (!phi) throw std::invalid_argument("non-split Cartan needs a non-residue phi");
            for (int y = 0; y < p; ++y)
                if (detail::reduce(static_cast<long long>(y) * y - *phi, p) == 0)
                    throw std::invalid_argument("phi = " + std::to_string(*phi) + " is not a non-residue mod " +
                                                std::to_string(p));
            // C_ns(n): a^2 - phi b^2 a unit. Build from its element set.
            std::vector<std::uint32_t> codes;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    GMat m = nonsplit_element(a, b, *phi, n);
                    if (m.is_invertible()) codes.push_back(m.code());
                }
            gens = GenGroup::from_elements(n, std::move(codes)).generators();
            if (kind == StandardKind::NonsplitCartanNormalizer) gens.push_back(conj_matrix(n));
            break;
        }
    }
    std::string label = to_string(kind) + "(" + std::to_string(n) + ")";
    return closure(gens, n, label);
}

inline GenGroup full_group_of(int n) { return standard_subgroup(StandardKind::Full, n); }

inline bool contains_minus_identity(const GenGroup& g) {
    return g.contains(GMat::minus_identity(g.modulus()));
}

/// {det g : g in G}, sorted.
inline std::vector<int> det_image(const GenGroup& g) {
    std::set<int> dets;
    for (const auto& m : g.elements()) dets.insert(m.det().value());
    return {dets.begin(), dets.end()};
}

/// Applicability: proper, contains -I, surjective det, and an element of
/// trace 0 and det -1 fixing a vector of exact order n.
struct Applicability {
    bool applicable;
    std::string reason;
};

inline Applicability is_applicable(const GenGroup& g) {
    const int n = g.modulus();
    if (static_cast<long long>(g.order()) == gl2_order(n)) return {false, "not proper"};
    if (!contains_minus_identity(g)) return {false, "does not contain -I"};
    if (det_image(g) != units_mod(n)) return {false, "det not surjective"};
    const auto vecs = exact_order_vectors(n);
    for (const auto& m : g.elements()) {
        if (m.trace().value() != 0 || m.det().value() != n - 1) continue;
        for (const auto& v : vecs)
            if (m.apply(v) == v) return {true, "applicable"};
    }
    return {false, "no trace-0 det-(-1) element fixing a vector of exact order n"};
}

inline GenGroup reduce_level(const GenGroup& g, int m) {
    if (m < 2 || g.modulus() % m != 0)
        throw std::invalid_argument(std::to_string(m) + " does not divide level " + std::to_string(g.modulus()));
    std::vector<GMat> gens;
    for (const auto& x : g.generators()) gens.push_back(x.reduced(m));
    std::string label = g.label().empty() ? std::string{} : g.label() + " mod " + std::to_string(m);
    return closure(gens, m, label);
}

/// x G x^{-1}.
inline GenGroup conjugate_by(const GenGroup& g, const GMat& x) {
    const GMat xi = mat_inverse(x);
    std::vector<GMat> gens;
    for (const auto& h : g.generators()) gens.push_back(x * h * xi);
    return closure(gens, g.modulus(), g.label());
}

/// Canonical key of the cyclic subgroup <v>: smallest code among u*v, u a unit.
inline std::uint32_t line_key(const TorVec& v) {
    std::uint32_t best = v.code();
    for (int u : units_mod(v.modulus())) best = std::min(best, v.scaled(u).code());
    return best;
}

/// Number of cyclic subgroups <v> of order n with G<v> = <v>.
inline int stable_lines(const GenGroup& g) {
    std::set<std::uint32_t> seen;
    int count = 0;
    for (const auto& v : exact_order_vectors(g.modulus())) {
        auto key = line_key(v);
        if (!seen.insert(key).second) continue;
        bool stable = true;
        for (const auto& m : g.generators()) {
            if (line_key(m.apply(v)) != key) {
                stable = false;
                break;
            }
        }
        if (stable) ++count;
    }
    return count;
}

/// Multiset of element orders, as order -> count.
inline std::map<int, int> order_statistics(const GenGroup& g) {
    std::map<int, int> stats;
    for (const auto& m : g.elements()) ++stats[element_order(m)];
    return stats;
}

/// Set of (trace, det) pairs of elements of G.
inline std::set<std::pair<int, int>> trace_det_classes(const GenGroup& g) {
    std::set<std::pair<int, int>> out;
    for (const auto& m : g.elements()) out.emplace(m.trace().value(), m.det().value());
    return out;
}

/// <G, -I>.
inline GenGroup with_minus_identity(const GenGroup& g) {
    if (contains_minus_identity(g)) return g;
    auto gens = g.generators();
    gens.push_back(GMat::minus_identity(g.modulus()));
    return closure(gens, g.modulus(), g.label().empty() ? std::string{} : "<" + g.label() + ",-I>");
}

}  // namespace galtors
