#pragma once

// Orbits and stabilizers of GenGroup actions on (Z/nZ)^2, and the subgroup
// searches over level-9 groups: index-3 subgroups fixing a vector of exact
// order 9, and -I-complements whose point stabilizers have index 6.

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <vector>

#include "group.hpp"
#include "parallel.hpp"

namespace galtors {

struct OrbitRecord {
    TorVec base;
    std::vector<TorVec> orbit;  // sorted
    GenGroup stabilizer;
};

/// Orbit of v under G (left action g.v), in code order.
inline std::vector<TorVec> orbit_of(const GenGroup& g, const TorVec& v) {
    if (v.modulus() != g.modulus()) throw ModulusMismatch(g.modulus(), v.modulus());
    const int n = g.modulus();
    std::vector<bool> seen(static_cast<std::size_t>(n * n), false);
    std::vector<TorVec> frontier{v};
    seen[v.code()] = true;
    std::vector<TorVec> orbit{v};
    while (!frontier.empty()) {
        TorVec w = frontier.back();
        frontier.pop_back();
        for (const auto& m : g.generators()) {
            TorVec u = m.apply(w);
            if (!seen[u.code()]) {
                seen[u.code()] = true;
                orbit.push_back(u);
                frontier.push_back(u);
            }
        }
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

inline OrbitRecord orbit_stabilizer(const GenGroup& g, const TorVec& v) {
    auto orbit = orbit_of(g, v);
    std::vector<std::uint32_t> stab;
    for (auto code : g.element_codes())
        if (GMat::from_code(code, g.modulus()).apply(v) == v) stab.push_back(code);
    return {v, std::move(orbit), GenGroup::from_elements(g.modulus(), std::move(stab))};
}

/// Whether every generator of G fixes v.
inline bool fixes_pointwise(const GenGroup& g, const TorVec& v) {
    for (const auto& m : g.generators())
        if (!(m.apply(v) == v)) return false;
    return true;
}

namespace detail {

using Perm = std::array<std::uint8_t, 4>;

inline std::vector<Perm> symmetric_group(int k) {
    Perm p{0, 1, 2, 3};
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + k));
    return out;
}

inline Perm compose(const Perm& a, const Perm& b, int k) {  // a after b
    Perm r{0, 1, 2, 3};
    for (int i = 0; i < k; ++i) r[static_cast<std::size_t>(i)] = a[b[static_cast<std::size_t>(i)]];
    return r;
}

inline bool is_identity_perm(const Perm& a, int k) {
    for (int i = 0; i < k; ++i)
        if (a[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

inline int perm_order(const Perm& a, int k) {
    Perm p = a;
    int ord = 1;
    while (!is_identity_perm(p, k)) {
        p = compose(a, p, k);
        ++ord;
    }
    return ord;
}

}  // namespace detail

/// All subgroups of index k (2 <= k <= 4) of G. Each arises as the point
/// stabilizer of a transitive action of G on k points, so we enumerate
/// homomorphisms G -> S_k on a small generating set and keep the transitive
/// ones.
inline std::vector<GenGroup> subgroups_of_index(const GenGroup& g, int k) {
    if (k < 2 || k > 4) throw std::invalid_argument("subgroups_of_index supports 2 <= k <= 4");
    std::vector<GenGroup> out;
    if (g.order() % static_cast<std::size_t>(k) != 0) return out;

    const int n = g.modulus();
    const auto gens = small_generating_set(g);
    const auto perms = detail::symmetric_group(k);
    const auto elems = g.elements();

    // Images must have order dividing the generator's order.
    std::vector<std::vector<std::size_t>> options(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const int ord = element_order(gens[i]);
        for (std::size_t j = 0; j < perms.size(); ++j)
            if (ord % detail::perm_order(perms[j], k) == 0) options[i].push_back(j);
    }

    std::vector<std::vector<std::size_t>> mult(gens.size(), std::vector<std::size_t>(elems.size()));
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t e = 0; e < elems.size(); ++e)
            mult[i][e] = static_cast<std::size_t>(g.index_of((gens[i] * elems[e]).code()));
    const auto identity_index = static_cast<std::size_t>(g.index_of(GMat::identity(n).code()));

    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::size_t> choice(gens.size(), 0);
    std::vector<int> label(elems.size());
    while (true) {
        // Try the assignment gens[i] -> perms[options[i][choice[i]]].
        std::vector<detail::Perm> images(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) images[i] = perms[options[i][choice[i]]];

        std::fill(label.begin(), label.end(), -1);
        std::vector<detail::Perm> value(elems.size());
        label[identity_index] = 0;
        value[identity_index] = detail::Perm{0, 1, 2, 3};
        std::vector<std::size_t> frontier{identity_index};
        bool consistent = true;
        while (!frontier.empty() && consistent) {
            std::size_t x = frontier.back();
            frontier.pop_back();
            for (std::size_t i = 0; i < gens.size(); ++i) {
                std::size_t y = mult[i][x];
                detail::Perm py = detail::compose(images[i], value[x], k);
                if (label[y] < 0) {
                    label[y] = 0;
                    value[y] = py;
                    frontier.push_back(y);
                } else if (value[y] != py) {
                    consistent = false;
                    break;
                }
            }
        }
        if (consistent) {
            // Transitivity: orbit of point 0 under the image.
            std::vector<bool> reached(static_cast<std::size_t>(k), false);
            reached[0] = true;
            for (bool grew = true; grew;) {
                grew = false;
                for (const auto& im : images)
                    for (int p = 0; p < k; ++p)
                        if (reached[static_cast<std::size_t>(p)] && !reached[im[static_cast<std::size_t>(p)]]) {
                            reached[im[static_cast<std::size_t>(p)]] = true;
                            grew = true;
                        }
            }
            if (std::all_of(reached.begin(), reached.end(), [](bool b) { return b; })) {
                std::vector<std::uint32_t> stab;
                for (std::size_t e = 0; e < elems.size(); ++e)
                    if (value[e][0] == 0) stab.push_back(g.element_codes()[e]);
                if (seen.insert(stab).second) out.push_back(GenGroup::from_elements(n, stab));
            }
        }

        std::size_t i = 0;
        while (i < gens.size() && ++choice[i] == options[i].size()) choice[i++] = 0;
        if (i == gens.size()) break;
    }
    std::sort(out.begin(), out.end(),
              [](const GenGroup& a, const GenGroup& b) { return a.element_codes() < b.element_codes(); });
    return out;
}

/// Index-2 subgroups H' of H with <H', -I> = H, i.e. those missing -I.
inline std::vector<GenGroup> minus_one_complements(const GenGroup& h) {
    if (!contains_minus_identity(h)) throw std::invalid_argument("minus_one_complements: -I is not in H");
    std::vector<GenGroup> out;
    for (auto& k : subgroups_of_index(h, 2))
        if (!contains_minus_identity(k)) out.push_back(std::move(k));
    return out;
}

inline void require_level9(const GenGroup& g) {
    if (g.modulus() != 9) throw std::invalid_argument("expected a level-9 group, got level " + std::to_string(g.modulus()));
}

/// Index-3 subgroups of G fixing pointwise some vector of exact order 9.
inline std::vector<GenGroup> index3_fixing_subgroups(const GenGroup& g) {
    require_level9(g);
    const auto vecs = exact_order_vectors(9);
    std::vector<GenGroup> out;
    for (auto& s : subgroups_of_index(g, 3)) {
        for (const auto& v : vecs) {
            if (fixes_pointwise(s, v)) {
                out.push_back(std::move(s));
                break;
            }
        }
    }
    return out;
}

/// Smallest element-code list among the G-conjugates of S.
inline std::vector<std::uint32_t> conjugacy_key(const GenGroup& s, const GenGroup& g) {
    std::vector<std::uint32_t> best = s.element_codes();
    const auto elems = s.elements();
    std::vector<std::uint32_t> codes(elems.size());
    for (const auto& x : g.elements()) {
        const GMat xi = mat_inverse(x);
        for (std::size_t i = 0; i < elems.size(); ++i) codes[i] = (x * elems[i] * xi).code();
        std::sort(codes.begin(), codes.end());
        if (codes < best) best = codes;
    }
    return best;
}

/// Number of G-conjugacy classes of index-3 subgroups fixing a vector of
/// exact order 9.
inline int index3_fixing_count(const GenGroup& g) {
    std::set<std::vector<std::uint32_t>> classes;
    for (const auto& s : index3_fixing_subgroups(g)) classes.insert(conjugacy_key(s, g));
    return static_cast<int>(classes.size());
}

struct ComplementWitness {
    GenGroup subgroup;      // H itself or an index-2 -I-complement
    bool is_whole_group;    // subgroup == H
    TorVec vector;          // exact order 9
    std::size_t stabilizer_index;
};

/// Candidates H' (H itself and its -I-complements) with a vector v of exact
/// order 9 whose stabilizer has index 6, i.e. |H' v| = 6.
inline std::vector<ComplementWitness> index6_complement_search(const GenGroup& h) {
    require_level9(h);
    if (!contains_minus_identity(h)) throw std::invalid_argument("index6_complement_search: -I is not in H");
    std::vector<GenGroup> candidates{h};
    for (auto& c : minus_one_complements(h)) candidates.push_back(std::move(c));

    const auto vecs = exact_order_vectors(9);
    std::vector<std::vector<ComplementWitness>> per_candidate(candidates.size());
    parallel_for(candidates.size(), [&](std::size_t i) {
        std::vector<bool> done(81, false);
        for (const auto& v : vecs) {
            if (done[v.code()]) continue;
            auto orbit = orbit_of(candidates[i], v);
            for (const auto& w : orbit) done[w.code()] = true;
            if (orbit.size() != 6) continue;
            for (const auto& w : orbit)
                if (vector_exact_order(w) == 9) per_candidate[i].push_back({candidates[i], i == 0, w, 6});
        }
        std::sort(per_candidate[i].begin(), per_candidate[i].end(),
                  [](const ComplementWitness& a, const ComplementWitness& b) { return a.vector < b.vector; });
    });

    std::vector<ComplementWitness> out;
    for (auto& ws : per_candidate)
        for (auto& w : ws) out.push_back(std::move(w));
    return out;
}

/// Re-checks a witness against H by direct multiplication.
inline bool verify_witness(const GenGroup& h, const ComplementWitness& w) {
    const auto& sub = w.subgroup;
    if (!sub.is_subgroup_of(h)) return false;
    if (!(with_minus_identity(sub) == h)) return false;
    if (!w.is_whole_group && sub.order() * 2 != h.order()) return false;
    if (vector_exact_order(w.vector) != 9) return false;
    std::size_t fixed = 0;
    for (const auto& m : sub.elements())
        if (m.apply(w.vector) == w.vector) ++fixed;
    return fixed * w.stabilizer_index == sub.order() && w.stabilizer_index == 6;
}

}  // namespace galtors
