#pragma once

// j-maps of the modular curves in play and the plane curves j_A(s) = j_B(t).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "poly.hpp"

namespace galtors {

struct JMap {
    std::string label;
    UniPoly num;
    UniPoly den;
};

inline JMap make_jmap(std::string label, UniPoly num, UniPoly den) {
    if (den.is_zero()) throw std::invalid_argument("j-map " + label + " has zero denominator");
    if (gcd(num, den).degree() > 0) throw std::invalid_argument("j-map " + label + " is not in lowest terms");
    return {std::move(label), std::move(num), std::move(den)};
}

namespace detail {

inline UniPoly lin(long a) { return UniPoly::x() + UniPoly(a); }
inline UniPoly poly(std::initializer_list<long> descending) {
    UniPoly p;
    unsigned k = static_cast<unsigned>(descending.size());
    for (long c : descending) p.set(--k, c);
    return p;
}

}  // namespace detail

inline std::vector<std::string> jmap_labels() { return {"2B", "3Cs.1.1", "9B0-9a", "9H0-9b", "no9isog", "Et"}; }

/// The j-map for a label in jmap_labels(); throws std::out_of_range otherwise.
inline JMap named_jmap(std::string label) {
    using detail::lin;
    using detail::poly;
    const std::string sup0 = "⁰";
    for (auto pos = label.find(sup0); pos != std::string::npos; pos = label.find(sup0))
        label.replace(pos, sup0.size(), "0");
    const UniPoly x = UniPoly::x();

    if (label == "2B") return make_jmap(label, UniPoly(256) * pow(lin(1), 3), x);
    if (label == "3Cs.1.1")
        return make_jmap(label, UniPoly(27) * pow(lin(1), 3) * pow(lin(3), 3) * pow(poly({1, 0, 3}), 3),
                         pow(x, 3) * pow(poly({1, 3, 3}), 3));
    if (label == "9B0-9a")
        return make_jmap(label, pow(lin(3), 3) * pow(poly({1, 9, 27, 3}), 3), x * poly({1, 9, 27}));
    if (label == "9H0-9b")
        return make_jmap(label,
                         pow(poly({1, -3, -9, 3}), 3) * pow(poly({1, 9, -9, -9}), 3) *
                             pow(poly({1, -18, 171, 180, -297, -162, 189}), 3),
                         UniPoly(8) * pow(poly({1, 0, -1}), 3) * pow(poly({1, 0, 3}), 9) *
                             pow(poly({1, -9, -9, 9}), 3));
    if (label == "no9isog") return make_jmap(label, lin(3) * poly({1, -3, 9}) * pow(poly({1, 0, 0, 3}), 3), pow(x, 3));
    if (label == "Et") return make_jmap(label, pow(x, 3) * pow(poly({1, 0, 0, -24}), 3), poly({1, 0, 0, -27}));
    throw std::out_of_range("unknown j-map label: " + label);
}

/// j(x), or nullopt at a pole.
inline std::optional<BigRat> jmap_eval(const JMap& m, const BigRat& x) {
    const BigRat d = m.den.eval(x);
    if (d == 0) return std::nullopt;
    return m.num.eval(x) / d;
}

/// F(s, t) = 0 with F the content-free numerator of a(s) - b(t). Its zero
/// set is the finite fiber product plus pairs where both sides have a pole.
/// Curves entered as equations carry no j-maps.
struct PlaneCurve {
    BiPoly f;
    std::optional<JMap> a;  // in the first variable s
    std::optional<JMap> b;  // in the second variable t

    std::string describe() const {
        if (a && b) return "j_" + a->label + "(s) = j_" + b->label + "(t)";
        return f.to_string() + " = 0";
    }
};

inline PlaneCurve fiber_curve(const JMap& a, const JMap& b) {
    const BiPoly f = BiPoly::from_uni(a.num, Var::First) * BiPoly::from_uni(b.den, Var::Second) -
                     BiPoly::from_uni(b.num, Var::Second) * BiPoly::from_uni(a.den, Var::First);
    return {primitive_part(f), a, b};
}

inline PlaneCurve plane_curve(const BiPoly& f) { return {primitive_part(f), std::nullopt, std::nullopt}; }

}  // namespace galtors
