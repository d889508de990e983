#pragma once

// Sparse polynomials over Q in one variable (UniPoly) and two (BiPoly).

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigrat.hpp"

namespace galtors {

namespace detail {

inline void append_term(std::ostringstream& os, bool first, const BigRat& c, const std::string& mono) {
    BigRat mag = abs(c);
    if (first)
        os << (sgn(c) < 0 ? "-" : "");
    else
        os << (sgn(c) < 0 ? " - " : " + ");
    if (mono.empty()) {
        os << mag.get_str();
    } else {
        if (mag != 1) os << mag.get_str() << '*';
        os << mono;
    }
}

inline std::string power_str(const std::string& var, unsigned k) {
    if (k == 0) return {};
    if (k == 1) return var;
    return var + "^" + std::to_string(k);
}

}  // namespace detail

class UniPoly {
public:
    using Terms = std::map<unsigned, BigRat>;

    UniPoly() = default;
    UniPoly(const BigRat& c) { set(0, c); }  // NOLINT(google-explicit-constructor)
    UniPoly(long c) : UniPoly(BigRat(c)) {}   // NOLINT(google-explicit-constructor)

    static UniPoly monomial(const BigRat& c, unsigned k) {
        UniPoly p;
        p.set(k, c);
        return p;
    }
    static UniPoly x() { return monomial(1, 1); }
    /// Coefficients in ascending degree order.
    static UniPoly from_coeffs(const std::vector<BigRat>& ascending) {
        UniPoly p;
        for (std::size_t k = 0; k < ascending.size(); ++k) p.set(static_cast<unsigned>(k), ascending[k]);
        return p;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first); }
    unsigned low_degree() const noexcept { return terms_.empty() ? 0 : terms_.begin()->first; }
    BigRat coeff(unsigned k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? BigRat(0) : it->second;
    }
    BigRat lead() const { return terms_.empty() ? BigRat(0) : terms_.rbegin()->second; }
    const Terms& terms() const noexcept { return terms_; }

    void set(unsigned k, const BigRat& c) {
        if (c == 0)
            terms_.erase(k);
        else
            terms_[k] = c;
    }
    void add_to(unsigned k, const BigRat& c) { set(k, coeff(k) + c); }

    BigRat eval(const BigRat& x) const {
        BigRat acc = 0;
        int d = degree();
        for (int k = d; k >= 0; --k) acc = acc * x + coeff(static_cast<unsigned>(k));
        return acc;
    }

    UniPoly derivative() const {
        UniPoly out;
        for (const auto& [k, c] : terms_)
            if (k > 0) out.set(k - 1, c * k);
        return out;
    }

    UniPoly operator-() const {
        UniPoly out = *this;
        for (auto& [k, c] : out.terms_) c = -c;
        return out;
    }
    UniPoly& operator+=(const UniPoly& o) {
        for (const auto& [k, c] : o.terms_) add_to(k, c);
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        for (const auto& [k, c] : o.terms_) add_to(k, -c);
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        UniPoly out;
        for (const auto& [i, x] : a.terms_)
            for (const auto& [j, y] : b.terms_) out.add_to(i + j, x * y);
        return out;
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string to_string(const std::string& var = "x") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            detail::append_term(os, first, it->second, detail::power_str(var, it->first));
            first = false;
        }
        return os.str();
    }

private:
    Terms terms_;
};

inline UniPoly pow(const UniPoly& base, unsigned e) {
    UniPoly r(1), b = base;
    while (e > 0) {
        if (e & 1U) r *= b;
        e >>= 1U;
        if (e) b *= b;
    }
    return r;
}

/// Euclidean division over Q: a = q b + r with deg r < deg b.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    UniPoly q, r = a;
    const int db = b.degree();
    const BigRat lb = b.lead();
    while (!r.is_zero() && r.degree() >= db) {
        const unsigned shift = static_cast<unsigned>(r.degree() - db);
        const BigRat c = r.lead() / lb;
        q.set(shift, c);
        r -= UniPoly::monomial(c, shift) * b;
    }
    return {q, r};
}

/// Quotient a / b, which must be exact.
inline UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

inline UniPoly monic(const UniPoly& p) {
    if (p.is_zero()) return p;
    UniPoly out;
    const BigRat l = p.lead();
    for (const auto& [k, c] : p.terms()) out.set(k, c / l);
    return out;
}

/// Monic gcd (0 when both are 0).
inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// p = content * primitive with primitive integral, coprime coefficients and
/// positive leading coefficient.
inline BigRat content(const UniPoly& p) {
    if (p.is_zero()) return 0;
    BigInt g = 0, l = 1;
    for (const auto& [k, c] : p.terms()) {
        g = gcd(g, BigInt(c.get_num()));
        l = lcm(l, BigInt(c.get_den()));
    }
    BigRat out = make_rat(g, l);
    return sgn(p.lead()) < 0 ? BigRat(-out) : out;
}

inline UniPoly primitive_part(const UniPoly& p) {
    if (p.is_zero()) return p;
    const BigRat c = content(p);
    UniPoly out;
    for (const auto& [k, v] : p.terms()) out.set(k, v / c);
    return out;
}

/// Integer coefficients of the primitive part, ascending, length deg+1.
inline std::vector<BigInt> integer_coeffs(const UniPoly& p) {
    UniPoly q = primitive_part(p);
    std::vector<BigInt> out(static_cast<std::size_t>(std::max(q.degree(), 0) + 1), BigInt(0));
    for (const auto& [k, c] : q.terms()) out[k] = c.get_num();
    return out;
}

/// p(q(x)).
inline UniPoly compose(const UniPoly& p, const UniPoly& q) {
    UniPoly acc;
    for (int k = p.degree(); k >= 0; --k) acc = acc * q + UniPoly(p.coeff(static_cast<unsigned>(k)));
    return acc;
}

/// The two variables of a BiPoly, in storage order.
enum class Var { First, Second };

inline Var other(Var v) { return v == Var::First ? Var::Second : Var::First; }

class BiPoly {
public:
    using Key = std::pair<unsigned, unsigned>;
    using Terms = std::map<Key, BigRat>;

    BiPoly() = default;
    BiPoly(const BigRat& c) { set(0, 0, c); }  // NOLINT(google-explicit-constructor)
    BiPoly(long c) : BiPoly(BigRat(c)) {}       // NOLINT(google-explicit-constructor)

    static BiPoly monomial(const BigRat& c, unsigned i, unsigned j) {
        BiPoly p;
        p.set(i, j, c);
        return p;
    }
    static BiPoly var(Var v) { return v == Var::First ? monomial(1, 1, 0) : monomial(1, 0, 1); }
    /// Embeds a univariate polynomial in variable v.
    static BiPoly from_uni(const UniPoly& p, Var v) {
        BiPoly out;
        for (const auto& [k, c] : p.terms()) {
            if (v == Var::First)
                out.set(k, 0, c);
            else
                out.set(0, k, c);
        }
        return out;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    const Terms& terms() const noexcept { return terms_; }
    BigRat coeff(unsigned i, unsigned j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? BigRat(0) : it->second;
    }
    void set(unsigned i, unsigned j, const BigRat& c) {
        if (c == 0)
            terms_.erase({i, j});
        else
            terms_[{i, j}] = c;
    }
    void add_to(unsigned i, unsigned j, const BigRat& c) { set(i, j, coeff(i, j) + c); }

    /// Degree in v; -1 for the zero polynomial.
    int degree_in(Var v) const {
        int d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>(v == Var::First ? k.first : k.second));
        return d;
    }

    BigRat eval(const BigRat& s, const BigRat& t) const {
        BigRat acc = 0;
        auto cs = coeffs_in(Var::Second);
        for (int j = static_cast<int>(cs.size()) - 1; j >= 0; --j) acc = acc * t + cs[static_cast<std::size_t>(j)].eval(s);
        return acc;
    }

    /// Coefficients as a polynomial in v: entry k is the coefficient of v^k,
    /// a polynomial in the other variable.
    std::vector<UniPoly> coeffs_in(Var v) const {
        std::vector<UniPoly> out(static_cast<std::size_t>(degree_in(v) + 1));
        for (const auto& [k, c] : terms_) {
            const unsigned pv = v == Var::First ? k.first : k.second;
            const unsigned po = v == Var::First ? k.second : k.first;
            out[pv].set(po, c);
        }
        return out;
    }

    /// Substitutes value for v, leaving a polynomial in the other variable.
    UniPoly specialize(Var v, const BigRat& value) const {
        UniPoly out;
        const auto cs = coeffs_in(other(v));
        for (std::size_t k = 0; k < cs.size(); ++k) out.set(static_cast<unsigned>(k), cs[k].eval(value));
        return out;
    }

    BiPoly partial(Var v) const {
        BiPoly out;
        for (const auto& [k, c] : terms_) {
            if (v == Var::First && k.first > 0) out.set(k.first - 1, k.second, c * k.first);
            if (v == Var::Second && k.second > 0) out.set(k.first, k.second - 1, c * k.second);
        }
        return out;
    }

    BiPoly operator-() const {
        BiPoly out = *this;
        for (auto& [k, c] : out.terms_) c = -c;
        return out;
    }
    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [k, c] : o.terms_) add_to(k.first, k.second, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [k, c] : o.terms_) add_to(k.first, k.second, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly out;
        for (const auto& [i, x] : a.terms_)
            for (const auto& [j, y] : b.terms_) out.add_to(i.first + j.first, i.second + j.second, x * y);
        return out;
    }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    std::string to_string(const std::string& first = "s", const std::string& second = "t") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool lead = true;
        // Descending total degree, then descending in the first variable.
        std::vector<std::pair<Key, BigRat>> sorted(terms_.begin(), terms_.end());
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            auto da = a.first.first + a.first.second, db = b.first.first + b.first.second;
            return da != db ? da > db : a.first.first > b.first.first;
        });
        for (const auto& [k, c] : sorted) {
            std::string mono = detail::power_str(first, k.first);
            std::string m2 = detail::power_str(second, k.second);
            if (!mono.empty() && !m2.empty()) mono += "*";
            mono += m2;
            detail::append_term(os, lead, c, mono);
            lead = false;
        }
        return os.str();
    }

private:
    Terms terms_;
};

inline BiPoly pow(const BiPoly& base, unsigned e) {
    BiPoly r(1), b = base;
    while (e > 0) {
        if (e & 1U) r = r * b;
        e >>= 1U;
        if (e) b = b * b;
    }
    return r;
}

inline BigRat content(const BiPoly& p) {
    if (p.is_zero()) return 0;
    BigInt g = 0, l = 1;
    for (const auto& [k, c] : p.terms()) {
        g = gcd(g, BigInt(c.get_num()));
        l = lcm(l, BigInt(c.get_den()));
    }
    // Sign fixed by the term that sorts last (highest first-variable power).
    BigRat out = make_rat(g, l);
    return sgn(p.terms().rbegin()->second) < 0 ? BigRat(-out) : out;
}

inline BiPoly primitive_part(const BiPoly& p) {
    if (p.is_zero()) return p;
    const BigRat c = content(p);
    BiPoly out;
    for (const auto& [k, v] : p.terms()) out.set(k.first, k.second, v / c);
    return out;
}

/// f / g when g divides f exactly, by division on leading terms in the
/// lexicographic order with s before t; nullopt otherwise.
inline std::optional<BiPoly> divide_exact(BiPoly f, const BiPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    const auto [gi, gj] = g.terms().rbegin()->first;
    const BigRat glead = g.terms().rbegin()->second;
    BiPoly q;
    while (!f.is_zero()) {
        const auto [fi, fj] = f.terms().rbegin()->first;
        if (fi < gi || fj < gj) return std::nullopt;
        const BiPoly term = BiPoly::monomial(f.terms().rbegin()->second / glead, fi - gi, fj - gj);
        q += term;
        f -= term * g;
    }
    return q;
}

}  // namespace galtors
