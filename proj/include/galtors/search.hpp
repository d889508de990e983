#pragma once

// Bounded-height rational point searches. Every result is re-checked with
// plain rational arithmetic before it is returned; the searches give
// evidence, never a complete list.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "cm.hpp"
#include "jmap.hpp"
#include "parallel.hpp"
#include "poly.hpp"

namespace galtors {

struct PlanePoint {
    BigRat s, t;
    friend bool operator==(const PlanePoint& a, const PlanePoint& b) { return a.s == b.s && a.t == b.t; }
    friend bool operator<(const PlanePoint& a, const PlanePoint& b) {
        return a.s != b.s ? a.s < b.s : a.t < b.t;
    }
};

namespace detail {

using u64 = unsigned long;
using u128 = unsigned __int128;

inline const std::vector<u64>& filter_primes() {
    static const std::vector<u64> primes = [] {
        std::vector<u64> out;
        BigInt p = (BigInt(1) << 61) - 1;  // Mersenne prime
        out.push_back(p.get_ui());
        BigInt q;
        BigInt start = BigInt(1) << 61;
        mpz_nextprime(q.get_mpz_t(), start.get_mpz_t());
        out.push_back(q.get_ui());
        return out;
    }();
    return primes;
}

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 reduce(const BigInt& x, u64 m) {
    BigInt r = x % BigInt(m);
    if (r < 0) r += BigInt(m);
    return r.get_ui();
}

/// p^k q^(d-k) mod m for k = 0..d.
inline std::vector<u64> homogeneous_powers(const BigRat& v, unsigned d, u64 m) {
    const u64 p = reduce(v.get_num(), m), q = reduce(v.get_den(), m);
    std::vector<u64> pp(d + 1, 1), qq(d + 1, 1), out(d + 1);
    for (unsigned k = 1; k <= d; ++k) {
        pp[k] = mulmod(pp[k - 1], p, m);
        qq[k] = mulmod(qq[k - 1], q, m);
    }
    for (unsigned k = 0; k <= d; ++k) out[k] = mulmod(pp[k], qq[d - k], m);
    return out;
}

/// q_s^ds q_t^dt F(s, t) over the integers.
inline BigInt homogeneous_value(const BiPoly& f, unsigned ds, unsigned dt, const BigRat& s, const BigRat& t) {
    BigInt acc = 0, tmp;
    for (const auto& [k, c] : f.terms()) {
        BigInt term = c.get_num();
        BigInt a, b, d, e;
        mpz_pow_ui(a.get_mpz_t(), s.get_num_mpz_t(), k.first);
        mpz_pow_ui(b.get_mpz_t(), s.get_den_mpz_t(), ds - k.first);
        mpz_pow_ui(d.get_mpz_t(), t.get_num_mpz_t(), k.second);
        mpz_pow_ui(e.get_mpz_t(), t.get_den_mpz_t(), dt - k.second);
        acc += term * a * b * d * e;
    }
    return acc;
}

}  // namespace detail

/// All (s, t) on F = 0 with s, t on the Farey grid of height h, ascending.
/// Candidates are screened modulo two 61-bit primes, confirmed with a
/// cleared-denominator integer evaluation, then re-evaluated over Q.
inline std::vector<PlanePoint> search_plane(const PlaneCurve& curve, long h, unsigned workers = 0) {
    const auto grid = farey_values(h);
    const BiPoly& f = curve.f;
    for (const auto& [k, c] : f.terms())
        if (c.get_den() != 1) throw std::invalid_argument("plane curve must have integer coefficients");
    if (f.is_zero()) {
        std::vector<PlanePoint> all;
        for (const auto& s : grid)
            for (const auto& t : grid) all.push_back({s, t});
        return all;
    }
    const unsigned ds = static_cast<unsigned>(std::max(0, f.degree_in(Var::First)));
    const unsigned dt = static_cast<unsigned>(std::max(0, f.degree_in(Var::Second)));
    const auto& primes = detail::filter_primes();
    const std::size_t np = primes.size(), n = grid.size();

    // coef[p][i][j], spow[p][v][i], tpow[p][v][j]
    std::vector<std::vector<std::vector<detail::u64>>> coef(np), spow(np), tpow(np);
    for (std::size_t p = 0; p < np; ++p) {
        coef[p].assign(ds + 1, std::vector<detail::u64>(dt + 1, 0));
        for (const auto& [k, c] : f.terms()) coef[p][k.first][k.second] = detail::reduce(c.get_num(), primes[p]);
        for (const auto& v : grid) {
            spow[p].push_back(detail::homogeneous_powers(v, ds, primes[p]));
            tpow[p].push_back(detail::homogeneous_powers(v, dt, primes[p]));
        }
    }

    std::vector<std::vector<PlanePoint>> rows(n);
    parallel_for(
        n,
        [&](std::size_t a) {
            std::vector<std::vector<detail::u64>> g(np, std::vector<detail::u64>(dt + 1, 0));
            for (std::size_t p = 0; p < np; ++p) {
                const detail::u64 m = primes[p];
                for (unsigned j = 0; j <= dt; ++j) {
                    detail::u64 acc = 0;
                    for (unsigned i = 0; i <= ds; ++i)
                        if (coef[p][i][j]) acc = (acc + detail::mulmod(coef[p][i][j], spow[p][a][i], m)) % m;
                    g[p][j] = acc;
                }
            }
            for (std::size_t b = 0; b < n; ++b) {
                bool zero = true;
                for (std::size_t p = 0; p < np && zero; ++p) {
                    const detail::u64 m = primes[p];
                    detail::u64 acc = 0;
                    for (unsigned j = 0; j <= dt; ++j) acc = (acc + detail::mulmod(g[p][j], tpow[p][b][j], m)) % m;
                    zero = acc == 0;
                }
                if (!zero) continue;
                if (detail::homogeneous_value(f, ds, dt, grid[a], grid[b]) != 0) continue;
                if (f.eval(grid[a], grid[b]) != 0)
                    throw std::logic_error("search_plane: integer and rational evaluation disagree");
                rows[a].push_back({grid[a], grid[b]});
            }
        },
        workers);

    std::vector<PlanePoint> out;
    for (auto& r : rows) out.insert(out.end(), r.begin(), r.end());
    return out;
}

/// A search hit with its place on the j-line. Points where the j-maps have
/// poles are reported separately from affine j-values.
struct FiberHit {
    PlanePoint point;
    bool on_pole_locus = false;
    std::optional<BigRat> j;
    bool cm = false;
};

inline std::vector<FiberHit> classify_hits(const PlaneCurve& curve, const std::vector<PlanePoint>& points) {
    std::vector<FiberHit> out;
    for (const auto& pt : points) {
        FiberHit hit{pt, false, std::nullopt, false};
        if (curve.a && curve.b) {
            const auto ja = jmap_eval(*curve.a, pt.s), jb = jmap_eval(*curve.b, pt.t);
            if (!ja || !jb) {
                hit.on_pole_locus = true;
            } else {
                if (*ja != *jb) throw std::logic_error("fiber hit with mismatched j-values");
                hit.j = ja;
                hit.cm = is_cm_j(*ja);
            }
        }
        out.push_back(hit);
    }
    return out;
}

/// Points of y^2 + h(x) y = f(x) with x on the Farey grid of height H,
/// ascending in (x, y).
inline std::vector<PlanePoint> search_hyperelliptic(const UniPoly& h, const UniPoly& f, long height) {
    std::vector<PlanePoint> out;
    for (const auto& x : farey_values(height)) {
        const BigRat a = h.eval(x), b = f.eval(x);
        const BigRat disc = a * a + 4 * b;
        BigRat r;
        if (!is_rational_square(disc, &r)) continue;
        for (const BigRat& y : {BigRat((-a - r) / 2), BigRat((-a + r) / 2)}) {
            if (!out.empty() && out.back().s == x && out.back().t == y) continue;
            out.push_back({x, y});
        }
    }
    // Independent check: substitute back into the model.
    const BiPoly y = BiPoly::var(Var::Second);
    const BiPoly model = y * y + BiPoly::from_uni(h, Var::First) * y - BiPoly::from_uni(f, Var::First);
    for (const auto& p : out)
        if (model.eval(p.s, p.t) != 0) throw std::logic_error("search_hyperelliptic returned a non-point");
    return out;
}

/// The genus-2 model y^2 + (x^3 + 1) y = -9 x^3.
inline UniPoly genus2_h() { return UniPoly::monomial(1, 3) + UniPoly(1); }
inline UniPoly genus2_f() { return UniPoly::monomial(-9, 3); }

/// Image of a model point on the two j-map curves it covers: x' on the
/// curve with j = (x'^3 + 27)(x'^3 + 3)^3 / x'^3 and Y on the 2B line.
/// y in {0, -1, -9} are cusps.
struct Genus2Image {
    bool cusp = false;
    BigRat x_prime, y_2b;
    std::optional<BigRat> j;
    bool cm = false;
};

inline Genus2Image genus2_point_image(const BigRat& x, const BigRat& y) {
    Genus2Image img;
    if (y == 0 || y == -1 || y == -9) {
        img.cusp = true;
        return img;
    }
    img.x_prime = -9 * x / y;
    const BigRat y9 = y + 9;
    img.y_2b = -(y + 1) * y9 * y9 * y9 / (16 * y * y * y);
    img.j = jmap_eval(named_jmap("no9isog"), img.x_prime);
    if (!img.j) {
        img.cusp = true;
        return img;
    }
    const auto j2 = jmap_eval(named_jmap("2B"), img.y_2b);
    if (!j2 || *j2 != *img.j) throw std::logic_error("genus-2 model map is inconsistent at this point");
    img.cm = is_cm_j(*img.j);
    return img;
}

enum class DescentCase { BZero, AZero };

inline const char* to_string(DescentCase c) { return c == DescentCase::BZero ? "b=0" : "a=0"; }

/// y = a + b sqrt(-3) on y^2 = t^3 - 27 with ab = 0: either a^2 = t^3 - 27
/// (b = 0) or -3 b^2 = t^3 - 27 (a = 0). `value` is the surviving a or b.
struct DescentHit {
    BigRat t;
    DescentCase which;
    BigRat value;
    bool singular = false;  // t = 3, where E_t degenerates
    bool excluded = false;  // t in {-6, 0, 3}
    bool cm = false;
};

inline std::vector<DescentHit> zeta3_descent_search(long height) {
    const UniPoly t3 = UniPoly::monomial(1, 3);
    const JMap et = named_jmap("Et");
    std::vector<DescentHit> out;
    auto record = [&](const std::vector<PlanePoint>& pts, DescentCase which) {
        for (const auto& p : pts) {
            DescentHit hit{p.s, which, p.t};
            hit.singular = p.s == 3;
            hit.excluded = p.s == -6 || p.s == 0 || p.s == 3;
            const auto j = jmap_eval(et, p.s);
            hit.cm = j && is_cm_j(*j);
            out.push_back(hit);
        }
    };
    record(search_hyperelliptic(UniPoly(), t3 - UniPoly(27), height), DescentCase::BZero);
    record(search_hyperelliptic(UniPoly(), (UniPoly(27) - t3) * UniPoly(make_rat(1, 3)), height),
           DescentCase::AZero);
    std::sort(out.begin(), out.end(), [](const DescentHit& a, const DescentHit& b) {
        return std::tie(a.t, a.which, a.value) < std::tie(b.t, b.which, b.value);
    });
    return out;
}

/// Distinct t values from the descent with the singular fiber dropped.
inline std::vector<BigRat> descent_t_values(const std::vector<DescentHit>& hits) {
    std::vector<BigRat> out;
    for (const auto& h : hits)
        if (!h.singular && (out.empty() || out.back() != h.t)) out.push_back(h.t);
    return out;
}

}  // namespace galtors
