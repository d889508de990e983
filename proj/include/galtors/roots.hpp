#pragma once

// Rational roots of univariate polynomials and resultants of bivariate ones.
// Both come in two independent flavours so each can check the other.

#include <set>
#include <stdexcept>
#include <vector>

#include "intfactor.hpp"
#include "poly.hpp"

namespace galtors {

/// sum c_i p^i q^(n-i), i.e. q^n P(p/q) for P with coefficients c.
inline BigInt eval_homogeneous(const std::vector<BigInt>& c, const BigInt& p, const BigInt& q) {
    BigInt acc = 0, qpow = 1;
    // Horner in p with the q powers folded in from the top.
    for (std::size_t k = c.size(); k-- > 0;) {
        acc = acc * p + c[k] * qpow;
        qpow *= q;
    }
    return acc;
}

enum class RootMethod { Auto, DivisorScan, PAdic };

namespace detail {

using ModPoly = std::vector<long>;  // ascending, over F_l

inline void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline long powmod(long b, long e, long m) {
    long r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = static_cast<long>(static_cast<__int128>(r) * b % m);
        b = static_cast<long>(static_cast<__int128>(b) * b % m);
        e >>= 1;
    }
    return r;
}

inline ModPoly mod_poly(const std::vector<BigInt>& c, long l) {
    ModPoly out;
    for (const auto& x : c) {
        BigInt r = x % l;
        if (r < 0) r += l;
        out.push_back(r.get_si());
    }
    trim(out);
    return out;
}

inline ModPoly mod_rem(ModPoly a, const ModPoly& b, long l) {
    const long inv = powmod(b.back(), l - 2, l);
    while (a.size() >= b.size() && !a.empty()) {
        const long f = a.back() * inv % l;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - f * b[i]) % l + l) % l;
        trim(a);
    }
    return a;
}

inline std::size_t mod_gcd_degree(ModPoly a, ModPoly b, long l) {
    while (!b.empty()) {
        auto r = mod_rem(a, b, l);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? 0 : a.size() - 1;
}

/// Squarefree primitive integer polynomial with x-factors removed, and
/// whether 0 was a root.
inline std::pair<std::vector<BigInt>, bool> prepare_for_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
    UniPoly g = p;
    const bool zero_root = g.low_degree() > 0;
    if (zero_root) {
        UniPoly shifted;
        for (const auto& [k, c] : g.terms()) shifted.set(k - p.low_degree(), c);
        g = shifted;
    }
    if (g.degree() > 0) g = exact_div(g, gcd(g, g.derivative()));
    return {integer_coeffs(g), zero_root};
}

inline std::vector<BigRat> roots_by_divisors(const std::vector<BigInt>& c) {
    std::vector<BigRat> out;
    if (c.size() < 2) return out;
    const auto ps = divisors(factor(c.front()));
    const auto qs = divisors(factor(c.back()));
    for (const auto& q : qs)
        for (const auto& p : ps) {
            if (gcd(p, q) != 1) continue;
            for (const BigInt& sp : {BigInt(p), BigInt(-p)})
                if (eval_homogeneous(c, sp, q) == 0) out.push_back(make_rat(sp, q));
        }
    return out;
}

/// Finds p/q with p = q r (mod m), |p| <= n, 0 < q <= d, if 2nd < m.
inline bool rational_reconstruct(const BigInt& r, const BigInt& m, const BigInt& n, const BigInt& d, BigRat& out) {
    BigInt r0 = m, r1 = r % m, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += m;
    while (r1 > n) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > d) return false;
    if (t1 < 0) {
        t1 = -t1;
        r1 = -r1;
    }
    if (gcd(r1, t1) != 1) return false;
    out = make_rat(r1, t1);
    return true;
}

inline std::vector<BigRat> roots_by_hensel(const std::vector<BigInt>& c) {
    std::vector<BigRat> out;
    if (c.size() < 2) return out;
    const BigInt a0 = abs(c.front()), an = abs(c.back());
    const std::size_t deg = c.size() - 1;

    std::vector<BigInt> dc;
    for (std::size_t k = 1; k <= deg; ++k) dc.push_back(c[k] * static_cast<unsigned long>(k));

    // A prime not dividing the leading coefficient, modulo which P stays
    // squarefree, so every root mod l is simple.
    long l = 3;
    for (;; l += 2) {
        if (!is_probable_prime(BigInt(l)) || c.back() % l == 0) continue;
        if (mod_gcd_degree(mod_poly(c, l), mod_poly(dc, l), l) == 0) break;
    }

    const BigInt bound = 2 * a0 * an + 1;
    const auto cl = mod_poly(c, l);
    for (long r = 0; r < l; ++r) {
        long v = 0;
        for (std::size_t k = cl.size(); k-- > 0;) v = static_cast<long>((static_cast<__int128>(v) * r + cl[k]) % l);
        if (v != 0) continue;

        BigInt m = l, x = r;
        while (m < bound) {
            m *= m;
            BigInt fx = 0, dfx = 0;
            for (std::size_t k = c.size(); k-- > 0;) fx = (fx * x + c[k]) % m;
            for (std::size_t k = dc.size(); k-- > 0;) dfx = (dfx * x + dc[k]) % m;
            BigInt inv;
            if (mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), m.get_mpz_t()) == 0)
                throw std::logic_error("Hensel lift hit a non-simple root");
            x = (x - fx * inv) % m;
            if (x < 0) x += m;
        }
        BigRat cand;
        if (rational_reconstruct(x, m, a0, an, cand) && eval_homogeneous(c, cand.get_num(), cand.get_den()) == 0)
            out.push_back(cand);
    }
    return out;
}

}  // namespace detail

/// All rational roots of p, ascending, each certified by exact evaluation.
/// Auto scans divisors of the constant and leading coefficients when those
/// factor cheaply, and otherwise lifts roots modulo a prime.
inline std::vector<BigRat> rational_roots(const UniPoly& p, RootMethod method = RootMethod::Auto) {
    auto [c, zero_root] = detail::prepare_for_roots(p);
    if (method == RootMethod::Auto) {
        const BigInt limit = BigInt(1) << 62;
        method = RootMethod::PAdic;
        if (c.size() >= 2 && abs(c.front()) < limit && abs(c.back()) < limit &&
            divisor_count(factor(c.front())) * divisor_count(factor(c.back())) < 200000)
            method = RootMethod::DivisorScan;
    }
    auto roots = method == RootMethod::DivisorScan ? detail::roots_by_divisors(c) : detail::roots_by_hensel(c);
    if (zero_root) roots.push_back(0);
    std::set<BigRat> uniq(roots.begin(), roots.end());
    for (const auto& r : uniq)
        if (p.eval(r) != 0) throw std::logic_error("rational_roots produced a non-root " + r.get_str());
    return {uniq.begin(), uniq.end()};
}

enum class ResultantMethod { Bareiss, Interpolation };

namespace detail {

template <class T>
std::vector<std::vector<T>> sylvester(const std::vector<T>& a, const std::vector<T>& b) {
    // a, b ascending coefficient lists of formal degrees m, n.
    const std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
    std::vector<std::vector<T>> s(size, std::vector<T>(size, T(0)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = a[m - k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = b[n - k];
    return s;
}

inline UniPoly bareiss_det(std::vector<std::vector<UniPoly>> a) {
    const std::size_t n = a.size();
    if (n == 0) return UniPoly(1);
    UniPoly prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k].is_zero()) ++piv;
            if (piv == n) return UniPoly();
            std::swap(a[k], a[piv]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = UniPoly();
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

inline BigRat gauss_det(std::vector<std::vector<BigRat>> a) {
    const std::size_t n = a.size();
    BigRat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[k], a[piv]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const BigRat f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

/// Newton interpolation through (xs[i], ys[i]).
inline UniPoly interpolate(const std::vector<BigRat>& xs, std::vector<BigRat> ys) {
    const std::size_t n = xs.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    UniPoly out;
    for (std::size_t k = n; k-- > 0;) out = out * (UniPoly::x() - UniPoly(xs[k])) + UniPoly(ys[k]);
    return out;
}

}  // namespace detail

/// Res_v(f, g) as a polynomial in the remaining variable, from the Sylvester
/// matrix in v.
inline UniPoly resultant(const BiPoly& f, const BiPoly& g, Var eliminate,
                         ResultantMethod method = ResultantMethod::Bareiss) {
    const int m = f.degree_in(eliminate), n = g.degree_in(eliminate);
    if (m < 1 || n < 1) throw std::invalid_argument("resultant needs positive degree in the eliminated variable");
    const auto fc = f.coeffs_in(eliminate), gc = g.coeffs_in(eliminate);

    if (method == ResultantMethod::Bareiss) return detail::bareiss_det(detail::sylvester(fc, gc));

    int df = 0, dg = 0;
    for (const auto& c : fc) df = std::max(df, c.degree());
    for (const auto& c : gc) dg = std::max(dg, c.degree());
    const int bound = m * dg + n * df;
    std::vector<BigRat> xs, ys;
    for (int k = 0; k <= bound; ++k) {
        const BigRat x = k;
        std::vector<BigRat> fv, gv;
        for (const auto& c : fc) fv.push_back(c.eval(x));
        for (const auto& c : gc) gv.push_back(c.eval(x));
        xs.push_back(x);
        ys.push_back(detail::gauss_det(detail::sylvester(fv, gv)));
    }
    return detail::interpolate(xs, ys);
}

}  // namespace galtors
