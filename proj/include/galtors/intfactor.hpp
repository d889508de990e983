#pragma once

// Integer factorization for the sizes that show up here: trial division,
// then Pollard-Brent rho on what is left.

#include <map>
#include <stdexcept>
#include <vector>

#include "bigrat.hpp"

namespace galtors {

inline bool is_probable_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

namespace detail {

inline BigInt rho_factor(const BigInt& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            for (unsigned long k = 0; k < r && g == 1; k += m) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = (q * abs(BigInt(x - y))) % n;
                }
                g = gcd(q, n);
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(BigInt(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void factor_into(const BigInt& n, std::map<BigInt, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    BigInt d = rho_factor(n);
    factor_into(d, out);
    factor_into(BigInt(n / d), out);
}

}  // namespace detail

/// Prime factorization of |n| as prime -> exponent. factor(0) throws.
inline std::map<BigInt, int> factor(BigInt n) {
    if (n == 0) throw std::domain_error("cannot factor 0");
    n = abs(n);
    std::map<BigInt, int> out;
    for (unsigned long p = 2; p < 10000 && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++out[BigInt(p)];
            n /= p;
        }
    }
    detail::factor_into(n, out);
    return out;
}

/// All positive divisors, ascending.
inline std::vector<BigInt> divisors(const std::map<BigInt, int>& fac) {
    std::vector<BigInt> out{1};
    for (const auto& [p, e] : fac) {
        const std::size_t base = out.size();
        BigInt pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t divisor_count(const std::map<BigInt, int>& fac) {
    std::size_t c = 1;
    for (const auto& [p, e] : fac) c *= static_cast<std::size_t>(e + 1);
    return c;
}

}  // namespace galtors
