#pragma once

// Arithmetic in Z/nZ and in the ring of 2x2 matrices over it.
//
// Everything here is a small value type. Moduli are machine integers (the
// library never works above level 27), entries are always kept in the
// canonical range [0, n) so structural equality is mathematical equality.

#include <array>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace galtors {

class ModulusMismatch : public std::invalid_argument {
public:
    ModulusMismatch(int lhs, int rhs)
        : std::invalid_argument("modulus mismatch: " + std::to_string(lhs) +
                                " vs " + std::to_string(rhs)),
          lhs_(lhs), rhs_(rhs) {}
    int lhs() const noexcept { return lhs_; }
    int rhs() const noexcept { return rhs_; }

private:
    int lhs_;
    int rhs_;
};

class NotInvertible : public std::domain_error {
public:
    NotInvertible(int det, int modulus)
        : std::domain_error("matrix is not invertible mod " + std::to_string(modulus) +
                            " (det = " + std::to_string(det) + ")"),
          det_(det) {}
    int det() const noexcept { return det_; }

private:
    int det_;
};

namespace detail {

inline int reduce(long long v, int n) {
    long long r = v % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

inline void check_modulus(int n) {
    if (n < 2) throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(n));
    // Codes of 2x2 matrices are packed into 32 bits.
    if (n > 255) throw std::invalid_argument("modulus too large: " + std::to_string(n));
}

}  // namespace detail

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Inverse of a mod n, or 0 when gcd(a, n) != 1.
inline int inverse_mod(int a, int n) {
    long long t = 0, new_t = 1, r = n, new_r = detail::reduce(a, n);
    while (new_r != 0) {
        long long q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (r != 1) return 0;
    return detail::reduce(t, n);
}

class ModInt {
public:
    ModInt(long long value, int modulus) : n_(modulus) {
        detail::check_modulus(modulus);
        v_ = detail::reduce(value, modulus);
    }

    int value() const noexcept { return v_; }
    int modulus() const noexcept { return n_; }

    bool is_unit() const noexcept { return std::gcd(v_, n_) == 1; }

    ModInt inverse() const {
        int inv = inverse_mod(v_, n_);
        if (inv == 0) throw std::domain_error(std::to_string(v_) + " is not a unit mod " + std::to_string(n_));
        return {inv, n_};
    }

    ModInt operator-() const { return {-static_cast<long long>(v_), n_}; }

    friend ModInt operator+(const ModInt& a, const ModInt& b) {
        same(a, b);
        return {static_cast<long long>(a.v_) + b.v_, a.n_};
    }
    friend ModInt operator-(const ModInt& a, const ModInt& b) {
        same(a, b);
        return {static_cast<long long>(a.v_) - b.v_, a.n_};
    }
    friend ModInt operator*(const ModInt& a, const ModInt& b) {
        same(a, b);
        return {static_cast<long long>(a.v_) * b.v_, a.n_};
    }
    friend bool operator==(const ModInt& a, const ModInt& b) noexcept {
        return a.n_ == b.n_ && a.v_ == b.v_;
    }
    friend std::ostream& operator<<(std::ostream& os, const ModInt& a) {
        return os << a.v_ << " (mod " << a.n_ << ")";
    }

private:
    static void same(const ModInt& a, const ModInt& b) {
        if (a.n_ != b.n_) throw ModulusMismatch(a.n_, b.n_);
    }

    int v_;
    int n_;
};

/// A vector in (Z/nZ)^2, i.e. an element of E[n] in a chosen basis.
class TorVec {
public:
    TorVec(long long x, long long y, int modulus)
        : n_(modulus) {
        detail::check_modulus(modulus);
        x_ = detail::reduce(x, modulus);
        y_ = detail::reduce(y, modulus);
    }

    int x() const noexcept { return x_; }
    int y() const noexcept { return y_; }
    int modulus() const noexcept { return n_; }
    bool is_zero() const noexcept { return x_ == 0 && y_ == 0; }

    std::uint32_t code() const noexcept { return static_cast<std::uint32_t>(x_ + n_ * y_); }
    static TorVec from_code(std::uint32_t code, int n) {
        return {static_cast<long long>(code % n), static_cast<long long>(code / n), n};
    }

    TorVec scaled(long long k) const { return {k * x_, k * y_, n_}; }

    friend bool operator==(const TorVec& a, const TorVec& b) noexcept {
        return a.n_ == b.n_ && a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator<(const TorVec& a, const TorVec& b) noexcept {
        return std::tie(a.n_, a.x_, a.y_) < std::tie(b.n_, b.x_, b.y_);
    }
    friend std::ostream& operator<<(std::ostream& os, const TorVec& v) {
        return os << '(' << v.x_ << ',' << v.y_ << ')';
    }

private:
    int x_ = 0;
    int y_ = 0;
    int n_;
};

/// Least k >= 1 with k*v = 0; equals n / gcd(v1, v2, n).
inline int vector_exact_order(const TorVec& v) {
    int n = v.modulus();
    return n / std::gcd(std::gcd(v.x(), v.y()), n);
}

/// 2x2 matrix over Z/nZ, row-major: [[a, b], [c, d]].
class GMat {
public:
    GMat(long long a, long long b, long long c, long long d, int modulus) : n_(modulus) {
        detail::check_modulus(modulus);
        e_ = {detail::reduce(a, modulus), detail::reduce(b, modulus),
              detail::reduce(c, modulus), detail::reduce(d, modulus)};
    }
    GMat(const ModInt& a, const ModInt& b, const ModInt& c, const ModInt& d) : n_(a.modulus()) {
        for (const ModInt* m : {&b, &c, &d})
            if (m->modulus() != n_) throw ModulusMismatch(n_, m->modulus());
        e_ = {a.value(), b.value(), c.value(), d.value()};
    }

    static GMat identity(int n) { return {1, 0, 0, 1, n}; }
    static GMat minus_identity(int n) { return {-1, 0, 0, -1, n}; }

    int modulus() const noexcept { return n_; }
    int a() const noexcept { return e_[0]; }
    int b() const noexcept { return e_[1]; }
    int c() const noexcept { return e_[2]; }
    int d() const noexcept { return e_[3]; }
    const std::array<int, 4>& entries() const noexcept { return e_; }
    ModInt entry(int row, int col) const { return {e_[2 * row + col], n_}; }

    ModInt det() const { return {static_cast<long long>(a()) * d() - static_cast<long long>(b()) * c(), n_}; }
    ModInt trace() const { return {static_cast<long long>(a()) + d(), n_}; }
    bool is_invertible() const { return det().is_unit(); }
    bool is_identity() const noexcept { return e_ == std::array<int, 4>{1, 0, 0, 1}; }
    bool is_scalar() const noexcept { return e_[1] == 0 && e_[2] == 0 && e_[0] == e_[3]; }

    /// Dense code in [0, n^4); used as the key for closure sets.
    std::uint32_t code() const noexcept {
        auto n = static_cast<std::uint32_t>(n_);
        return static_cast<std::uint32_t>(e_[0]) +
               n * (static_cast<std::uint32_t>(e_[1]) +
                    n * (static_cast<std::uint32_t>(e_[2]) + n * static_cast<std::uint32_t>(e_[3])));
    }
    static GMat from_code(std::uint32_t code, int n) {
        auto un = static_cast<std::uint32_t>(n);
        int a = static_cast<int>(code % un);
        code /= un;
        int b = static_cast<int>(code % un);
        code /= un;
        int c = static_cast<int>(code % un);
        return {a, b, c, static_cast<long long>(code / un), n};
    }

    GMat reduced(int m) const {
        if (m < 2 || n_ % m != 0)
            throw std::invalid_argument(std::to_string(m) + " does not divide " + std::to_string(n_));
        return {a(), b(), c(), d(), m};
    }

    TorVec apply(const TorVec& v) const {
        if (v.modulus() != n_) throw ModulusMismatch(n_, v.modulus());
        return {static_cast<long long>(a()) * v.x() + static_cast<long long>(b()) * v.y(),
                static_cast<long long>(c()) * v.x() + static_cast<long long>(d()) * v.y(), n_};
    }

    friend bool operator==(const GMat& x, const GMat& y) noexcept { return x.n_ == y.n_ && x.e_ == y.e_; }
    friend bool operator<(const GMat& x, const GMat& y) noexcept {
        return std::make_pair(x.n_, x.code()) < std::make_pair(y.n_, y.code());
    }
    friend std::ostream& operator<<(std::ostream& os, const GMat& m) {
        return os << "[[" << m.a() << ',' << m.b() << "],[" << m.c() << ',' << m.d() << "]]";
    }

    std::string to_string() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

private:
    std::array<int, 4> e_{};
    int n_;
};

inline GMat mat_mul(const GMat& x, const GMat& y) {
    if (x.modulus() != y.modulus()) throw ModulusMismatch(x.modulus(), y.modulus());
    const long long a = x.a(), b = x.b(), c = x.c(), d = x.d();
    return {a * y.a() + b * y.c(), a * y.b() + b * y.d(), c * y.a() + d * y.c(), c * y.b() + d * y.d(),
            x.modulus()};
}

inline GMat operator*(const GMat& x, const GMat& y) { return mat_mul(x, y); }

inline GMat transposed(const GMat& m) { return {m.a(), m.c(), m.b(), m.d(), m.modulus()}; }

inline GMat operator+(const GMat& x, const GMat& y) {
    if (x.modulus() != y.modulus()) throw ModulusMismatch(x.modulus(), y.modulus());
    return {static_cast<long long>(x.a()) + y.a(), static_cast<long long>(x.b()) + y.b(),
            static_cast<long long>(x.c()) + y.c(), static_cast<long long>(x.d()) + y.d(), x.modulus()};
}

inline std::pair<ModInt, ModInt> det_trace(const GMat& m) { return {m.det(), m.trace()}; }

inline GMat mat_inverse(const GMat& m) {
    const int n = m.modulus();
    const int inv = inverse_mod(m.det().value(), n);
    if (inv == 0) throw NotInvertible(m.det().value(), n);
    const long long k = inv;
    return {k * m.d(), -k * m.b(), -k * m.c(), k * m.a(), n};
}

/// Least k >= 1 with m^k = I. Iterated multiplication; the group orders in
/// play are small.
inline int element_order(const GMat& m) {
    if (!m.is_invertible()) throw NotInvertible(m.det().value(), m.modulus());
    GMat p = m;
    int k = 1;
    while (!p.is_identity()) {
        p = p * m;
        ++k;
    }
    return k;
}

inline GMat mat_pow(GMat base, long long e) {
    GMat r = GMat::identity(base.modulus());
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

/// Smallest positive quadratic non-residue mod an odd prime p.
inline ModInt least_nonresidue(int p) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("least_nonresidue needs an odd prime, got " + std::to_string(p));
    for (int r = 2; r < p; ++r) {
        bool square = false;
        for (int y = 1; y < p && !square; ++y) square = (y * y) % p == r;
        if (!square) return {r, p};
    }
    throw std::logic_error("no non-residue found");  // unreachable for odd primes
}

// Named matrices.
inline GMat diag(long long a, long long b, int n) { return {a, 0, 0, b, n}; }
inline GMat nonsplit_element(long long a, long long b, long long phi, int n) { return {a, b * phi, b, a, n}; }
inline GMat swap_matrix(int n) { return {0, 1, 1, 0, n}; }
inline GMat conj_matrix(int n) { return {1, 0, 0, -1, n}; }

inline std::vector<int> units_mod(int n) {
    std::vector<int> u;
    for (int i = 1; i < n; ++i)
        if (std::gcd(i, n) == 1) u.push_back(i);
    return u;
}

inline std::vector<int> prime_divisors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

/// |GL2(Z/nZ)| = n^4 prod_{p | n} (1 - 1/p)(1 - 1/p^2).
inline long long gl2_order(int n) {
    long long order = 1;
    for (int i = 0; i < 4; ++i) order *= n;
    for (int p : prime_divisors(n)) order = order / p * (p - 1) / (static_cast<long long>(p) * p) * (p * p - 1LL);
    return order;
}

/// All vectors of exact order n in (Z/nZ)^2, in code order.
inline std::vector<TorVec> exact_order_vectors(int n) {
    std::vector<TorVec> out;
    for (int code = 0; code < n * n; ++code) {
        TorVec v = TorVec::from_code(static_cast<std::uint32_t>(code), n);
        if (vector_exact_order(v) == n) out.push_back(v);
    }
    return out;
}

}  // namespace galtors
