#pragma once

// Exact rationals on top of GMP, plus the Farey grid used by the height
// searches.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace galtors {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(const BigInt& num, const BigInt& den = 1) {
    if (den == 0) throw std::domain_error("zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

inline BigRat make_rat(long num, long den = 1) { return make_rat(BigInt(num), BigInt(den)); }

/// Parses "n", "-n", "n/d" (whitespace tolerated around the slash).
inline BigRat parse_rat(std::string text) {
    text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }), text.end());
    auto bad = [&] { return std::invalid_argument("not a rational number: '" + text + "'"); };
    if (text.empty()) throw bad();
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_int(text)) throw bad();
        return BigRat(BigInt(strip_plus(text)));
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw bad();
    BigInt d(strip_plus(den));
    if (d == 0) throw std::domain_error("zero denominator in '" + text + "'");
    return make_rat(BigInt(strip_plus(num)), d);
}

inline std::string to_string(const BigRat& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// max(|num|, den) of the reduced fraction.
inline BigInt height(const BigRat& q) {
    BigInt n = abs(q.get_num());
    return n > q.get_den() ? n : BigInt(q.get_den());
}

/// 0 and every reduced p/q with 1 <= |p| <= H, 1 <= q <= H, ascending.
inline std::vector<BigRat> farey_values(long h) {
    if (h < 1) throw std::invalid_argument("height bound must be >= 1");
    std::vector<BigRat> out{BigRat(0)};
    for (long q = 1; q <= h; ++q)
        for (long p = 1; p <= h; ++p) {
            if (std::gcd(p, q) != 1) continue;
            out.push_back(make_rat(p, q));
            out.push_back(make_rat(-p, q));
        }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_rational_square(const BigRat& q, BigRat* root = nullptr) {
    if (sgn(q) < 0) return false;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
    if (root) *root = make_rat(BigInt(sqrt(q.get_num())), BigInt(sqrt(q.get_den())));
    return true;
}

}  // namespace galtors
