#pragma once

// Elliptic curves over Q in long Weierstrass form: invariants, reduction
// mod p, Frobenius traces, mod-l image filtering and rational torsion.

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cm.hpp"
#include "group.hpp"
#include "named_groups.hpp"
#include "intfactor.hpp"
#include "parallel.hpp"
#include "poly.hpp"
#include "roots.hpp"

namespace galtors {

class SingularCurve : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class BadReduction : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct CurveInvariants {
    BigRat b2, b4, b6, b8, c4, c6, disc, j;
};

namespace detail {

inline CurveInvariants raw_invariants(const std::array<BigRat, 5>& a) {
    const BigRat &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
    CurveInvariants v;
    v.b2 = a1 * a1 + 4 * a2;
    v.b4 = 2 * a4 + a1 * a3;
    v.b6 = a3 * a3 + 4 * a6;
    v.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    v.c4 = v.b2 * v.b2 - 24 * v.b4;
    v.c6 = -v.b2 * v.b2 * v.b2 + 36 * v.b2 * v.b4 - 216 * v.b6;
    v.disc = -v.b2 * v.b2 * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 + 9 * v.b2 * v.b4 * v.b6;
    if (v.disc != 0) v.j = v.c4 * v.c4 * v.c4 / v.disc;
    return v;
}

}  // namespace detail

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with nonzero discriminant.
class CurveQ {
public:
    CurveQ(BigRat a1, BigRat a2, BigRat a3, BigRat a4, BigRat a6) : a_{a1, a2, a3, a4, a6} {
        if (detail::raw_invariants(a_).disc == 0) throw SingularCurve("singular curve " + to_string());
    }
    static CurveQ short_form(const BigRat& a4, const BigRat& a6) { return {0, 0, 0, a4, a6}; }

    const std::array<BigRat, 5>& coeffs() const noexcept { return a_; }
    const BigRat& a1() const { return a_[0]; }
    const BigRat& a2() const { return a_[1]; }
    const BigRat& a3() const { return a_[2]; }
    const BigRat& a4() const { return a_[3]; }
    const BigRat& a6() const { return a_[4]; }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < 5; ++i) s += (i ? "," : "") + a_[i].get_str();
        return s + "]";
    }
    friend bool operator==(const CurveQ& x, const CurveQ& y) { return x.a_ == y.a_; }

private:
    std::array<BigRat, 5> a_;
};

inline CurveInvariants curve_invariants(const CurveQ& e) { return detail::raw_invariants(e.coeffs()); }

/// "[a1,a2,a3,a4,a6]" or "[a4,a6]"; entries are integers or fractions.
inline CurveQ parse_curve(const std::string& text) {
    std::string body = text;
    const auto l = body.find('['), r = body.rfind(']');
    if (l == std::string::npos || r == std::string::npos || r < l)
        throw std::invalid_argument("curve must look like [a1,a2,a3,a4,a6]: '" + text + "'");
    body = body.substr(l + 1, r - l - 1);
    std::vector<BigRat> v;
    std::stringstream ss(body);
    for (std::string item; std::getline(ss, item, ',');) v.push_back(parse_rat(item));
    if (v.size() == 2) return CurveQ::short_form(v[0], v[1]);
    if (v.size() != 5) throw std::invalid_argument("curve needs 2 or 5 coefficients: '" + text + "'");
    return {v[0], v[1], v[2], v[3], v[4]};
}

/// y^2 = x^3 - 3t(t^3 - 24) x + 2(t^6 - 36 t^3 + 216), singular at t = 3.
inline CurveQ curve_Et(const BigRat& t) {
    const BigRat t3 = t * t * t;
    if (t3 == 27) throw SingularCurve("E_t is singular at t = 3");
    return CurveQ::short_form(-3 * t * (t3 - 24), 2 * (t3 * t3 - 36 * t3 + 216));
}

/// Integral model from the (u^i) scaling a_i -> u^i a_i, u the lcm of the
/// coefficient denominators.
struct IntegralModel {
    std::array<BigInt, 5> a;
    BigInt u;
    BigInt disc;
};

inline IntegralModel integral_model(const CurveQ& e) {
    BigInt u = 1;
    for (const auto& c : e.coeffs()) u = lcm(u, BigInt(c.get_den()));
    IntegralModel m;
    m.u = u;
    static constexpr int weight[5] = {1, 2, 3, 4, 6};
    BigInt upow;
    for (std::size_t i = 0; i < 5; ++i) {
        mpz_pow_ui(upow.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(weight[i]));
        const BigRat scaled = e.coeffs()[i] * upow;
        m.a[i] = scaled.get_num();
    }
    const auto inv = detail::raw_invariants({m.a[0], m.a[1], m.a[2], m.a[3], m.a[4]});
    m.disc = inv.disc.get_num();
    return m;
}

inline bool has_good_reduction(const IntegralModel& m, long p) {
    return m.u % p != 0 && m.disc % p != 0;
}

enum class CountMethod { SquaresTable, EulerCriterion };

struct PointCount {
    long n;   // #E(F_p), point at infinity included
    long ap;  // p + 1 - n
};

namespace detail {

inline long mod_long(const BigInt& x, long p) {
    BigInt r = x % p;
    if (r < 0) r += p;
    return r.get_si();
}

inline long brute_count(const std::array<long, 5>& a, long p) {
    long n = 1;
    for (long x = 0; x < p; ++x)
        for (long y = 0; y < p; ++y) {
            const long lhs = (y * y + a[0] * x * y + a[2] * y) % p;
            const long rhs = (((x * x % p) * x) + a[1] * x % p * x + a[3] * x + a[4]) % p;
            if (lhs == rhs) ++n;
        }
    return n;
}

}  // namespace detail

/// Naive count over F_p. For odd p the equation is completed to
/// (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6 and each x contributes
/// 1 + (rhs / p); the two methods evaluate the Legendre symbol differently
/// and walk x in opposite directions.
inline PointCount count_points(const IntegralModel& m, long p, CountMethod method = CountMethod::SquaresTable) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("count_points needs a prime, got " + std::to_string(p));
    if (m.u % p == 0) throw BadReduction("p = " + std::to_string(p) + " divides a coefficient denominator");
    if (m.disc % p == 0) throw BadReduction("bad reduction at p = " + std::to_string(p));
    std::array<long, 5> a;
    for (std::size_t i = 0; i < 5; ++i) a[i] = detail::mod_long(m.a[i], p);

    long n;
    if (p == 2) {
        n = detail::brute_count(a, p);
    } else {
        const long b2 = (a[0] * a[0] + 4 * a[1]) % p;
        const long b4 = (2 * a[3] + a[0] * a[2]) % p;
        const long b6 = (a[2] * a[2] + 4 * a[4]) % p;
        auto rhs = [&](long x) { return ((((4 * x + b2) % p) * x % p + 2 * b4) % p * x % p + b6) % p; };
        n = 1;
        if (method == CountMethod::SquaresTable) {
            std::vector<signed char> chi(static_cast<std::size_t>(p), -1);
            chi[0] = 0;
            for (long y = 1; y < p; ++y) chi[static_cast<std::size_t>(y * y % p)] = 1;
            for (long x = 0; x < p; ++x) n += 1 + chi[static_cast<std::size_t>(rhs(x))];
        } else {
            for (long x = p - 1; x >= 0; --x) {
                const long v = rhs(x);
                if (v == 0) {
                    n += 1;
                    continue;
                }
                n += detail::powmod(v, (p - 1) / 2, p) == 1 ? 2 : 0;
            }
        }
    }
    const long ap = p + 1 - n;
    if (static_cast<double>(ap) * static_cast<double>(ap) > 4.0 * static_cast<double>(p))
        throw std::logic_error("Hasse bound violated at p = " + std::to_string(p));
    return {n, ap};
}

inline PointCount count_points(const CurveQ& e, long p, CountMethod method = CountMethod::SquaresTable) {
    return count_points(integral_model(e), p, method);
}

inline std::vector<long> primes_up_to(long bound) {
    std::vector<long> out;
    if (bound < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (long i = 2; i <= bound; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (long k = i * i; k <= bound; k += i) composite[static_cast<std::size_t>(k)] = true;
    }
    return out;
}

struct FrobSample {
    long p, ap;
    int trace, det;  // a_p and p reduced mod l
};

struct FrobSignature {
    int ell;
    long bound;
    std::vector<FrobSample> samples;  // ascending p

    std::set<std::pair<int, int>> classes() const {
        std::set<std::pair<int, int>> out;
        for (const auto& s : samples) out.emplace(s.trace, s.det);
        return out;
    }
};

/// (a_p mod l, p mod l) over good primes p <= B with p not dividing l.
inline FrobSignature frobenius_signature(const CurveQ& e, int ell, long bound, unsigned workers = 0) {
    if (ell != 2 && ell != 3 && ell != 9) throw std::invalid_argument("signature level must be 2, 3 or 9");
    if (bound < 20) throw std::invalid_argument("prime bound must be at least 20");
    const IntegralModel m = integral_model(e);
    std::vector<long> ps;
    for (long p : primes_up_to(bound))
        if (ell % p != 0 && has_good_reduction(m, p)) ps.push_back(p);
    std::vector<FrobSample> samples(ps.size());
    parallel_for(
        ps.size(),
        [&](std::size_t i) {
            const long p = ps[i];
            const long ap = count_points(m, p).ap;
            samples[i] = {p, ap, static_cast<int>(((ap % ell) + ell) % ell), static_cast<int>(p % ell)};
        },
        workers);
    return {ell, bound, std::move(samples)};
}

struct CandidateVerdict {
    std::string label;
    bool survives;
    std::optional<long> eliminated_by;  // smallest prime whose class is missing
};

struct ImageReport {
    FrobSignature signature;
    std::vector<CandidateVerdict> verdicts;

    std::vector<std::string> survivors() const {
        std::vector<std::string> out;
        for (const auto& v : verdicts)
            if (v.survives) out.push_back(v.label);
        return out;
    }
};

/// Filters candidates by whether the (trace, det) set of <H, -I> contains
/// every sampled Frobenius class. Elimination is rigorous; survival means
/// only "consistent with".
inline ImageReport identify_image(const CurveQ& e, int ell, const std::vector<GenGroup>& candidates, long bound,
                                  unsigned workers = 0) {
    if (candidates.empty()) throw std::invalid_argument("identify_image needs at least one candidate");
    for (const auto& g : candidates)
        if (g.modulus() != ell) throw ModulusMismatch(ell, g.modulus());
    ImageReport rep{frobenius_signature(e, ell, bound, workers), {}};
    for (const auto& g : candidates) {
        const auto allowed = trace_det_classes(with_minus_identity(g));
        CandidateVerdict v{g.label(), true, std::nullopt};
        for (const auto& s : rep.signature.samples)
            if (!allowed.count({s.trace, s.det})) {
                v.survives = false;
                v.eliminated_by = s.p;
                break;
            }
        rep.verdicts.push_back(v);
    }
    return rep;
}

/// Label for the full group at a level, as printed by the tools.
inline std::string full_group_label(int n) {
    return is_prime(n) ? "GL2(F" + std::to_string(n) + ")" : "GL2(Z/" + std::to_string(n) + ")";
}

/// The level-3 candidates: full, 3B.1.1, 3B.1.2, 3Cs.1.1.
inline std::vector<GenGroup> default_level3_candidates() {
    return {full_group_of(3).with_label(full_group_label(3)), named_group("3B.1.1"), named_group("3B.1.2"),
            named_group("3Cs.1.1")};
}

enum class TwoTorsionImage { Trivial, Borel, NonsplitCartan, Full };

inline std::string to_string(TwoTorsionImage t) {
    switch (t) {
        case TwoTorsionImage::Trivial: return "trivial";
        case TwoTorsionImage::Borel: return "2B";
        case TwoTorsionImage::NonsplitCartan: return "2Cn";
        case TwoTorsionImage::Full: return "GL2(F2)";
    }
    return "?";
}

/// 4x^3 + b2 x^2 + 2 b4 x + b6, whose roots are the x-coordinates of the
/// 2-torsion points.
inline UniPoly two_division_cubic(const CurveQ& e) {
    const auto v = curve_invariants(e);
    return UniPoly::from_coeffs({v.b6, 2 * v.b4, v.b2, BigRat(4)});
}

inline TwoTorsionImage two_torsion_image(const CurveQ& e) {
    const UniPoly f = two_division_cubic(e);
    const std::size_t roots = rational_roots(f).size();
    if (roots == 3) return TwoTorsionImage::Trivial;
    if (roots == 1) return TwoTorsionImage::Borel;
    // Irreducible: the image is cyclic of order 3 iff disc(f) is a square.
    const BigRat a = f.coeff(3), b = f.coeff(2), c = f.coeff(1), d = f.coeff(0);
    const BigRat disc = 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c - 27 * a * a * d * d;
    return is_rational_square(disc) ? TwoTorsionImage::NonsplitCartan : TwoTorsionImage::Full;
}

/// 3-division polynomial 3x^4 + b2 x^3 + 3 b4 x^2 + 3 b6 x + b8.
inline UniPoly three_division_polynomial(const CurveQ& e) {
    const auto v = curve_invariants(e);
    return UniPoly::from_coeffs({v.b8, 3 * v.b6, 3 * v.b4, v.b2, BigRat(3)});
}

/// Rational x-coordinates of 3-torsion points; each gives a Galois-stable
/// subgroup of order 3, i.e. a rational 3-isogeny.
inline std::vector<BigRat> rational_3isogeny_kernel(const CurveQ& e) {
    return rational_roots(three_division_polynomial(e));
}

/// C_a x C_b with a | b; a = 1 for cyclic groups.
struct TorsionStructure {
    long a = 1, b = 1;
    long order() const { return a * b; }
    std::string to_string() const {
        return a == 1 ? "C" + std::to_string(b) : "C" + std::to_string(a) + " x C" + std::to_string(b);
    }
    friend bool operator==(const TorsionStructure& x, const TorsionStructure& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator<(const TorsionStructure& x, const TorsionStructure& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
};

/// Parses "C5", "C2xC8", "C2 x C8", "C3+C18"; a, b may come in either order
/// but one must divide the other.
inline TorsionStructure parse_torsion_structure(const std::string& text) {
    std::vector<long> parts;
    std::string cur;
    auto bad = [&] { return std::invalid_argument("not a torsion structure: '" + text + "'"); };
    auto flush = [&] {
        if (cur.empty()) throw bad();
        if (cur.size() > 6) throw bad();
        parts.push_back(std::stol(cur));
        cur.clear();
    };
    bool expect_c = true;
    for (char ch : text) {
        if (ch == ' ') continue;
        if (expect_c) {
            if (ch != 'C' && ch != 'c') throw bad();
            expect_c = false;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            cur += ch;
        } else if (ch == 'x' || ch == 'X' || ch == '+') {
            flush();
            expect_c = true;
        } else {
            throw bad();
        }
    }
    flush();
    if (parts.size() > 2) throw bad();
    for (long v : parts)
        if (v < 1) throw bad();
    if (parts.size() == 1) return {1, parts[0]};
    long a = std::min(parts[0], parts[1]), b = std::max(parts[0], parts[1]);
    if (b % a != 0) throw bad();
    return {a, b};
}

/// Affine point on y^2 = x^3 + A x + B; nullopt is the point at infinity.
using ShortPoint = std::optional<std::pair<BigRat, BigRat>>;

inline ShortPoint short_add(const ShortPoint& p, const ShortPoint& q, const BigRat& a) {
    if (!p) return q;
    if (!q) return p;
    const auto& [x1, y1] = *p;
    const auto& [x2, y2] = *q;
    BigRat lambda;
    if (x1 == x2) {
        if (y1 + y2 == 0) return std::nullopt;
        lambda = (3 * x1 * x1 + a) / (2 * y1);
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    const BigRat x3 = lambda * lambda - x1 - x2;
    return std::make_pair(x3, lambda * (x1 - x3) - y1);
}

struct TorsionResult {
    TorsionStructure structure;
    BigInt short_a, short_b;            // y^2 = x^3 + A x + B, A = -27 c4, B = -54 c6
    std::vector<ShortPoint> points;     // every torsion point on that model
};

/// Lutz-Nagell on y^2 = x^3 - 27 c4 x - 54 c6 of the integral model: torsion
/// points are integral with y = 0 or y^2 | 4A^3 + 27B^2. Each candidate's
/// order is confirmed with the group law.
inline TorsionResult torsion_over_Q(const CurveQ& e) {
    const IntegralModel m = integral_model(e);
    const auto inv = detail::raw_invariants({m.a[0], m.a[1], m.a[2], m.a[3], m.a[4]});
    const BigInt A = -27 * BigInt(inv.c4.get_num()), B = -54 * BigInt(inv.c6.get_num());
    const BigInt D = 4 * A * A * A + 27 * B * B;

    std::set<BigInt> ys{0};
    std::map<BigInt, int> half;
    for (const auto& [p, k] : factor(D))
        if (k >= 2) half[p] = k / 2;
    for (const auto& d : divisors(half)) ys.insert(d);
    std::vector<ShortPoint> pts{std::nullopt};
    const BigRat ar(A);
    for (const auto& y : ys) {
        const UniPoly cubic = UniPoly::from_coeffs({BigRat(B - y * y), BigRat(A), BigRat(0), BigRat(1)});
        for (const auto& x : rational_roots(cubic)) {
            if (x.get_den() != 1) continue;
            for (const BigRat& yy : {BigRat(y), BigRat(-y)}) {
                const ShortPoint p = std::make_pair(x, yy);
                ShortPoint q = p;
                bool finite = false;
                for (int k = 1; k <= 12 && !finite; ++k) {
                    q = short_add(q, p, ar);
                    finite = !q;
                }
                if (finite && std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
            }
        }
    }
    long two_torsion = 1;
    for (const auto& p : pts)
        if (p && p->second == 0) ++two_torsion;
    const long n = static_cast<long>(pts.size());
    TorsionStructure s = two_torsion == 4 ? TorsionStructure{2, n / 2} : TorsionStructure{1, n};
    std::sort(pts.begin(), pts.end());
    return {s, A, B, pts};
}

}  // namespace galtors
