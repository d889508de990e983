#include <gtest/gtest.h>

#include <random>

#include "galtors/catalog.hpp"
#include "galtors/curve.hpp"
#include "galtors/jmap.hpp"

using namespace galtors;

namespace {

long brute_points(const CurveQ& e, long p) {
    const IntegralModel m = integral_model(e);
    long a[5];
    for (int i = 0; i < 5; ++i) a[i] = mpz_fdiv_ui(m.a[static_cast<std::size_t>(i)].get_mpz_t(), static_cast<unsigned long>(p));
    long n = 1;
    for (long x = 0; x < p; ++x)
        for (long y = 0; y < p; ++y) {
            const long lhs = (y * y + a[0] * x % p * y + a[2] * y) % p;
            const long rhs = (x * x % p * x + a[1] * x % p * x + a[3] * x + a[4]) % p;
            if (lhs == rhs) ++n;
        }
    return n;
}

// Long Weierstrass group law; nullopt is the identity.
using Pt = std::optional<std::pair<BigRat, BigRat>>;

Pt add(const CurveQ& e, const Pt& p, const Pt& q) {
    if (!p) return q;
    if (!q) return p;
    const auto& [x1, y1] = *p;
    const auto& [x2, y2] = *q;
    BigRat l;
    if (x1 == x2) {
        if (y1 + y2 + e.a1() * x2 + e.a3() == 0) return std::nullopt;
        l = (3 * x1 * x1 + 2 * e.a2() * x1 + e.a4() - e.a1() * y1) / (2 * y1 + e.a1() * x1 + e.a3());
    } else {
        l = (y2 - y1) / (x2 - x1);
    }
    const BigRat nu = y1 - l * x1;
    const BigRat x3 = l * l + e.a1() * l - e.a2() - x1 - x2;
    return std::make_pair(x3, BigRat(-(l + e.a1()) * x3 - nu - e.a3()));
}

int order_of(const CurveQ& e, const Pt& p, int cap = 20) {
    Pt q = p;
    for (int k = 1; k <= cap; ++k) {
        if (!q) return k;
        q = add(e, q, p);
    }
    return 0;
}

// y^2 + (1 - c) x y - b y = x^3 - b x^2, on which (0, 0) is a point.
CurveQ tate_normal(const BigRat& b, const BigRat& c) { return {1 - c, -b, -b, 0, 0}; }

}  // namespace

TEST(Curve, InvariantsOfSmallConductorCurve) {
    const CurveQ e = parse_curve("[0,0,1,-1,0]");
    const auto v = curve_invariants(e);
    EXPECT_EQ(v.disc, 37);
    EXPECT_EQ(v.c4, 48);
    EXPECT_EQ(v.j, make_rat(110592, 37));
    EXPECT_EQ(count_points(e, 2).ap, -2);
    EXPECT_EQ(e.to_string(), "[0,0,1,-1,0]");
}

TEST(Curve, ParseAndSingular) {
    EXPECT_EQ(parse_curve("[1, 2]"), CurveQ::short_form(1, 2));
    EXPECT_EQ(parse_curve("[1/2,0,0,0,1]").a1(), make_rat(1, 2));
    EXPECT_THROW(parse_curve("[0,0]"), SingularCurve);
    EXPECT_THROW(parse_curve("[1,2,3]"), std::invalid_argument);
    EXPECT_THROW(parse_curve("1,2"), std::invalid_argument);
    EXPECT_THROW(curve_Et(3), SingularCurve);
}

TEST(Curve, EtFamilyDiscriminantAndJ) {
    // Delta(E_t) = 2^12 3^6 (t^3 - 27); j(E_t) = t^3 (t^3 - 24)^3 / (t^3 - 27).
    for (int t : {-7, -6, -2, -1, 0, 1, 2, 4, 5, 11}) {
        const BigRat tt = t, t3 = tt * tt * tt;
        const auto v = curve_invariants(curve_Et(tt));
        EXPECT_EQ(v.disc, 4096 * 729 * (t3 - 27)) << t;
        EXPECT_EQ(v.j, t3 * (t3 - 24) * (t3 - 24) * (t3 - 24) / (t3 - 27)) << t;
        EXPECT_EQ(v.j, *jmap_eval(named_jmap("Et"), tt));
    }
    EXPECT_EQ(curve_invariants(curve_Et(make_rat(1, 2))).j, *jmap_eval(named_jmap("Et"), make_rat(1, 2)));
}

TEST(Curve, IntegralModelScalesDenominators) {
    const CurveQ e = parse_curve("[0,0,0,1/4,1/8]");
    const IntegralModel m = integral_model(e);
    EXPECT_EQ(m.u, 8);
    EXPECT_EQ(m.a[3], 1024);
    EXPECT_EQ(m.a[4], 32768);
    EXPECT_EQ(curve_invariants(CurveQ(0, 0, 0, BigRat(m.a[3]), BigRat(m.a[4]))).j, curve_invariants(e).j);
}

TEST(Curve, PointCountsAgreeWithBruteForce) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(-6, 6);
    const auto ps = primes_up_to(80);
    for (int i = 0; i < 40; ++i) {
        std::optional<CurveQ> e;
        try {
            e.emplace(c(rng), c(rng), c(rng), c(rng), c(rng));
        } catch (const SingularCurve&) {
            continue;
        }
        const IntegralModel m = integral_model(*e);
        for (long p : ps) {
            if (!has_good_reduction(m, p)) continue;
            const long want = brute_points(*e, p);
            EXPECT_EQ(count_points(*e, p, CountMethod::SquaresTable).n, want) << e->to_string() << " p=" << p;
            EXPECT_EQ(count_points(*e, p, CountMethod::EulerCriterion).n, want) << e->to_string() << " p=" << p;
        }
    }
}

TEST(Curve, BadReductionIsRejected) {
    const CurveQ e = parse_curve("[0,0,1,-1,0]");
    EXPECT_FALSE(has_good_reduction(integral_model(e), 37));
    EXPECT_THROW(count_points(e, 37), BadReduction);
}

TEST(Curve, HasseBound) {
    const CurveQ e = parse_curve("[1,0,1,-171,-874]");
    for (long p : primes_up_to(3000)) {
        if (!has_good_reduction(integral_model(e), p)) continue;
        const long ap = count_points(e, p).ap;
        EXPECT_LE(ap * ap, 4 * p);
    }
}

TEST(Frobenius, SignatureIsMonotoneAndDetIsP) {
    const CurveQ e = parse_curve("[0,0,1,-1,0]");
    const auto small = frobenius_signature(e, 3, 200), big = frobenius_signature(e, 3, 2000);
    for (const auto& cl : small.classes()) EXPECT_TRUE(big.classes().count(cl));
    for (const auto& s : big.samples) {
        EXPECT_EQ(s.det, s.p % 3);
        EXPECT_EQ(s.trace, ((s.ap % 3) + 3) % 3);
    }
    EXPECT_EQ(big.classes(), trace_det_classes(full_group_of(3)));
    EXPECT_THROW(frobenius_signature(e, 5, 100), std::invalid_argument);
    EXPECT_THROW(frobenius_signature(e, 3, 10), std::invalid_argument);
}

TEST(Frobenius, IdentifyLevelThree) {
    const auto cands = default_level3_candidates();
    const auto r37 = identify_image(parse_curve("[0,0,1,-1,0]"), 3, cands, 10000);
    EXPECT_EQ(r37.survivors(), std::vector<std::string>{full_group_label(3)});
    for (const auto& v : r37.verdicts) {
        EXPECT_TRUE(v.survives || v.eliminated_by.has_value());
    }

    // A rational 3-isogeny keeps the Borel candidates alive.
    for (const char* text : {"[1,0,1,-1,0]", "[1,0,1,-171,-874]"}) {
        const CurveQ e = parse_curve(text);
        EXPECT_FALSE(rational_3isogeny_kernel(e).empty()) << text;
        const auto rep = identify_image(e, 3, cands, 10000);
        const auto surv = rep.survivors();
        EXPECT_NE(std::find(surv.begin(), surv.end(), "3B.1.1"), surv.end()) << text;
        EXPECT_NE(std::find(surv.begin(), surv.end(), full_group_label(3)), surv.end()) << text;
    }
    EXPECT_THROW(identify_image(parse_curve("[0,0,1,-1,0]"), 3, {}, 100), std::invalid_argument);
    EXPECT_THROW(identify_image(parse_curve("[0,0,1,-1,0]"), 3, {full_group_of(9)}, 100), ModulusMismatch);
}

TEST(Frobenius, FullGroupSurvivesEverySignature) {
    // The full group realizes every (trace, det) with det a unit.
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int i = 0; i < 10; ++i) {
        std::optional<CurveQ> e;
        try {
            e.emplace(c(rng), c(rng), c(rng), c(rng), c(rng));
        } catch (const SingularCurve&) {
            continue;
        }
        const auto rep = identify_image(*e, 3, {full_group_of(3)}, 500);
        EXPECT_TRUE(rep.verdicts[0].survives);
    }
}

TEST(TwoTorsion, Examples) {
    EXPECT_EQ(two_torsion_image(parse_curve("[-1,0]")), TwoTorsionImage::Trivial);
    EXPECT_EQ(two_torsion_image(parse_curve("[1,0]")), TwoTorsionImage::Borel);
    EXPECT_EQ(two_torsion_image(parse_curve("[0,-2]")), TwoTorsionImage::Full);
    // x^3 - 3x + 1 is irreducible with discriminant 81.
    EXPECT_EQ(two_torsion_image(parse_curve("[-3,1]")), TwoTorsionImage::NonsplitCartan);
    EXPECT_EQ(to_string(TwoTorsionImage::NonsplitCartan), "2Cn");
}

TEST(ThreeDivision, Examples) {
    // y^2 = x^3 + B: psi_3 = 3x^4 + 12 B x.
    const UniPoly x = UniPoly::x();
    EXPECT_EQ(three_division_polynomial(parse_curve("[0,1]")),
              UniPoly(3) * x * x * x * x + UniPoly(12) * x);
    EXPECT_EQ(rational_3isogeny_kernel(parse_curve("[0,1]")), (std::vector<BigRat>{0}));
    EXPECT_EQ(rational_3isogeny_kernel(parse_curve("[0,-2]")), (std::vector<BigRat>{0, 2}));
    for (const auto& r : rational_3isogeny_kernel(parse_curve("[0,-2]")))
        EXPECT_EQ(3 * r * r * r * r - 24 * r, 0);
}

TEST(Torsion, Examples) {
    EXPECT_EQ(torsion_over_Q(parse_curve("[0,0,1,-1,0]")).structure, (TorsionStructure{1, 1}));
    EXPECT_EQ(torsion_over_Q(parse_curve("[-1,0]")).structure, (TorsionStructure{2, 2}));
    EXPECT_EQ(torsion_over_Q(parse_curve("[1,0,1,-1,0]")).structure, (TorsionStructure{1, 6}));
    EXPECT_EQ(torsion_over_Q(parse_curve("[0,1]")).structure, (TorsionStructure{1, 6}));
}

TEST(Torsion, TateNormalFormFamilies) {
    // (b, c) as functions of a parameter u that give (0,0) order N.
    struct Family {
        int n;
        std::function<std::pair<BigRat, BigRat>(const BigRat&)> bc;
    };
    const std::vector<Family> fams{
        {4, [](const BigRat& u) { return std::make_pair(u, BigRat(0)); }},
        {5, [](const BigRat& u) { return std::make_pair(u, u); }},
        {6, [](const BigRat& u) { return std::make_pair(BigRat(u + u * u), u); }},
        {7, [](const BigRat& u) { return std::make_pair(BigRat(u * u * u - u * u), BigRat(u * u - u)); }},
    };
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-12, 12), den(1, 5);
    int checked = 0;
    for (const auto& f : fams)
        for (int i = 0; i < 8; ++i) {
            const auto [b, c] = f.bc(make_rat(num(rng), den(rng)));
            std::optional<CurveQ> e;
            try {
                e.emplace(tate_normal(b, c));
            } catch (const SingularCurve&) {
                continue;
            }
            const Pt origin = std::make_pair(BigRat(0), BigRat(0));
            ASSERT_EQ(order_of(*e, origin), f.n);
            const auto tors = torsion_over_Q(*e);
            EXPECT_EQ(tors.structure.order() % f.n, 0) << e->to_string();
            EXPECT_TRUE(is_admissible_torsion(tors.structure, 1)) << e->to_string();
            EXPECT_EQ(static_cast<long>(tors.points.size()), tors.structure.order());
            ++checked;
        }
    EXPECT_GT(checked, 20);
}

TEST(Torsion, OrderDividesReductionCount) {
    for (const char* text : {"[1,0,1,-1,0]", "[1,0,1,-171,-874]", "[-1,0]", "[1,-1,1,-3,3]", "[1,0,0,-45,81]"}) {
        const CurveQ e = parse_curve(text);
        const long n = torsion_over_Q(e).structure.order();
        const IntegralModel m = integral_model(e);
        for (long p : primes_up_to(200)) {
            if (p == 2 || !has_good_reduction(m, p)) continue;
            EXPECT_EQ(count_points(e, p).n % n, 0) << text << " p=" << p;
        }
    }
}

TEST(Torsion, ParseStructure) {
    EXPECT_EQ(parse_torsion_structure("C5"), (TorsionStructure{1, 5}));
    EXPECT_EQ(parse_torsion_structure("C2xC8"), (TorsionStructure{2, 8}));
    EXPECT_EQ(parse_torsion_structure("C18 + C3"), (TorsionStructure{3, 18}));
    EXPECT_EQ((TorsionStructure{2, 8}).to_string(), "C2 x C8");
    EXPECT_THROW(parse_torsion_structure("C4xC6"), std::invalid_argument);
    EXPECT_THROW(parse_torsion_structure("Z5"), std::invalid_argument);
    EXPECT_THROW(parse_torsion_structure("C0"), std::invalid_argument);
}
