#include <gtest/gtest.h>

#include <random>

#include "galtors/conjugacy.hpp"
#include "galtors/named_groups.hpp"
#include "oracles.hpp"

using namespace galtors;

namespace {

std::set<oracle::Mat> as_set(const GenGroup& g) {
    std::set<oracle::Mat> out;
    for (const auto& m : g.elements()) out.insert(m.entries());
    return out;
}

std::vector<oracle::Mat> raw_gens(const NamedGroupSpec& s) {
    std::vector<oracle::Mat> out;
    for (const auto& e : s.generators) {
        if (s.convention == MatrixConvention::Row)
            out.push_back({e[0], e[2], e[1], e[3]});
        else
            out.push_back({e[0], e[1], e[2], e[3]});
    }
    return out;
}

GMat random_gmat(std::mt19937_64& rng, int n) {
    auto m = oracle::random_invertible(rng, n);
    return {m[0], m[1], m[2], m[3], n};
}

}  // namespace

TEST(Closure, NamedGroupsMatchBruteForce) {
    for (const auto& spec : named_group_specs()) {
        auto g = group_from_spec(spec);
        auto ref = oracle::closure(raw_gens(spec), spec.level);
        EXPECT_EQ(as_set(g), ref) << spec.label;
        EXPECT_EQ(gl2_order(spec.level) % static_cast<long long>(g.order()), 0) << spec.label;
    }
}

TEST(Closure, TableOneGroup) {
    auto g = named_group("3B.1.1");
    EXPECT_EQ(g.order(), 6u);
    EXPECT_EQ(gl2_order(3) / static_cast<long long>(g.order()), 8);
    EXPECT_FALSE(contains_minus_identity(g));
}

TEST(Closure, LevelNineOrders) {
    // Orders from the brute-force closure oracle.
    EXPECT_EQ(named_group("9B0-9a").order(), oracle::closure(raw_gens(named_group_specs()[3]), 9).size());
    EXPECT_EQ(named_group("9B0-9a").order(), 324u);
    EXPECT_EQ(named_group("9J0-9b").order(), 108u);
    EXPECT_EQ(named_group("9H0-9b").order(), 108u);
    EXPECT_EQ(named_group("9B⁰-9a"), named_group("9B0-9a"));
    EXPECT_THROW(named_group("9Z0-9z"), std::out_of_range);
}

TEST(Closure, EmptyGeneratorsGiveTrivialGroup) {
    auto g = closure({}, 9);
    EXPECT_EQ(g.order(), 1u);
    EXPECT_TRUE(g.contains(GMat::identity(9)));
}

TEST(Closure, RejectsNonInvertibleGenerator) {
    EXPECT_THROW(closure({GMat(3, 0, 0, 1, 9)}, 9), NotInvertible);
    EXPECT_THROW(closure({GMat(1, 0, 0, 1, 3)}, 9), ModulusMismatch);
}

TEST(Closure, FullGroupOrders) {
    for (int n : {2, 3, 9, 27}) EXPECT_EQ(static_cast<long long>(full_group_of(n).order()), gl2_order(n)) << n;
    EXPECT_EQ(full_group_of(3).order(), 48u);
    EXPECT_EQ(gl2_order(9), 3888);
}

TEST(Closure, Idempotent) {
    for (const auto& label : named_group_labels()) {
        auto g = named_group(label);
        EXPECT_EQ(closure(g.elements(), g.modulus()), g) << label;
        EXPECT_EQ(GenGroup::from_elements(g.modulus(), g.element_codes()), g) << label;
    }
}

TEST(StandardSubgroup, OrderFormulas) {
    for (int p : {3, 5, 7}) {
        const long long q = p;
        const int phi = least_nonresidue(p).value();
        EXPECT_EQ(static_cast<long long>(standard_subgroup(StandardKind::Borel, p).order()), q * (q - 1) * (q - 1));
        EXPECT_EQ(static_cast<long long>(standard_subgroup(StandardKind::SplitCartan, p).order()), (q - 1) * (q - 1));
        EXPECT_EQ(static_cast<long long>(standard_subgroup(StandardKind::SplitCartanNormalizer, p).order()),
                  2 * (q - 1) * (q - 1));
        EXPECT_EQ(static_cast<long long>(standard_subgroup(StandardKind::NonsplitCartan, p, phi).order()), q * q - 1);
        EXPECT_EQ(static_cast<long long>(standard_subgroup(StandardKind::NonsplitCartanNormalizer, p, phi).order()),
                  2 * (q * q - 1));
        EXPECT_EQ(static_cast<long long>(standard_subgroup(StandardKind::SL2, p).order()), q * (q * q - 1));
    }
    EXPECT_EQ(standard_subgroup(StandardKind::NonsplitCartan, 3, 2).order(), 8u);
}

TEST(StandardSubgroup, NonsplitNormalizerAtNine) {
    auto c = standard_subgroup(StandardKind::NonsplitCartan, 9, 2);
    auto nz = standard_subgroup(StandardKind::NonsplitCartanNormalizer, 9, 2);
    EXPECT_EQ(nz.order(), 2 * c.order());
    EXPECT_TRUE(nz.contains(conj_matrix(9)));
    EXPECT_TRUE(c.is_subgroup_of(nz));
    for (const auto& x : nz.generators()) EXPECT_EQ(conjugate_by(c, x), c);
}

TEST(StandardSubgroup, Errors) {
    EXPECT_THROW(standard_subgroup(StandardKind::NonsplitCartan, 3), std::invalid_argument);
    EXPECT_THROW(standard_subgroup(StandardKind::NonsplitCartan, 5, 4), std::invalid_argument);
    EXPECT_THROW(standard_subgroup(StandardKind::SplitCartan, 4), std::invalid_argument);
    EXPECT_THROW(standard_subgroup(StandardKind::SplitCartan, 6), std::invalid_argument);
}

TEST(MinusIdentity, Examples) {
    EXPECT_FALSE(contains_minus_identity(named_group("3B.1.1")));
    EXPECT_TRUE(contains_minus_identity(full_group_of(3)));
    EXPECT_TRUE(contains_minus_identity(standard_subgroup(StandardKind::SplitCartan, 3)));
}

TEST(DetImage, Examples) {
    EXPECT_EQ(det_image(standard_subgroup(StandardKind::SL2, 3)), std::vector<int>{1});
    EXPECT_EQ(det_image(named_group("3B.1.1")), (std::vector<int>{1, 2}));
    EXPECT_EQ(det_image(full_group_of(9)), (std::vector<int>{1, 2, 4, 5, 7, 8}));
}

TEST(Applicable, Examples) {
    auto full = is_applicable(full_group_of(3));
    EXPECT_FALSE(full.applicable);
    EXPECT_EQ(full.reason, "not proper");
    EXPECT_TRUE(is_applicable(with_minus_identity(named_group("3B.1.1"))).applicable);
    auto sl2 = is_applicable(standard_subgroup(StandardKind::SL2, 3));
    EXPECT_FALSE(sl2.applicable);
    EXPECT_EQ(sl2.reason, "det not surjective");
    EXPECT_EQ(is_applicable(named_group("3B.1.1")).reason, "does not contain -I");
}

TEST(Conjugacy, Examples) {
    std::mt19937_64 rng(3);
    auto borel = standard_subgroup(StandardKind::Borel, 3);
    for (int i = 0; i < 5; ++i) {
        auto x = random_gmat(rng, 3);
        EXPECT_TRUE(is_conjugate(conjugate_by(borel, x), borel));
    }
    EXPECT_FALSE(is_conjugate(standard_subgroup(StandardKind::SplitCartan, 3),
                              standard_subgroup(StandardKind::NonsplitCartan, 3, 2)));
    EXPECT_TRUE(is_conjugate_subgroup(named_group("3B.1.1"), borel));
    EXPECT_THROW(is_conjugate(borel, full_group_of(9)), ModulusMismatch);
}

TEST(Conjugacy, WitnessConjugatesInto) {
    auto g = named_group("3Cs.1.1");
    auto h = standard_subgroup(StandardKind::NonsplitCartanNormalizer, 3, 2);
    auto x = conjugator_into(g, h);
    ASSERT_TRUE(x.has_value());
    EXPECT_TRUE(conjugate_by(g, *x).is_subgroup_of(h));
}

TEST(Dickson, Examples) {
    EXPECT_EQ(dickson_classify(standard_subgroup(StandardKind::Borel, 5)), SubgroupClass::BorelContained);
    EXPECT_EQ(dickson_classify(full_group_of(5)), SubgroupClass::ContainsSL2);
    EXPECT_EQ(dickson_classify(standard_subgroup(StandardKind::SplitCartanNormalizer, 5)),
              SubgroupClass::SplitCartanNormalizer);
    EXPECT_EQ(dickson_classify(standard_subgroup(StandardKind::NonsplitCartanNormalizer, 5, 2)),
              SubgroupClass::NonsplitCartanNormalizer);
    EXPECT_THROW(dickson_classify(full_group_of(9)), std::invalid_argument);
}

TEST(Dickson, FindsProjectiveS4InGL2F5) {
    // Search groups generated by random pairs until the projective image has
    // order 24 with the element orders of S4.
    std::mt19937_64 rng(2024);
    const std::map<int, int> s4{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
    bool found = false;
    for (int attempt = 0; attempt < 5000 && !found; ++attempt) {
        auto g = closure({random_gmat(rng, 5), random_gmat(rng, 5)}, 5);
        if (g.order() % 5 == 0) continue;
        auto proj = projective_image(g);
        if (proj.order != 24 || proj.order_stats != s4) continue;
        found = true;
        EXPECT_EQ(dickson_classify(g), SubgroupClass::ExceptionalS4);
        EXPECT_EQ(stable_lines(g), 0);
    }
    EXPECT_TRUE(found);
}

TEST(ReduceLevel, Examples) {
    auto borel3 = standard_subgroup(StandardKind::Borel, 3);
    EXPECT_TRUE(is_conjugate_subgroup(reduce_level(named_group("9B0-9a"), 3), borel3));
    EXPECT_EQ(reduce_level(full_group_of(9), 3), full_group_of(3));
    // Reduced generators of 9H0-9b, closed by the oracle.
    std::vector<oracle::Mat> gens;
    for (const auto& e : raw_gens(named_group_specs()[5])) gens.push_back({e[0] % 3, e[1] % 3, e[2] % 3, e[3] % 3});
    auto h3 = reduce_level(named_group("9H0-9b"), 3);
    EXPECT_EQ(as_set(h3), oracle::closure(gens, 3));
    EXPECT_EQ(h3.order(), 4u);
    EXPECT_THROW(reduce_level(full_group_of(9), 2), std::invalid_argument);
}

TEST(ReduceLevel, OrdersDivide) {
    for (const auto& label : named_group_labels()) {
        auto g = named_group(label);
        for (int m = 2; m < g.modulus(); ++m) {
            if (g.modulus() % m != 0) continue;
            EXPECT_EQ(g.order() % reduce_level(g, m).order(), 0u) << label << " mod " << m;
        }
    }
}

TEST(StableLines, Examples) {
    EXPECT_EQ(stable_lines(named_group("3B.1.1")), 1);
    EXPECT_EQ(stable_lines(named_group("3B.1.2")), 1);
    EXPECT_EQ(stable_lines(standard_subgroup(StandardKind::SplitCartan, 3)), 2);
    EXPECT_EQ(stable_lines(full_group_of(3)), 0);
}

TEST(ThreeCs, CandidatesByBruteForce) {
    // Order-2 subgroups of the diagonal group mod 3 with det image {1,2}
    // fixing a nonzero vector: brute force over the four diagonal matrices.
    int expected = 0;
    for (int a : {1, 2})
        for (int b : {1, 2})
            if (a * b % 3 == 2) ++expected;  // D(1,2) and D(2,1)
    auto cands = split_cartan_order2_candidates();
    EXPECT_EQ(static_cast<int>(cands.size()), expected);
    ASSERT_EQ(cands.size(), 2u);
    EXPECT_TRUE(is_conjugate(cands[0], cands[1]));
    auto g = named_group("3Cs.1.1");
    EXPECT_EQ(g.order(), 2u);
    EXPECT_TRUE(g.contains(diag(1, 2, 3)));
    EXPECT_EQ(g.label(), "3Cs.1.1");
}

TEST(Properties, ClassifiersInvariantUnderConjugation) {
    std::mt19937_64 rng(99);
    std::vector<GenGroup> pool;
    for (int p : {3, 5}) {
        pool.push_back(standard_subgroup(StandardKind::Borel, p));
        pool.push_back(standard_subgroup(StandardKind::SplitCartanNormalizer, p));
        pool.push_back(standard_subgroup(StandardKind::NonsplitCartan, p, least_nonresidue(p).value()));
        pool.push_back(full_group_of(p));
    }
    for (const auto& label : {"3B.1.1", "3B.1.2", "3Cs.1.1"}) pool.push_back(named_group(label));
    for (int i = 0; i < 100; ++i) {
        const auto& g = pool[static_cast<std::size_t>(i) % pool.size()];
        auto x = random_gmat(rng, g.modulus());
        auto h = conjugate_by(g, x);
        ASSERT_EQ(dickson_classify(h), dickson_classify(g));
        ASSERT_EQ(is_applicable(h).applicable, is_applicable(g).applicable);
        ASSERT_EQ(stable_lines(h), stable_lines(g));
        ASSERT_EQ(det_image(h), det_image(g));
        ASSERT_EQ(contains_minus_identity(h), contains_minus_identity(g));
    }
}
