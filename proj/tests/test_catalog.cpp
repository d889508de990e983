#include <gtest/gtest.h>

#include "galtors/catalog.hpp"

using namespace galtors;

namespace {

const char* kLevel9 =
    "# level-9 groups\n"
    "9B0-9a 9 [[1,1,0,1],[2,0,0,5],[1,0,0,2]]\n"
    "\n"
    "A 3 [[[1,1],[0,1]]]\n";

int line_of(const std::string& text) {
    try {
        parse_catalog(text);
    } catch (const CatalogError& e) {
        return static_cast<int>(e.line());
    }
    return -1;
}

}  // namespace

TEST(Catalog, ParsesEntries) {
    const auto es = parse_catalog(kLevel9);
    ASSERT_EQ(es.size(), 2u);
    EXPECT_EQ(es[0].label, "9B0-9a");
    EXPECT_EQ(es[0].level, 9);
    EXPECT_EQ(es[0].line, 2u);
    EXPECT_EQ(es[0].generators.size(), 3u);
    EXPECT_EQ(es[1].generators, (std::vector<std::array<int, 4>>{{1, 1, 0, 1}}));
    EXPECT_EQ(catalog_group(es[1]).order(), 3u);
}

TEST(Catalog, EmptyAndCommentOnly) {
    EXPECT_TRUE(parse_catalog("").empty());
    EXPECT_TRUE(parse_catalog("# nothing\n   \n\t# more\n").empty());
}

TEST(Catalog, ReducesEntriesModLevel) {
    const auto es = parse_catalog("X 5 [[6,-1,10,1]]\n");
    EXPECT_EQ(es[0].generators[0], (std::array<int, 4>{1, 4, 0, 1}));
}

TEST(Catalog, ErrorsCarryLineNumbers) {
    EXPECT_EQ(line_of("A 3 [[1,0,0,1]]\nB 3 [[3,0,0,3]]\n"), 2);
    EXPECT_EQ(line_of("# c\n\nA 3 [[1,0,0]]\n"), 3);
    EXPECT_EQ(line_of("A 3 [[1,0,0,1]]\nA 3 [[1,1,0,1]]\n"), 2);
    EXPECT_EQ(line_of("A 1 [[1,0,0,1]]\n"), 1);
    EXPECT_EQ(line_of("A 65 [[1,0,0,1]]\n"), 1);
    EXPECT_EQ(line_of("A x [[1,0,0,1]]\n"), 1);
    EXPECT_EQ(line_of("A 3 []\n"), 1);
    EXPECT_EQ(line_of("A 3 [[1,0,0,1]] junk\n"), 1);
    EXPECT_EQ(line_of("A\n"), 1);
    EXPECT_EQ(line_of("A 3 [[1,a,0,1]]\n"), 1);
}

TEST(Catalog, RoundTripIsIdempotent) {
    const auto es = parse_catalog(kLevel9);
    const std::string once = serialize_catalog(es);
    const auto again = parse_catalog(once);
    EXPECT_EQ(serialize_catalog(again), once);
    ASSERT_EQ(again.size(), es.size());
    for (std::size_t i = 0; i < es.size(); ++i) {
        EXPECT_EQ(again[i].label, es[i].label);
        EXPECT_EQ(again[i].generators, es[i].generators);
    }
}

TEST(Catalog, ConventionTransposes) {
    const auto es = parse_catalog("U 7 [[1,1,0,1]]\n");
    const GenGroup row = catalog_group(es[0]), col = catalog_group(es[0], MatrixConvention::Column);
    EXPECT_TRUE(row.contains(GMat(1, 0, 1, 1, 7)));
    EXPECT_TRUE(col.contains(GMat(1, 1, 0, 1, 7)));
    EXPECT_FALSE(col.contains(GMat(1, 0, 1, 1, 7)));
}

TEST(Catalog, LevelNineEntryMatchesEmbeddedGroup) {
    const auto es = parse_catalog(kLevel9);
    const GenGroup g = catalog_group(es[0]);
    const GenGroup embedded = named_group("9B0-9a");
    EXPECT_EQ(g.order(), embedded.order());
    for (auto c : embedded.element_codes()) EXPECT_TRUE(g.contains_code(c));
}

TEST(TorsionTables, Examples) {
    EXPECT_FALSE(is_admissible_torsion({1, 11}, 1));
    EXPECT_TRUE(is_admissible_torsion({1, 12}, 1));
    EXPECT_TRUE(is_admissible_torsion({2, 8}, 1));
    EXPECT_TRUE(is_admissible_torsion({1, 15}, 2));
    EXPECT_TRUE(is_admissible_torsion({4, 4}, 2));
    EXPECT_TRUE(is_admissible_torsion({1, 21}, 3));
    EXPECT_TRUE(is_admissible_torsion({1, 18}, 3));
    EXPECT_TRUE(is_admissible_torsion({2, 14}, 3));
    EXPECT_FALSE(is_admissible_torsion({3, 18}, 6));
    EXPECT_TRUE(is_admissible_torsion({1, 30}, 6));
    EXPECT_TRUE(is_admissible_torsion({6, 6}, 6));
    EXPECT_THROW(torsion_table(4), std::invalid_argument);
}

TEST(TorsionTables, SizesAndInclusions) {
    EXPECT_EQ(torsion_table(1).size(), 15u);
    auto subset = [](int a, int b) {
        for (const auto& s : torsion_table(a))
            if (!torsion_table(b).count(s)) return false;
        return true;
    };
    EXPECT_TRUE(subset(1, 2));
    EXPECT_TRUE(subset(2, 6));
    EXPECT_TRUE(subset(1, 3));
    EXPECT_TRUE(subset(3, 6));
    for (int d : torsion_table_degrees())
        for (const auto& s : torsion_table(d)) EXPECT_EQ(s.b % s.a, 0) << s.to_string();
}
