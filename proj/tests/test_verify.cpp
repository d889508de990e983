#include <gtest/gtest.h>

#include <regex>

#include "galtors/verify.hpp"

using namespace galtors;

namespace {

const std::regex kCheckLine(R"(^CHECK [A-Za-z0-9.+\-]+ (pass|fail|evidence-only)( [^ =]+=[^ ]*)*$)");

VerifyOptions with_fault(const std::string& f) {
    VerifyOptions o;
    o.faults.insert(f);
    return o;
}

}  // namespace

TEST(CheckLine, Format) {
    CheckResult r{"demo", CheckStatus::Pass, detail::Tokens().add("a", 1).add("b", "x y").str(), 0.5, 1};
    EXPECT_EQ(check_line(r), "CHECK demo pass a=1 b=x_y");
    r.status = CheckStatus::EvidenceOnly;
    r.details.clear();
    EXPECT_EQ(check_line(r), "CHECK demo evidence-only");
    EXPECT_TRUE(std::regex_match(check_line(r), kCheckLine));
}

TEST(CheckLine, TimeLimitCountsAsFailure) {
    CheckResult r{"slow", CheckStatus::Pass, "", 2.0, 1.0};
    EXPECT_FALSE(r.within_limit());
    EXPECT_TRUE(r.failed());
    r.limit_seconds = 0;
    EXPECT_FALSE(r.failed());
    VerificationReport rep{{r, CheckResult{"bad", CheckStatus::Fail, "", 0, 0}}};
    EXPECT_FALSE(rep.ok());
}

TEST(CheckLine, TimedCatchesExceptions) {
    const auto r = detail::timed("boom", 1, [](CheckResult&) { throw std::runtime_error("went wrong"); });
    EXPECT_EQ(r.status, CheckStatus::Fail);
    EXPECT_EQ(r.details, "error=went_wrong");
    EXPECT_TRUE(std::regex_match(check_line(r), kCheckLine));
}

TEST(Checks, CheapChecksPassAndFormat) {
    const VerifyOptions o;
    for (const auto& r : {check_group_orders(o), check_standard_orders(o), check_stable_lines(o), check_et_formulas(o)}) {
        EXPECT_EQ(r.status, CheckStatus::Pass) << check_line(r);
        EXPECT_TRUE(r.within_limit()) << r.id;
        EXPECT_TRUE(std::regex_match(check_line(r), kCheckLine)) << check_line(r);
    }
    EXPECT_EQ(check_group_orders(o).details, "GL2(F3)=48 3B.1.1=6 index=8 minus-identity=no");
}

TEST(Checks, SearchChecksAreEvidenceOnly) {
    VerifyOptions o;
    o.fiber_height = 12;
    for (const auto& r : {check_genus2_search(o), check_descent(o), check_fiber_3cs_9b(o), check_fiber_9h_2b(o)}) {
        EXPECT_EQ(r.status, CheckStatus::EvidenceOnly) << check_line(r);
        EXPECT_NE(r.details.find("height="), std::string::npos);
    }
}

TEST(Checks, FaultsFlipTheirChecks) {
    EXPECT_EQ(check_group_orders(with_fault("group-generator")).status, CheckStatus::Fail);
    EXPECT_EQ(check_genus2_search(with_fault("cm-table")).status, CheckStatus::Fail);
    EXPECT_EQ(check_et_formulas(with_fault("et-discriminant")).status, CheckStatus::Fail);
    // A fault leaves unrelated checks alone.
    EXPECT_EQ(check_et_formulas(with_fault("group-generator")).status, CheckStatus::Pass);
    EXPECT_EQ(known_faults().size(), 3u);
}

TEST(Checks, AcceptanceListHasTwelveEntries) { EXPECT_EQ(acceptance_checks().size(), 12u); }

TEST(Checks, CatalogChecks) {
    VerifyOptions o;
    o.catalog = parse_catalog("B3 3 [[1,1,0,1],[2,0,0,1],[1,0,0,2]]\nN9 9 [[1,1,0,1],[2,0,0,5],[1,0,0,2]]\n");
    const auto rs = catalog_checks(o);
    std::vector<std::string> ids;
    for (const auto& r : rs) {
        ids.push_back(r.id);
        EXPECT_FALSE(r.failed()) << check_line(r);
        EXPECT_TRUE(std::regex_match(check_line(r), kCheckLine)) << check_line(r);
    }
    EXPECT_EQ(ids, (std::vector<std::string>{"catalog.B3.group", "catalog.N9.group", "catalog.N9.index3",
                                             "catalog.N9.index6"}));
    EXPECT_NE(rs[0].details.find("order=12"), std::string::npos) << rs[0].details;
}
