// Acceptance suite: one line per criterion, nonzero exit if any misses its
// expected status or its time limit.

#include <cstdio>

#include "galtors/verify.hpp"

int main() {
    using namespace galtors;
    // Search-based criteria report evidence, the rest are exact.
    const std::vector<CheckStatus> expected{
        CheckStatus::Pass,         CheckStatus::Pass,         CheckStatus::Pass,         CheckStatus::Pass,
        CheckStatus::Pass,         CheckStatus::EvidenceOnly, CheckStatus::EvidenceOnly, CheckStatus::EvidenceOnly,
        CheckStatus::EvidenceOnly, CheckStatus::EvidenceOnly, CheckStatus::Pass,         CheckStatus::Pass};
    const VerifyOptions opts;
    const auto checks = acceptance_checks();
    int failures = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const CheckResult r = checks[i](opts);
        const bool ok = r.status == expected[i] && r.within_limit();
        failures += !ok;
        std::printf("%s %2zu %-24s status=%s expected=%s time=%.2fs limit=%.0fs %s\n", ok ? "PASS" : "FAIL", i + 1,
                    r.id.c_str(), to_string(r.status), to_string(expected[i]), r.seconds, r.limit_seconds,
                    r.details.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria met\n", static_cast<int>(checks.size()) - failures, checks.size());
    return failures ? 1 : 0;
}
