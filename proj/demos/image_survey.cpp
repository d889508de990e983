// Mod-3 image survey over a small family: E_t for t = -5..5 and a few
// named curves, with 2-torsion image, rational 3-isogenies and torsion.

#include <cstdio>

#include "galtors/galtors.hpp"

using namespace galtors;

static void report(const CurveQ& e) {
    const auto rep = identify_image(e, 3, default_level3_candidates(), 2000);
    std::string surv;
    for (const auto& s : rep.survivors()) surv += (surv.empty() ? "" : ",") + s;
    std::printf("%-28s j=%-24s 2-image=%-8s 3-isog=%zu tors=%-8s mod3=%s\n", e.to_string().c_str(),
                to_string(curve_invariants(e).j).c_str(), to_string(two_torsion_image(e)).c_str(),
                rational_3isogeny_kernel(e).size(), torsion_over_Q(e).structure.to_string().c_str(), surv.c_str());
}

int main() {
    for (int t = -5; t <= 5; ++t)
        if (t != 3) report(curve_Et(t));
    for (const char* s : {"[0,0,1,-1,0]", "[1,0,1,-1,0]", "[1,0,1,-171,-874]", "[0,1]"}) report(parse_curve(s));
    return 0;
}
