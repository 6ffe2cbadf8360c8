#include "doctest.h"
#include "psatz/bounds.hpp"

using namespace psatz;

TEST_CASE("tower comparison basics") {
    // 2^{2^4} = 65536, 2^17 = 131072
    tower a = tower::pow(tower(2), tower::pow(tower(2), tower(4)));
    tower b = tower::pow(tower(2), tower(17));
    CHECK(tower_cmp(a, b) < 0);
    CHECK(tower_cmp(b, a) > 0);
    CHECK(tower_cmp(a, a) == 0);
    // huge vs huge: 2^{2^100} < 2^{2^101}
    tower h1 = tower::pow(tower(2), tower::pow(tower(2), tower(100)));
    tower h2 = tower::pow(tower(2), tower::pow(tower(2), tower(101)));
    CHECK(tower_cmp(h1, h2) < 0);
    // non-materializable: 2^{2^{2^{70}}} vs 2^{2^{2^{71}}}
    auto t3 = [](long k) {
        return tower::pow(tower(2), tower::pow(tower(2), tower::pow(tower(2), tower(k))));
    };
    CHECK(tower_cmp(t3(70), t3(71)) < 0);
    CHECK(tower_cmp(t3(71) * tower(12), t3(70)) > 0);
}

TEST_CASE("g function values") {
    CHECK(g1(-1, 0).try_eval().value() == rat_of(2));
    CHECK(g1(0, 1).try_eval().value() == rat_of(8));
    CHECK(g1(1, 2).try_eval().value() == rat_of(256));
    CHECK(g2(2).try_eval().value() == rat_of(256)); // equals g1{1,2}
    CHECK(tower_cmp(g1(1, 2), g2(2)) == 0);
    CHECK(g3(2).try_eval().value() == rat_of(65536));
    CHECK(g4(2).try_eval().value() == rpow(rat_of(2), 32));
    // odd p makes g2 formal (non-integer inner exponent); comparisons still work
    CHECK_FALSE(g2(3).try_eval().has_value());
    CHECK(tower_cmp(tower(3) * g1(2, 3), g2(3)) < 0);
}

TEST_CASE("annex suite core ranges") {
    annex_ranges r;
    // quick subset here; the full declared ranges run in the acceptance suite
    r.g1_k = 4;
    r.g1_p = 4;
    r.g2_p = 5;
    r.g3_p = 4;
    r.g4_p = 3;
    r.fix_thom_p = 2;
    r.fix_thom_e = 2;
    r.almost_final_p = 2;
    r.almost_final_s = 2;
    r.almost_final_e = 2;
    r.sect7_d = 2;
    r.sect7_s = 2;
    r.sect7_k = 2;
    auto rep = annex_suite(r);
    for (auto& e : rep) {
        INFO(e.lemma, "(", e.params, ")");
        CHECK(e.pass);
    }
}
