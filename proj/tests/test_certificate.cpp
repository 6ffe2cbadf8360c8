#include <random>

#include "doctest.h"
#include "psatz/certificate.hpp"

using namespace psatz;

TEST_CASE("trivial certificate accepts, mutation rejects") {
    var x = intern("x");
    poly px = poly::variable(x);
    incompat inc = make_trivial(px, trivial_shape::ne_eq);
    CHECK(verify(inc).ok);
    incompat bad = inc;
    bad.ideal[0].cofactor = px; // flip the sign of the cofactor
    auto v = verify(bad);
    CHECK_FALSE(v.ok);
    CHECK(v.diagnostic.find("residual") != std::string::npos);
    for (auto shape : {trivial_shape::ne_eq, trivial_shape::gt_le, trivial_shape::gt_eq,
                       trivial_shape::lt_eq, trivial_shape::lt_ge, trivial_shape::gt_lt})
        CHECK(verify(make_trivial(px * px + 3, shape)).ok);
    // degenerate: P = 0 certifies 0 != 0 with the identity 0 = 0
    CHECK(verify(make_trivial(poly(), trivial_shape::ne_eq)).ok);
}

TEST_CASE("hand certificate for x >= 0, -x-1 >= 0") {
    var x = intern("x");
    poly px = poly::variable(x);
    incompat inc;
    unsigned g1 = inc.sys.add_ge(px);
    unsigned g2 = inc.sys.add_ge(-px - 1);
    inc.monoid = {}; // S = 1
    inc.cone.push_back({rat_of(1), poly(1), {{g1, 1}}});
    inc.cone.push_back({rat_of(1), poly(1), {{g2, 1}}});
    CHECK(verify(inc).ok);
    var_group g{x};
    CHECK(certificate_degree(inc, g) == 1);
}

TEST_CASE("degree report") {
    var x = intern("x");
    poly px = poly::variable(x);
    incompat inc = make_trivial(px * px, trivial_shape::ne_eq);
    auto rep = degree_report(inc, {var_group{x}});
    CHECK(rep[0].total == 4); // deg S = deg P^2 = 4
    incompat z;
    z.sys.add_eq(poly(1));
    z.monoid = {};
    z.ideal.push_back({poly(-1), 0});
    CHECK(verify(z).ok);
    CHECK(degree_report(z, {var_group{x}})[0].total == 0);
}

TEST_CASE("substitution preserves verification") {
    var x = intern("x"), t = intern("t");
    poly px = poly::variable(x);
    incompat inc = make_trivial(px + poly::variable(t), trivial_shape::gt_eq);
    incompat sub = substitute_in_certificate(inc, {{t, poly(0)}});
    CHECK(verify(sub).ok);
    incompat ren = substitute_in_certificate(inc, {{t, poly::variable(intern("t_new"))}});
    CHECK(verify(ren).ok);
}

TEST_CASE("serialize round trip") {
    var x = intern("x");
    poly px = poly::variable(x);
    incompat inc = make_trivial(px.pow(3) - px + 1, trivial_shape::gt_le);
    std::string text = serialize(inc);
    incompat back = parse_certificate(text);
    CHECK(verify(back).ok);
    CHECK(serialize(back) == text);
    CHECK_THROWS(parse_certificate("SYSTEM\nne x^-1\n"));
}

TEST_CASE("soundness sampling") {
    // certified-unrealizable system admits no rational solutions
    var x = intern("x");
    poly px = poly::variable(x);
    incompat inc;
    unsigned g1 = inc.sys.add_ge(px);
    unsigned g2 = inc.sys.add_ge(-px - 1);
    inc.cone.push_back({rat_of(1), poly(1), {{g1, 1}}});
    inc.cone.push_back({rat_of(1), poly(1), {{g2, 1}}});
    REQUIRE(verify(inc).ok);
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 9);
    for (int i = 0; i < 100; ++i) {
        std::map<var, rat> pt{{x, rat_of(num(rng), den(rng))}};
        CHECK_FALSE(inc.sys.satisfied_at(pt));
    }
}

TEST_CASE("mutation fuzz") {
    var x = intern("x"), y = intern("y");
    poly p = poly::variable(x) * poly::variable(y) + poly::variable(x) - 2;
    incompat inc = make_trivial(p, trivial_shape::ne_eq);
    REQUIRE(verify(inc).ok);
    std::mt19937 rng(23);
    int rejected = 0, total = 0;
    for (int k = 0; k < 200; ++k) {
        incompat mut = inc;
        // flip the sign of one coefficient somewhere
        poly* target = nullptr;
        switch (k % 3) {
            case 0: target = &mut.sys.ne[0]; break;
            case 1: target = &mut.sys.eq[0]; break;
            case 2: target = &mut.ideal[0].cofactor; break;
        }
        auto terms = target->terms();
        if (terms.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, terms.size() - 1);
        auto it = terms.begin();
        std::advance(it, pick(rng));
        target->set_term(it->first, -it->second);
        ++total;
        if (!verify(mut).ok) ++rejected;
    }
    CHECK(rejected == total);
}
