#pragma once

// Random admissible-input generator shared by the combinator tests and the
// acceptance suite. Contexts carry the inconsistent condition 1 = 0, so a
// closing ideal component can absorb any residual: every generated
// certificate verifies by construction while all other parts are random.

#include <random>

#include "psatz/certificate.hpp"

namespace psatz::testgen {

struct gen {
    std::mt19937 rng;
    std::vector<var> vars;

    explicit gen(unsigned seed) : rng(seed) {
        vars = {intern("x"), intern("y"), intern("z")};
    }

    int small_int() { return std::uniform_int_distribution<int>(-6, 6)(rng); }
    unsigned index(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng); }
    bool flip() { return std::uniform_int_distribution<int>(0, 1)(rng) != 0; }

    poly rand_poly(unsigned maxdeg = 4, unsigned terms = 3) {
        poly p;
        for (unsigned t = 0; t < terms; ++t) {
            monomial m;
            unsigned budget = index(maxdeg + 1);
            for (var v : vars) {
                if (!budget) break;
                unsigned e = index(budget + 1);
                if (e) m = m * monomial::of(v, e);
                budget -= e;
            }
            p.add_term(m, rat_of(small_int()));
        }
        return p;
    }

    poly rand_nonzero(unsigned maxdeg = 4, unsigned terms = 3) {
        for (;;) {
            poly p = rand_poly(maxdeg, terms);
            if (!p.is_zero()) return p;
        }
    }

    poly rand_nonconst(unsigned maxdeg = 4, unsigned terms = 3) {
        for (;;) {
            poly p = rand_poly(maxdeg, terms);
            if (!p.is_constant()) return p;
        }
    }

    // context with <= 3 random conditions plus the 1 = 0 anchor
    sign_system rand_context() {
        sign_system sys;
        unsigned n = index(4);
        for (unsigned i = 0; i < n; ++i) {
            poly p = rand_nonzero();
            switch (index(3)) {
                case 0: sys.add_ne(p); break;
                case 1: sys.add_ge(p); break;
                default: sys.add_eq(p); break;
            }
        }
        sys.eq_index(poly(1));
        return sys;
    }

    // random verifying certificate over sys; the monoid starts from
    // `required` (pairs of ne index and even exponent)
    incompat rand_cert(const sign_system& sys, const factor_list& required = {}) {
        incompat inc;
        inc.sys = sys;
        inc.monoid.factors = required;
        for (unsigned i = 0; i < sys.ne.size(); ++i)
            if (flip() && index(3) == 0) {
                bool present = false;
                for (auto& [j, e] : inc.monoid.factors)
                    if (j == i) present = true;
                if (!present) inc.monoid.factors.emplace_back(i, 2);
            }
        unsigned ncone = index(3);
        for (unsigned k = 0; k < ncone; ++k) {
            cone_component c;
            c.weight = rat_of(1 + index(4));
            c.root = rand_poly(2, 2);
            for (unsigned i = 0; i < sys.ge.size(); ++i)
                if (flip()) c.factors.emplace_back(i, 1 + index(2));
            inc.cone.push_back(c);
        }
        unsigned anchor = *sys.find_eq(poly(1));
        unsigned nid = index(2);
        for (unsigned k = 0; k < nid; ++k) {
            if (sys.eq.empty()) break;
            unsigned i = index(unsigned(sys.eq.size()));
            if (i == anchor) continue;
            inc.ideal.push_back({rand_poly(2, 2), i});
        }
        poly residual = inc.residual();
        inc.ideal.push_back({-residual, anchor});
        return inc;
    }
};

// monoid factors as a multiset over polynomial text, up to positive scalar
using monoid_ms = std::map<std::string, unsigned>;

inline monoid_ms monoid_multiset(const incompat& inc) {
    monoid_ms got;
    for (auto& [i, e] : inc.monoid.factors)
        if (e && !inc.sys.ne.at(i).is_constant()) got[print_poly(inc.sys.ne.at(i))] += e;
    return got;
}

inline void ms_add(monoid_ms& ms, const poly& p, unsigned e) {
    if (e && !p.is_constant()) ms[print_poly(p)] += e;
}

inline bool ms_remove(monoid_ms& ms, const poly& p, unsigned e) {
    auto it = ms.find(print_poly(p));
    if (it == ms.end() || it->second < e) return false;
    it->second -= e;
    if (it->second == 0) ms.erase(it);
    return true;
}

inline monoid_ms ms_scale(const monoid_ms& ms, unsigned k) {
    monoid_ms r;
    for (auto& [s, e] : ms) r[s] = e * k;
    return r;
}

inline monoid_ms ms_union(const monoid_ms& a, const monoid_ms& b) {
    monoid_ms r = a;
    for (auto& [s, e] : b) r[s] += e;
    return r;
}

// exact shape: expected = (input S parts after removing `consumed`) + `produced`
inline bool monoid_matches(const incompat& inc, std::vector<std::pair<poly, unsigned>> expected) {
    monoid_ms want;
    for (auto& [p, e] : expected) ms_add(want, p, e);
    return monoid_multiset(inc) == want;
}

} // namespace psatz::testgen
