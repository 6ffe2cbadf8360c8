#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psatz/poly.hpp"

namespace psatz {

// A system of sign conditions [F_ne, F_ge, F_eq]: the conjunction
// P != 0 (P in ne), P >= 0 (P in ge), P = 0 (P in eq).
struct sign_system {
    std::vector<poly> ne, ge, eq;

    unsigned add_ne(const poly& p) { ne.push_back(p); return unsigned(ne.size() - 1); }
    unsigned add_ge(const poly& p) { ge.push_back(p); return unsigned(ge.size() - 1); }
    unsigned add_eq(const poly& p) { eq.push_back(p); return unsigned(eq.size() - 1); }

    std::optional<unsigned> find_ne(const poly& p) const;
    std::optional<unsigned> find_ge(const poly& p) const;
    std::optional<unsigned> find_eq(const poly& p) const;

    // find or append
    unsigned ne_index(const poly& p);
    unsigned ge_index(const poly& p);
    unsigned eq_index(const poly& p);

    // convenience for strict / sign-valued conditions
    void add_gt(const poly& p) { ne_index(p); ge_index(p); }
    void add_lt(const poly& p) { ne_index(p); ge_index(-p); }
    void add_le(const poly& p) { ge_index(-p); }
    void add_sign(const poly& p, int s);

    bool satisfied_at(const std::map<var, rat>& point) const;
    std::vector<var> all_vars() const;
};

// factors: (index, exponent) pairs, indices into a fixed poly list
using factor_list = std::vector<std::pair<unsigned, unsigned>>;

// S = scalar * prod ne[i]^{e_i} with every e_i even, scalar > 0
struct monoid_part {
    rat scalar = rat_of(1);
    factor_list factors;
};

// omega * V^2 * prod ge[j]^{n_j} with omega > 0
struct cone_component {
    rat weight = rat_of(1);
    poly root;          // V
    factor_list factors; // over ge
};

// W * eq[index]
struct ideal_component {
    poly cofactor; // W
    unsigned index = 0;
};

// Structured certificate of unrealizability: expand(monoid) + sum of cone
// components + sum of ideal components = 0.
struct incompat {
    sign_system sys;
    monoid_part monoid;
    std::vector<cone_component> cone;
    std::vector<ideal_component> ideal;

    poly expand_monoid() const;
    poly expand_cone(std::size_t i) const;
    poly expand_ideal(std::size_t i) const;
    poly residual() const;
};

struct verify_result {
    bool ok = false;
    std::string diagnostic;
    std::vector<std::string> warnings;
    explicit operator bool() const { return ok; }
};

verify_result verify(const incompat& inc);

// throws std::logic_error with the diagnostic when the certificate is bad
void check(const incompat& inc, const std::string& where);

struct degree_report_entry {
    unsigned monoid = 0;
    unsigned cone = 0;  // max over cone components
    unsigned ideal = 0; // max over ideal components
    unsigned total = 0;
};
std::vector<degree_report_entry> degree_report(const incompat& inc,
                                               const std::vector<var_group>& groups);
unsigned certificate_degree(const incompat& inc, const var_group& w);

// the five contradictory shapes certified by P^2 - P^2 = 0 (plus gt_lt)
enum class trivial_shape { ne_eq, gt_le, gt_eq, lt_eq, lt_ge, gt_lt };
incompat make_trivial(const poly& P, trivial_shape shape);

incompat substitute_in_certificate(const incompat& inc, const std::map<var, poly>& bindings);

std::string serialize(const incompat& inc);
incompat parse_certificate(const std::string& text);

// total number of monomials across all parts; the budget unit
std::size_t certificate_size(const incompat& inc);

} // namespace psatz
