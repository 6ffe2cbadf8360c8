#pragma once

#include "psatz/infer.hpp"
#include "psatz/tower.hpp"

namespace psatz {

struct budget_exceeded : std::runtime_error {
    std::string trace;
    explicit budget_exceeded(const std::string& m, std::string tr = {})
        : std::runtime_error("budget exceeded: " + m), trace(std::move(tr)) {}
};

struct no_solution_within_budget : std::runtime_error {
    explicit no_solution_within_budget(const std::string& m)
        : std::runtime_error("no solution within budget: " + m) {}
};

// ------------------------------------------------------------------------
// Degree-budgeted ideal-membership identities by exact linear algebra:
//   target^m = sum_i cofactor_i * generator_i, all cofactor degrees <= D.
// Replaces the cited effective Nullstellensatz at desk scale.
// ------------------------------------------------------------------------

struct nss_identity {
    poly target;
    unsigned power = 1; // the m actually used
    std::vector<poly> generators;
    std::vector<poly> cofactors;
    unsigned degree_budget = 0;
};

struct nss_options {
    unsigned max_power = 8;
    unsigned degree_budget = 8;
    std::size_t max_unknowns = 4000;
};

nss_identity nss_solve(const poly& target, const std::vector<poly>& generators,
                       const nss_options& opt = {});

// ------------------------------------------------------------------------
// Laplace auxiliaries (section on the fundamental theorem of algebra).
// ------------------------------------------------------------------------

struct laplace_aux {
    unsigned p = 0;
    unsigned long n = 0, r = 0;       // n{p} = C(p,2), r{p} = 2-adic valuation
    std::vector<var> yprime;          // y'_0 .. y'_n
    std::vector<std::vector<var>> ydouble; // y''_{ k, l } for k < l (indexed [k][l])
    std::vector<poly> Q;              // Q_k(c, y'_k), coefficients of P symbolic
    std::map<std::pair<unsigned, unsigned>, poly> R; // R_{k,l}
    std::vector<var> c;               // c_0 .. c_{p-1}
};

laplace_aux make_laplace_aux(unsigned p, unsigned ceiling = 4);

// elementary symmetric reduction: express a symmetric polynomial in the
// roots as a polynomial in the coefficients of the monic P
poly symmetric_reduce(const poly& sym, const std::vector<var>& roots, const std::vector<var>& coeff_vars);

// tower values
tower fta_g2(unsigned p);
tower fta_g3(unsigned p);
tower fta_g4(unsigned p);

// ------------------------------------------------------------------------
// Weak existences (section: fundamental theorem of algebra).
// P is monic in y with coefficients in K[u]; the certificate consumes the
// equations P_re(a,b) = 0, P_im(a,b) = 0 (complex root) etc.
// ------------------------------------------------------------------------

struct fta_options {
    unsigned degree_ceiling = 4; // route even p <= this through Laplace
    std::size_t term_budget = 10000000;
};

// |- exists z [P(z) = 0]
incompat fta_weak(const poly& P, var y, var a, var b, const incompat& in,
                  const fta_options& opt = {});

// per-(m, n) decomposition branch input for real_factors_weak
struct factor_branch {
    unsigned m = 0, n = 0;
    std::vector<var> t;      // real roots
    std::vector<var> av, bv; // complex parts
    incompat cert;
};

// |- disj over m + 2n = p of exists: P == prod (y - t_j) prod ((y-a_k)^2 + b_k^2), b_k != 0
incompat real_factors_weak(const poly& P, var y, const std::vector<factor_branch>& branches,
                           const fta_options& opt = {});

// multiplicity partitions
using partition = std::vector<unsigned>; // non-increasing, positive entries
std::vector<partition> partitions_of(unsigned m);

struct fact_shape {
    partition mu, nu; // |mu| + 2|nu| = p
    std::vector<var> t, av, bv;
};

// the Fact(P)^{mu,nu}(t,z) system atoms appended to `sys`
void add_fact_system(sign_system& sys, const poly& P, var y, const fact_shape& sh);

struct mult_branch {
    fact_shape shape;
    incompat cert;
};

// |- disj over (mu, nu) of exists (t, z) Fact(P)^{mu,nu}(t, z)
incompat real_factors_mult_weak(const poly& P, var y, const std::vector<mult_branch>& branches,
                                const fta_options& opt = {});

} // namespace psatz
