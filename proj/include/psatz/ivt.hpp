#pragma once

#include "psatz/bounds.hpp"
#include "psatz/fta.hpp"
#include "psatz/infer.hpp"

namespace psatz {

// ------------------------------------------------------------------------
// Mixed Taylor identities: P(t2) = P(t1) + sum_k eps(k) N_k/k! P^(k)(a_k) (t2-t1)^k
// for generic monic P of degree p; a_k = t1 if eps(k) = eps(k+1), else t2.
// ------------------------------------------------------------------------

struct mixed_taylor_identity {
    unsigned p = 0;
    std::vector<int> eps;     // eps[k-1] in {1,-1}, eps[0] = 1
    std::vector<bigint> N;    // N[k-1] = N_{eps,k}, positive integers
    std::vector<int> anchor;  // anchor[k-1] = 0 for t1, 1 for t2 (k < p)
};

struct bad_epsilon : std::runtime_error {
    explicit bad_epsilon(const std::string& m) : std::runtime_error(m) {}
};

// derives the constants and verifies the identity symbolically
mixed_taylor_identity mixed_taylor(unsigned p, const std::vector<int>& eps);

// all admissible sign vectors for degree p (eps(1) = 1)
std::vector<std::vector<int>> all_epsilons(unsigned p);

// ------------------------------------------------------------------------
// Positivity point of a monic odd-degree polynomial: E = p + sum C_h^2 with
// explicit cone decompositions of P(E) and -P(-E).
// ------------------------------------------------------------------------

struct even_degree : std::runtime_error {
    explicit even_degree(const std::string& m) : std::runtime_error(m) {}
};

struct positivity_data {
    poly E;
    sos_list pos;     // value == P(E), includes the positive constant as (w, 1)
    sos_list neg_pos; // value == -P(-E)
};
positivity_data positivity_point(const poly& P, var y);

// ------------------------------------------------------------------------
// Intermediate Value Theorem as a weak existence:
//   exists (t1,t2) [C_p != 0, P(t1) P(t2) <= 0]  |-  exists t [P(t) = 0].
// P is a polynomial whose main variable is t; the input certificate's
// equation atom is P itself. The output is stated over (t1, t2).
// ------------------------------------------------------------------------

struct ivt_options {
    std::size_t term_budget = 2000000;
};

incompat ivt_weak(const poly& P, var t, var t1, var t2, const incompat& in,
                  const ivt_options& opt = {});

// |- exists t [P(t) = 0] for monic odd-degree P (main variable t)
incompat odd_root_weak(const poly& P, var t, const incompat& in, const ivt_options& opt = {});

} // namespace psatz
