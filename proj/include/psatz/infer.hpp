#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "psatz/certificate.hpp"

namespace psatz {

struct shape_mismatch : std::runtime_error {
    explicit shape_mismatch(const std::string& m) : std::runtime_error("shape mismatch: " + m) {}
};
struct missing_branch : std::runtime_error {
    explicit missing_branch(const std::string& m) : std::runtime_error("missing branch: " + m) {}
};
struct variable_not_fresh : std::runtime_error {
    explicit variable_not_fresh(const std::string& m) : std::runtime_error("variable not fresh: " + m) {}
};

// ------------------------------------------------------------------------
// Component algebra. Certificates are assembled from typed summands whose
// provenance is explicit; products stay inside the three classes:
//   m * m = m,  m * c = c,  c * c = c,  anything * z = z.
// ------------------------------------------------------------------------

struct m_term { // scalar * prod ne[i]^{e_i}, e_i even
    rat scalar = rat_of(1);
    factor_list nef;
};
struct c_term { // weight * root^2 * prod ge[j]^{n_j}
    rat weight = rat_of(1);
    poly root = poly(1);
    factor_list gef;
};
struct z_term { // cof * eq[k]
    poly cof;
    unsigned eq = 0;
};
using term = std::variant<m_term, c_term, z_term>;
using term_sum = std::vector<term>;

poly term_value(const term& t, const sign_system& sys);
poly sum_value(const term_sum& ts, const sign_system& sys);

term term_mul(const term& a, const term& b, const sign_system& sys);
term_sum sum_mul(const term_sum& a, const term_sum& b, const sign_system& sys);
term_sum sum_pow(const term_sum& a, unsigned e, const sign_system& sys);
term term_scale(const term& t, const rat& positive);
term_sum to_terms(const incompat& inc);

// Assemble & verify; the first m-term is the monoid part, further m-terms
// are demoted to squares in the cone.
incompat from_terms(const sign_system& sys, const term_sum& ts, const std::string& where);

// ------------------------------------------------------------------------
// Translation: rebuild a certificate over a new system, given for each atom
// of the old system a term sum over the new system with the same value.
// This is the single audited reinterpretation operation; eq images must be
// pure ideal sums.
// ------------------------------------------------------------------------

struct translation {
    sign_system out;
    std::vector<std::optional<term_sum>> ne_img, ge_img, eq_img;

    explicit translation(const incompat& in, sign_system target);
    // identity carry-over for every atom not yet claimed; extends `out`
    void carry_rest(const incompat& in);

    term_sum& claim_ne(unsigned i);
    term_sum& claim_ge(unsigned i);
    term_sum& claim_eq(unsigned i);
};

incompat translate(const incompat& in, translation& tr, const std::string& where);
// same rewrite but return the raw terms (no assembly / verification)
term_sum translate_parts(const incompat& in, translation& tr, const std::string& where);

// convenience: same system modulo added atoms (weakening |F| -> |F, F'|)
incompat weaken(const incompat& in, const std::vector<poly>& add_ne,
                const std::vector<poly>& add_ge, const std::vector<poly>& add_eq);

// multiply the whole identity by a term (value need not be checked: the
// result is re-verified); the monoid survives iff the factor is an m-term
incompat multiply_certificate(const incompat& in, const term& factor, const std::string& where);

// fold even powers of designated atoms into cone roots / drop from monoid
incompat fold_ge_even(const incompat& in, unsigned ge_index);

// ------------------------------------------------------------------------
// Basic weak inferences (each returns the final incompatibility given the
// initial one; the ambient context is carried over automatically).
// ------------------------------------------------------------------------

// P > 0 |- P >= 0     and    P > 0 |- P != 0
incompat wi_gt_to_ge(const poly& P, const incompat& in);
incompat wi_gt_to_ne(const poly& P, const incompat& in);
// |- P^2 >= 0
incompat wi_sq_ge(const poly& P, const incompat& in);
// P != 0 |- P^2 > 0
incompat wi_ne_to_sq_gt(const poly& P, const incompat& in);
// P = 0 |- P*Q = 0
incompat wi_eq_mult(const poly& P, const poly& Q, const incompat& in);
// conj P_j != 0 |- prod P_j != 0, etc.
incompat wi_prod_ne(const std::vector<poly>& Ps, const incompat& in);
incompat wi_prod_ge(const std::vector<poly>& Ps, const incompat& in);
incompat wi_prod_gt(const std::vector<poly>& Ps, const incompat& in);

// P >= 0 |- alpha P >= 0 (alpha > 0), etc.; sign_case: +1 (>=), +2 (>),
// 0 (=); alpha < 0 flips to the <= / < consequents
incompat wi_scale(const rat& alpha, int sign_case, const poly& P, const incompat& in);

// P >= 0, P <= 0 |- P = 0
incompat wi_ge_le_to_eq(const poly& P, const incompat& in);

// conj P_j = 0 |- sum P_j = 0
incompat wi_eq_sum(const std::vector<poly>& Ps, const incompat& in);
// conj_{j<=m'} P_j >= 0, conj_{j>m'} P_j = 0 |- sum P_j >= 0
incompat wi_ge_sum(const std::vector<poly>& Ps, unsigned mprime, const incompat& in);
// P_1 != 0, P_j = 0 (j >= 2) |- sum P_j != 0
incompat wi_ne_sum(const std::vector<poly>& Ps, const incompat& in);
// P_1 > 0, P_j >= 0 (2..m'), P_j = 0 (m'+1..m) |- sum P_j > 0
incompat wi_gt_sum(const std::vector<poly>& Ps, unsigned mprime, const incompat& in);

// conj P_{j,k} = 0 |- conj_k sum_j P_{j,k} Q_{j,k} = 0
struct lin_rel {
    poly target;                              // sum_j P_j * Q_j
    std::vector<std::pair<poly, poly>> parts; // (P_j, Q_j)
};
incompat wi_linear_comb_zero(const std::vector<lin_rel>& rels, const incompat& in);

// P1*P2 >= 0, P2 > 0 |- P1 >= 0
incompat wi_prod_ge_pos(const poly& P1, const poly& P2, const incompat& in);
// P1*P2 > 0, P2 > 0 |- P1 > 0
incompat wi_prod_gt_pos(const poly& P1, const poly& P2, const incompat& in);
// P1 + P2 > 0, P1*P2 >= 0 |- P1 >= 0, P2 >= 0
incompat wi_sum_prod_pos(const poly& P1, const poly& P2, const incompat& in);

// prod P_j = 0 |- disj P_j = 0
incompat wi_product_zero_split(const std::vector<poly>& Ps, const std::vector<incompat>& ins);

// (sum A_j B_j)^2 + N = 2^m sum A_j^2 * sum B_j^2; N as explicit squares
struct sos_list {
    std::vector<std::pair<rat, poly>> squares; // (omega, V): value = sum omega V^2
    poly value() const;
};
sos_list cs_identity(const std::vector<poly>& A, const std::vector<poly>& B);

// sum P_j^2 = 0 |- conj P_j = 0
incompat wi_sos_zero_split(const std::vector<poly>& Ps, const incompat& in);
// sum P_j Q_j != 0 |- sum P_j^2 != 0
incompat wi_comb_ne(const std::vector<poly>& Ps, const std::vector<poly>& Qs, const incompat& in);

// |- P != 0  \/  P = 0        (in_ne, in_eq)
incompat wi_case_ne_eq(const poly& P, const incompat& in_ne, const incompat& in_eq);
// P != 0 |- P > 0 \/ P < 0    (in_pos, in_neg)
incompat wi_case_pos_neg(const poly& P, const incompat& in_pos, const incompat& in_neg);
// |- P > 0 \/ P < 0 \/ P = 0
incompat wi_trichotomy(const poly& P, const incompat& in_pos, const incompat& in_neg,
                       const incompat& in_eq);
// |- disj over J subset {1..m} (P_j != 0 outside J, P_j = 0 in J);
// branch(J) yields the initial incompatibility for the subset J (bitmask)
incompat wi_multi_case_eq(const std::vector<poly>& Ps,
                          const std::function<incompat(unsigned)>& branch);
// conj P_j != 0 |- disj over J (P_j > 0 in J, P_j < 0 outside)
incompat wi_multi_case_sign(const std::vector<poly>& Ps,
                            const std::function<incompat(unsigned)>& branch);
// |- disj over (J, J') (P_j = 0 in J, P_j > 0 in J', P_j < 0 outside)
incompat wi_multi_case_full(const std::vector<poly>& Ps,
                            const std::function<incompat(unsigned, unsigned)>& branch);

// ------------------------------------------------------------------------
// Weak existences (auxiliary variables are eliminated from the input).
// ------------------------------------------------------------------------

// P != 0 |- exists t [t != 0, P t = 1]
incompat we_inverse(const poly& P, var t, const incompat& in);
// P >= 0 |- exists t [t^2 = P]
incompat we_sqrt(const poly& P, var t, const incompat& in);
// P > 0 |- exists t [t > 0, t^2 = P]
incompat we_sqrt_pos(const poly& P, var t, const incompat& in);
// C + iD != 0 |- exists z [z != 0, z^2 = C + iD]
incompat we_complex_sqrt_ne(const poly& C, const poly& D, var a, var b, const incompat& in);
// |- exists z [z^2 = C + iD]
incompat we_complex_sqrt(const poly& C, const poly& D, var a, var b, const incompat& in);
// |- exists z [z^2 + G z + H = 0], complex coefficients G, H
incompat we_quad_complex_root(const poly& Gre, const poly& Gim, const poly& Hre, const poly& Him,
                              var a, var b, const incompat& in);

// ------------------------------------------------------------------------
// Identical polynomials / matrices.
// ------------------------------------------------------------------------

// P(y) == Q(y), Q(y) > 0 |- P(y) > 0 (coefficientwise equalities in y)
incompat wi_equiv_gt_transfer(const poly& P, const poly& Q, var y, const incompat& in);
// P(t1) = 0, Quot(P, y-t1)(t2) = 0 |- P == (y-t1)(y-t2) Quot(P,(y-t1)(y-t2))
incompat wi_two_linear_factor(const poly& P, var y, var t1, var t2, const incompat& in);
// P(z) = 0, b != 0 |- P == ((y-a)^2 + b^2) Quot(P, (y-a)^2+b^2)
incompat wi_quadratic_factor(const poly& P, var y, var a, var b, const incompat& in);
// R(z,z') = 0 |- (y-a)^2 + b^2 == (y-a')^2 + b'^2
incompat wi_resultant_eq(var a, var b, var a2, var b2, const incompat& in);

// helpers shared with other modules
poly resultant_pair_poly(var a, var b, var a2, var b2); // R(z, z')

// coefficientwise equality atoms of P == Q w.r.t. y
std::vector<poly> equiv_atoms(const poly& P, const poly& Q, var y);

// real and imaginary part of P(a + i b) w.r.t. the variable y
std::pair<poly, poly> complex_eval(const poly& P, var y, const poly& a, const poly& b);

// matrices of polynomials (row-major, rectangular)
using pmat = std::vector<std::vector<poly>>;
pmat pm_mul(const pmat& A, const pmat& B);
pmat pm_transpose(const pmat& A);
pmat pm_identity(unsigned n);
poly pm_det(const pmat& A);
pmat pm_adjugate(const pmat& A);

// A == 0, B == 0 |- A + B == 0 (entrywise)
incompat wi_matrix_sum_zero(const pmat& A, const pmat& B, const incompat& in);
// A == 0 |- B A C == 0 (entrywise)
incompat wi_matrix_congruence(const pmat& A, const pmat& B, const pmat& C, const incompat& in);

} // namespace psatz
