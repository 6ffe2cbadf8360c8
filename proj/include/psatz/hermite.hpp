#pragma once

#include "psatz/fta.hpp"
#include "psatz/infer.hpp"

namespace psatz {

// ------------------------------------------------------------------------
// Hermite matrices, subresultants, Hankel/Gram linear algebra and the
// related incompatibilities.
// ------------------------------------------------------------------------

// power sum A_{p,j} evaluated at the coefficient list C (c_0 .. c_{p-1} of a
// monic degree-p polynomial); Newton identities, exact
poly newton_sum(unsigned p, unsigned j, const std::vector<poly>& C);

// Her(P;Q) for P monic of degree p in y; entries in the coefficient ring
pmat hermite_matrix(const poly& P, const poly& Q, var y);

// principal minors HMi_0..HMi_p (HMi_p = 1); HMi_j is the (p-j)-th leading
// principal minor of Her(P;Q)
std::vector<poly> hmi(const poly& P, const poly& Q, var y);

struct subres_seq {
    unsigned p = 0;
    std::vector<poly> sResP; // index 0..p
    std::vector<poly> sRes;  // coefficients, index 0..p
    std::vector<poly> sResU, sResV; // cofactors, index 0..p (plus -1 by convention)
};

// determinant-definition subresultants of (P, R), P monic deg p, deg R < p
subres_seq subresultants_det(const poly& P, const poly& R, var y);
// signed-remainder recursion (independent second route)
subres_seq subresultants_rec(const poly& P, const poly& R, var y);

// d(tau): strictly decreasing degree sequence from a sign condition on HMi
std::vector<unsigned> d_sequence(const std::vector<int>& tau, unsigned p);

// Rk / Si from principal-minor sign data
int rk_hmi(const std::vector<int>& tau, unsigned p);
int si_hmi(const std::vector<int>& tau, unsigned p);

// Rk / Si from a factorization shape
int rk_fact(const std::vector<int>& eta, const std::vector<int>& kappa);
int si_fact(const std::vector<int>& eta);

// Hankel triangular matrix of (alpha_1 .. alpha_p) and its diagonalization
pmat hankel_t(const std::vector<poly>& alpha);
struct hankel_diag_result {
    pmat E;       // change of basis
    pmat Di;      // diagonal
    poly detE;    // closed form, checked
};
hankel_diag_result hankel_diag(unsigned p, const std::vector<poly>& c);

// Gram coefficients and dagger matrices
struct gram_data {
    std::vector<poly> gram; // Gram_0 .. Gram_m
    std::vector<pmat> dagger; // A^{daggers k}, k = 0..m
};
gram_data gram_dagger(const pmat& A);

// all k-minors of A (row-major order of (row subset, col subset))
std::vector<poly> k_minors(const pmat& A, unsigned k);

// verified congruence Gram_k(A) v = A A^{dagger k} v mod D_{k+1}(A|v):
// residual expressed as an explicit combination of (k+1)-minors
struct dagger_identity {
    std::vector<poly> residual;          // per row
    std::vector<poly> minors;            // (k+1)-minors of (A|v)
    std::vector<std::vector<poly>> comb; // residual[i] = sum_j comb[i][j] * minors[j]
};
dagger_identity dagger_identity_check(const pmat& A, const std::vector<poly>& v, unsigned k,
                                      const nss_options& opt = {});

// ------------------------------------------------------------------------
// Sylvester inertia law as an incompatibility.
// ------------------------------------------------------------------------

struct sylvester_error : std::runtime_error {
    explicit sylvester_error(const std::string& m) : std::runtime_error(m) {}
};

// certificate of { A == B D B^t, A == B' D' B'^t, det B != 0, det B' != 0,
//                  sign(D_i) = eta_i, sign(D'_j) = eta'_j }
incompat sylvester_incompat(const pmat& A, const pmat& B, const std::vector<poly>& D,
                            const pmat& Bp, const std::vector<poly>& Dp,
                            const std::vector<int>& eta, const std::vector<int>& etap,
                            const nss_options& opt = {});

// ------------------------------------------------------------------------
// Hermite's theory as weak existences / incompatibility (desk ceilings).
// ------------------------------------------------------------------------

tower g_hermite(unsigned p, unsigned q); // g_H{p, q}

struct hermite_options {
    unsigned degree_ceiling = 3;
    nss_options nss;
};

// diagonalization data of Her(P;Q) along a factorization shape
struct her_fact_data {
    fact_shape shape;
    std::vector<int> kappa;   // invertibility of Q at the complex roots
    std::vector<var> apv, bpv; // z' parts for kappa = 1 entries
    pmat B, Di;               // Her(P;Q) = B Di B^t
};
her_fact_data make_her_fact_data(const poly& P, const poly& Q, var y, const fact_shape& sh,
                                 const std::vector<int>& kappa);

// Theorem "(1) as a weak existence": consumes a certificate mentioning the
// diagonalization and produces one against Fact + inv(Q(z_k)) = kappa_k
incompat hermite_fact_weak(const poly& P, const poly& Q, var y, const her_fact_data& data,
                           const incompat& in, const hermite_options& opt = {});

// Theorem "(2) as a weak existence" data: subresultant diagonalization
struct her_bez_data {
    std::vector<int> tau;         // sign condition on HMi_0..HMi_{p-1}
    std::vector<unsigned> d;      // d(tau)
    std::vector<var> ell, ellp;   // inverses of sRes_{d_i} and T_{d_{i-1}-1}
    std::vector<var> zav, zbv;    // complex fixers for even gaps
    pmat B, Di;
};
her_bez_data make_her_bez_data(const poly& P, const poly& Q, var y, const std::vector<int>& tau);

incompat hermite_bez_weak(const poly& P, const poly& Q, var y, const her_bez_data& data,
                          const incompat& in, const hermite_options& opt = {});

// Theorem "Hermite's Theory as an incompatibility": direct certificate of
// conflicting HMi signs vs factorization counts
incompat hermite_incompat(const poly& P, const poly& Q, var y, const std::vector<int>& tau,
                          const fact_shape& sh, const std::vector<int>& eta,
                          const std::vector<int>& kappa, const hermite_options& opt = {});

} // namespace psatz
