#include <algorithm>

#include "psatz/infer.hpp"

namespace psatz {

namespace {

unsigned cert_degree_in_var(const incompat& inc, var t) {
    var_group g{t};
    return certificate_degree(inc, g);
}

void assert_fresh(const incompat& in, var t, const std::vector<unsigned>& allowed_eq,
                  std::optional<unsigned> allowed_ne, const std::string& where) {
    for (unsigned i = 0; i < in.sys.ne.size(); ++i)
        if (in.sys.ne[i].depends_on(t) && (!allowed_ne || *allowed_ne != i))
            throw variable_not_fresh(where + ": " + var_name(t) + " occurs in a != condition");
    for (auto& p : in.sys.ge)
        if (p.depends_on(t)) throw variable_not_fresh(where + ": " + var_name(t) + " occurs in a >= condition");
    for (unsigned i = 0; i < in.sys.eq.size(); ++i) {
        if (!in.sys.eq[i].depends_on(t)) continue;
        if (std::find(allowed_eq.begin(), allowed_eq.end(), i) == allowed_eq.end())
            throw variable_not_fresh(where + ": " + var_name(t) + " occurs in an unexpected = condition");
    }
}

// coefficients of A as a polynomial in t
std::vector<poly> tcoeffs(const poly& A, var t) { return A.coeffs_in(t); }

factor_list merge_with(const factor_list& fs, unsigned idx, unsigned e) {
    factor_list r = fs;
    for (auto& [i, k] : r)
        if (i == idx) {
            k += e;
            return r;
        }
    r.emplace_back(idx, e);
    std::sort(r.begin(), r.end());
    return r;
}

} // namespace

std::vector<poly> equiv_atoms(const poly& P, const poly& Q, var y) {
    poly diff = P - Q;
    std::vector<poly> atoms;
    for (auto& c : diff.coeffs_in(y))
        if (!c.is_zero()) atoms.push_back(c);
    return atoms;
}

std::pair<poly, poly> complex_eval(const poly& P, var y, const poly& a, const poly& b) {
    auto cs = P.coeffs_in(y);
    poly re, im;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        poly nre = re * a - im * b + *it;
        poly nim = re * b + im * a;
        re = nre;
        im = nim;
    }
    return {re, im};
}

// ------------------------------------------------------------------ inverse

incompat we_inverse(const poly& P, var t, const incompat& in) {
    if (P.depends_on(t)) throw variable_not_fresh("we_inverse: t occurs in P");
    poly tv = poly::variable(t);
    poly rel = P * tv - poly(1);
    auto ni = in.sys.find_ne(tv);
    auto qi = in.sys.find_eq(rel);
    assert_fresh(in, t, qi ? std::vector<unsigned>{*qi} : std::vector<unsigned>{}, ni, "we_inverse");

    unsigned delta_t = cert_degree_in_var(in, t);
    unsigned bar = delta_t + (delta_t % 2);
    unsigned e2 = 0; // exponent of t in the monoid
    if (ni)
        for (auto& [i, k] : in.monoid.factors)
            if (i == *ni) e2 = k;

    // A(t) |-> sum_k coeff_k(A) P^{power - k}
    auto reduce = [&](const poly& A, unsigned power) {
        auto cs = tcoeffs(A, t);
        poly r;
        for (unsigned k = 0; k < cs.size(); ++k) {
            if (k > power) throw std::logic_error("we_inverse: degree exceeds reduction power");
            r += cs[k] * P.pow(power - k);
        }
        return r;
    };

    sign_system target;
    unsigned np = target.add_ne(P);
    translation tr(in, target);
    if (ni) tr.claim_ne(*ni);
    if (qi) tr.claim_eq(*qi);
    tr.carry_rest(in);

    term_sum ts;
    {
        factor_list fs;
        if (bar > e2) fs.emplace_back(np, bar - e2);
        for (auto& [i, k] : in.monoid.factors) {
            if (ni && i == *ni) continue;
            fs = merge_with(fs, tr.out.ne_index(in.sys.ne[i]), k);
        }
        ts.push_back(m_term{in.monoid.scalar, fs});
    }
    for (auto& c : in.cone) {
        factor_list fs;
        for (auto& [i, k] : c.factors) fs = merge_with(fs, tr.out.ge_index(in.sys.ge[i]), k);
        ts.push_back(c_term{c.weight, reduce(c.root, bar / 2), fs});
    }
    for (auto& z : in.ideal) {
        if (qi && z.index == *qi) continue;
        ts.push_back(z_term{reduce(z.cofactor, bar), tr.out.eq_index(in.sys.eq[z.index])});
    }
    return from_terms(tr.out, ts, "we_inverse");
}

// --------------------------------------------------------------- square root

incompat we_sqrt(const poly& P, var t, const incompat& in) {
    if (P.depends_on(t)) throw variable_not_fresh("we_sqrt: t occurs in P");
    poly tv = poly::variable(t);
    poly rel = tv * tv - P;
    auto qi = in.sys.find_eq(rel);
    assert_fresh(in, t, qi ? std::vector<unsigned>{*qi} : std::vector<unsigned>{}, std::nullopt,
                 "we_sqrt");

    sign_system target;
    unsigned gp = target.add_ge(P);
    translation tr(in, target);
    if (qi) tr.claim_eq(*qi);
    tr.carry_rest(in);

    term_sum ts;
    {
        factor_list fs;
        for (auto& [i, k] : in.monoid.factors)
            fs = merge_with(fs, tr.out.ne_index(in.sys.ne[i]), k);
        ts.push_back(m_term{in.monoid.scalar, fs});
    }
    for (auto& c : in.cone) {
        auto [q, r] = quot_rem(c.root, rel, t);
        (void)q;
        auto cs = tcoeffs(r, t);
        poly v0 = cs.size() > 0 ? cs[0] : poly();
        poly v1 = cs.size() > 1 ? cs[1] : poly();
        factor_list fs;
        for (auto& [i, k] : c.factors) fs = merge_with(fs, tr.out.ge_index(in.sys.ge[i]), k);
        if (!v0.is_zero()) ts.push_back(c_term{c.weight, v0, fs});
        if (!v1.is_zero()) ts.push_back(c_term{c.weight, v1, merge_with(fs, gp, 1)});
    }
    for (auto& z : in.ideal) {
        if (qi && z.index == *qi) continue;
        auto [q, r] = quot_rem(z.cofactor, rel, t);
        (void)q;
        auto cs = tcoeffs(r, t);
        poly w0 = cs.size() > 0 ? cs[0] : poly();
        if (!w0.is_zero()) ts.push_back(z_term{w0, tr.out.eq_index(in.sys.eq[z.index])});
    }
    return from_terms(tr.out, ts, "we_sqrt");
}

incompat we_sqrt_pos(const poly& P, var t, const incompat& in) {
    poly tv = poly::variable(t);
    poly rel = tv * tv - P;
    // substitute t -> -t; t^2 = P is untouched, t > 0 becomes t < 0
    incompat neg = substitute_in_certificate(in, {{t, -tv}});
    incompat both = wi_case_pos_neg(tv, in, neg);
    // reinterpret the monoid t-power as a power of t^2
    poly tsq = tv * tv;
    incompat sq = [&] {
        auto ni = both.sys.find_ne(tv);
        if (!ni) return weaken(both, {tsq}, {tsq}, {});
        sign_system target;
        unsigned nt = target.add_ne(tsq);
        unsigned gt2 = target.add_ge(tsq);
        (void)gt2;
        translation tr(both, target);
        tr.claim_ne(*ni) = {m_term{rat_of(1), {{nt, 1}}}}; // value (t)^2 = (t^2)^1
        return translate(both, tr, "we_sqrt_pos(square)");
    }();
    // t^2 > 0 from P > 0 and t^2 - P = 0
    incompat gt = wi_gt_sum({P, rel}, 1, sq);
    // and eliminate t
    return we_sqrt(P, t, gt);
}

// ------------------------------------------------------------ complex square

incompat we_complex_sqrt_ne(const poly& C, const poly& D, var a, var b, const incompat& in) {
    poly av = poly::variable(a), bv = poly::variable(b);
    poly zsq = av * av + bv * bv;             // z != 0 atom
    poly rel_re = av * av - bv * bv - C;      // a^2 - b^2 - C
    poly rel_im = rat_of(2) * (av * bv) - D;  // 2ab - D

    // flip b
    incompat flip = substitute_in_certificate(in, {{b, -bv}});
    // normalize the flipped equation -2ab - D to the atom 2ab + D
    flip = [&] {
        poly neg_atom = -(rat_of(2) * (av * bv)) - D;
        auto qi = flip.sys.find_eq(neg_atom);
        if (!qi) return flip;
        sign_system target;
        unsigned q = target.add_eq(rat_of(2) * (av * bv) + D);
        translation tr(flip, target);
        tr.claim_eq(*qi) = {z_term{poly(-1), q}};
        return translate(flip, tr, "we_complex_sqrt_ne(flip)");
    }();
    // (2ab)^2 = D^2  from  2ab = D \/ 2ab = -D
    poly f1 = rat_of(2) * (av * bv) - D, f2 = rat_of(2) * (av * bv) + D;
    incompat prod = wi_product_zero_split({f1, f2}, {in, flip});
    // (2ab - D)(2ab + D) = (2ab)^2 - D^2
    poly sq_atom = f1 * f2;

    // introduce t: a^2 - (t+C)/2, b^2 - (t-C)/2, t^2 - (C^2+D^2)
    var t = fresh_var("t");
    poly tv = poly::variable(t);
    poly e1 = av * av - rat_of(1, 2) * (tv + C);
    poly e2 = bv * bv - rat_of(1, 2) * (tv - C);
    poly e3 = tv * tv - (C * C + D * D);
    std::vector<lin_rel> rels;
    rels.push_back({rel_re, {{e1, poly(1)}, {e2, poly(-1)}}});
    rels.push_back({sq_atom,
                    {{e1, rat_of(4) * (bv * bv)}, {e2, rat_of(2) * (tv + C)}, {e3, poly(1)}}});
    incompat cert3 = wi_linear_comb_zero(rels, prod);
    // t != 0, a^2 = (t+C)/2, b^2 = (t-C)/2 |- z != 0
    incompat cert4 = wi_ne_sum({tv, e1, e2}, cert3);
    // eliminate a then b
    incompat cert5 = we_sqrt(rat_of(1, 2) * (tv + C), a, cert4);
    incompat cert6 = we_sqrt(rat_of(1, 2) * (tv - C), b, cert5);
    // (t+C)/2 >= 0 ~> t+C >= 0, same for t-C
    incompat cert7 = wi_scale(rat_of(1, 2), 1, tv + C, cert6);
    incompat cert8 = wi_scale(rat_of(1, 2), 1, tv - C, cert7);
    // t > 0, t^2 - C^2 >= 0 |- t+C >= 0, t-C >= 0
    incompat cert9 = wi_sum_prod_pos(tv + C, tv - C, cert8);
    // 2t > 0 ~> t > 0
    incompat cert10 = wi_scale(rat_of(2), 2, tv, cert9);
    // D^2 >= 0, t^2 = C^2 + D^2 |- t^2 - C^2 >= 0  (t^2 - C^2 = D^2 + e3)
    incompat cert11 = wi_ge_sum({D * D, e3}, 1, cert10);
    // |- D^2 >= 0
    incompat cert13 = wi_sq_ge(D, cert11);
    // C^2 + D^2 > 0 |- exists t > 0, t^2 = C^2 + D^2
    incompat cert14 = we_sqrt_pos(C * C + D * D, t, cert13);
    // finally C^2 + D^2 > 0 reinterpreted as C^2 + D^2 != 0
    incompat out = [&] {
        poly s = C * C + D * D;
        auto gi = cert14.sys.find_ge(s);
        if (!gi) return cert14;
        sign_system target;
        target.add_ne(s);
        translation tr(cert14, target);
        tr.claim_ge(*gi) = {c_term{rat_of(1), C, {}}, c_term{rat_of(1), D, {}}};
        return translate(cert14, tr, "we_complex_sqrt_ne(final)");
    }();
    check(out, "we_complex_sqrt_ne");
    return out;
}

incompat we_complex_sqrt(const poly& C, const poly& D, var a, var b, const incompat& in) {
    poly av = poly::variable(a), bv = poly::variable(b);
    poly s = C * C + D * D;
    // branch s != 0
    incompat in_ne = weaken(in, {av * av + bv * bv}, {}, {});
    incompat br_ne = we_complex_sqrt_ne(C, D, a, b, in_ne);
    // branch s = 0: evaluate a = b = 0
    incompat at0 = substitute_in_certificate(in, {{a, poly(0)}, {b, poly(0)}});
    // equations became -C and -D; orient them
    incompat oriented = [&] {
        incompat w = at0;
        for (poly atom : {C, D}) {
            auto qi = w.sys.find_eq(-atom);
            if (!qi) continue;
            sign_system target;
            unsigned q = target.add_eq(atom);
            translation tr(w, target);
            tr.claim_eq(*qi) = {z_term{poly(-1), q}};
            w = translate(w, tr, "we_complex_sqrt(orient)");
        }
        return w;
    }();
    incompat br_eq = wi_sos_zero_split({C, D}, oriented);
    return wi_case_ne_eq(s, br_ne, br_eq);
}

incompat we_quad_complex_root(const poly& Gre, const poly& Gim, const poly& Hre, const poly& Him,
                              var a, var b, const incompat& in) {
    poly av = poly::variable(a), bv = poly::variable(b);
    poly Ere = av * av - bv * bv + Gre * av - Gim * bv + Hre;
    poly Eim = rat_of(2) * (av * bv) + Gim * av + Gre * bv + Him;
    poly C = rat_of(1, 4) * (Gre * Gre) - rat_of(1, 4) * (Gim * Gim) - Hre;
    poly D = rat_of(1, 2) * (Gre * Gim) - Him;
    std::map<var, poly> shift = {{a, av - rat_of(1, 2) * Gre}, {b, bv - rat_of(1, 2) * Gim}};
    if (Ere.substitute(shift) != av * av - bv * bv - C ||
        Eim.substitute(shift) != rat_of(2) * (av * bv) - D)
        throw std::logic_error("we_quad_complex_root: shift identity failed");
    incompat shifted = substitute_in_certificate(in, shift);
    return we_complex_sqrt(C, D, a, b, shifted);
}

// ------------------------------------------------------ identical polynomials

incompat wi_equiv_gt_transfer(const poly& P, const poly& Q, var y, const incompat& in) {
    poly diff = P - Q;
    auto dcs = diff.coeffs_in(y);
    sign_system target;
    unsigned nq = target.add_ne(Q);
    unsigned gq = target.add_ge(Q);
    std::vector<std::pair<unsigned, unsigned>> datoms; // (h, eq index)
    for (unsigned h = 0; h < dcs.size(); ++h)
        if (!dcs[h].is_zero()) datoms.emplace_back(h, target.add_eq(dcs[h]));
    translation tr(in, target);
    poly yv = poly::variable(y);
    if (auto gi = in.sys.find_ge(P)) {
        auto& img = tr.claim_ge(*gi);
        img.push_back(c_term{rat_of(1), poly(1), {{gq, 1}}});
        for (auto& [h, q] : datoms) img.push_back(z_term{yv.pow(h), q});
    }
    if (auto ni = in.sys.find_ne(P)) {
        // P^2 = Q^2 + (P - Q)(P + Q)
        auto& img = tr.claim_ne(*ni);
        img.push_back(m_term{rat_of(1), {{nq, 2}}});
        poly pq = P + Q;
        for (auto& [h, q] : datoms) img.push_back(z_term{yv.pow(h) * pq, q});
    }
    return translate(in, tr, "wi_equiv_gt_transfer");
}

incompat wi_two_linear_factor(const poly& P, var y, var t1, var t2, const incompat& in) {
    poly yv = poly::variable(y), t1v = poly::variable(t1), t2v = poly::variable(t2);
    poly lin2 = (yv - t1v) * (yv - t2v);
    auto [q2, rem2] = quot_rem(P, lin2, y);
    poly A = quot_rem(P, yv - t1v, y).first.substitute({{y, t2v}});
    poly Pt1 = P.substitute({{y, t1v}});
    poly diff = P - lin2 * q2; // = A y - t1 A + P(t1)
    if (diff != A * yv - t1v * A + Pt1)
        throw std::logic_error("wi_two_linear_factor: base identity failed");
    auto dcs = diff.coeffs_in(y);
    sign_system target;
    unsigned qa = target.add_eq(A);
    unsigned qp = target.add_eq(Pt1);
    translation tr(in, target);
    for (unsigned h = 0; h < dcs.size(); ++h) {
        if (dcs[h].is_zero()) continue;
        auto qi = in.sys.find_eq(dcs[h]);
        if (!qi) continue;
        auto& img = tr.claim_eq(*qi);
        if (h == 1) {
            img.push_back(z_term{poly(1), qa});
        } else if (h == 0) {
            img.push_back(z_term{-t1v, qa});
            img.push_back(z_term{poly(1), qp});
        } else {
            throw std::logic_error("wi_two_linear_factor: unexpected coefficient");
        }
    }
    return translate(in, tr, "wi_two_linear_factor");
}

incompat wi_quadratic_factor(const poly& P, var y, var a, var b, const incompat& in) {
    poly yv = poly::variable(y), av = poly::variable(a), bv = poly::variable(b);
    poly quad = (yv - av) * (yv - av) + bv * bv;
    auto [q2, rem2] = quot_rem(P, quad, y);
    (void)q2;
    auto rcs = rem2.coeffs_in(y);
    poly R0 = rcs.size() > 0 ? rcs[0] : poly();
    poly R1 = rcs.size() > 1 ? rcs[1] : poly();
    auto [Pre, Pim] = complex_eval(P, y, av, bv);
    if (bv * R1 != Pim || bv * R0 != bv * Pre - av * Pim)
        throw std::logic_error("wi_quadratic_factor: remainder identity failed");

    sign_system target;
    unsigned qre = target.add_eq(Pre);
    unsigned qim = target.add_eq(Pim);
    unsigned nb = target.add_ne(bv);
    auto i1 = in.sys.find_eq(R1);
    auto i0 = in.sys.find_eq(R0);
    translation tr(in, target);
    if (i1) tr.claim_eq(*i1);
    if (i0 && i0 != i1) tr.claim_eq(*i0);
    tr.carry_rest(in);

    term_sum ts;
    {
        factor_list fs = {{nb, 2}};
        for (auto& [i, k] : in.monoid.factors)
            fs = merge_with(fs, tr.out.ne_index(in.sys.ne[i]), k);
        ts.push_back(m_term{in.monoid.scalar, fs});
    }
    for (auto& c : in.cone) {
        factor_list fs;
        for (auto& [i, k] : c.factors) fs = merge_with(fs, tr.out.ge_index(in.sys.ge[i]), k);
        ts.push_back(c_term{c.weight, c.root * bv, fs});
    }
    for (auto& z : in.ideal) {
        if (i1 && z.index == *i1) {
            ts.push_back(z_term{z.cofactor * bv, qim});
        } else if (i0 && z.index == *i0) {
            ts.push_back(z_term{z.cofactor * (bv * bv), qre});
            ts.push_back(z_term{-(z.cofactor * (av * bv)), qim});
        } else {
            ts.push_back(z_term{z.cofactor * (bv * bv), tr.out.eq_index(in.sys.eq[z.index])});
        }
    }
    return from_terms(tr.out, ts, "wi_quadratic_factor");
}

poly resultant_pair_poly(var a, var b, var a2, var b2) {
    poly da = poly::variable(a) - poly::variable(a2);
    poly dm = poly::variable(b) - poly::variable(b2);
    poly dp = poly::variable(b) + poly::variable(b2);
    return (da * da + dm * dm) * (da * da + dp * dp);
}

incompat wi_resultant_eq(var a, var b, var a2, var b2, const incompat& in) {
    poly av = poly::variable(a), bv = poly::variable(b);
    poly a2v = poly::variable(a2), b2v = poly::variable(b2);
    poly da = av - a2v;
    poly s_ab = av * av + bv * bv - a2v * a2v - b2v * b2v;
    // the equivalence atoms of (y-a)^2+b^2 == (y-a')^2+b'^2 are
    // -2(a - a') (coefficient of y) and a^2+b^2-a'^2-b'^2
    auto branch = [&](const poly& dbsign) -> incompat {
        // dbsign is b - b' or b + b'
        incompat w = in;
        // -2(a-a') = 0 ~> a - a' = 0
        w = wi_scale(rat_of(-2), 0, da, w);
        // a^2-a'^2 = 0, b^2-b'^2 = 0 |- their sum = 0
        poly sa = av * av - a2v * a2v, sb = bv * bv - b2v * b2v;
        w = wi_eq_sum({sa, sb}, w);
        // (a-a')(a+a') and dbsign * (conjugate)
        w = wi_eq_mult(da, av + a2v, w);
        poly other = dbsign == bv - b2v ? bv + b2v : bv - b2v;
        w = wi_eq_mult(dbsign, other, w);
        // sum of squares
        return wi_sos_zero_split({da, dbsign}, w);
    };
    incompat b1 = branch(bv - b2v);
    incompat b2c = branch(bv + b2v);
    poly f1 = da * da + (bv - b2v) * (bv - b2v);
    poly f2 = da * da + (bv + b2v) * (bv + b2v);
    incompat out = wi_product_zero_split({f1, f2}, {b1, b2c});
    (void)s_ab;
    return out;
}

// ----------------------------------------------------------------- matrices

pmat pm_mul(const pmat& A, const pmat& B) {
    std::size_t n = A.size(), m = B[0].size(), k = B.size();
    pmat R(n, std::vector<poly>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = 0; l < k; ++l) R[i][j] += A[i][l] * B[l][j];
    return R;
}

pmat pm_transpose(const pmat& A) {
    pmat R(A[0].size(), std::vector<poly>(A.size()));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A[0].size(); ++j) R[j][i] = A[i][j];
    return R;
}

pmat pm_identity(unsigned n) {
    pmat R(n, std::vector<poly>(n));
    for (unsigned i = 0; i < n; ++i) R[i][i] = poly(1);
    return R;
}

poly pm_det(const pmat& A) {
    std::size_t n = A.size();
    if (n == 0) return poly(1);
    if (n == 1) return A[0][0];
    poly d;
    for (std::size_t j = 0; j < n; ++j) {
        if (A[0][j].is_zero()) continue;
        pmat M(n - 1, std::vector<poly>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                M[r - 1][cc++] = A[r][c];
            }
        }
        poly cof = A[0][j] * pm_det(M);
        d += (j % 2 == 0) ? cof : -cof;
    }
    return d;
}

pmat pm_adjugate(const pmat& A) {
    std::size_t n = A.size();
    pmat R(n, std::vector<poly>(n));
    if (n == 1) {
        R[0][0] = poly(1);
        return R;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            pmat M(n - 1, std::vector<poly>(n - 1));
            std::size_t rr = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::size_t cc = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == j) continue;
                    M[rr][cc++] = A[r][c];
                }
                ++rr;
            }
            poly m = pm_det(M);
            R[j][i] = ((i + j) % 2 == 0) ? m : -m; // transposed cofactor
        }
    return R;
}

incompat wi_matrix_sum_zero(const pmat& A, const pmat& B, const incompat& in) {
    std::vector<lin_rel> rels;
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A[0].size(); ++j) {
            poly t = A[i][j] + B[i][j];
            if (t.is_zero()) continue;
            lin_rel r;
            r.target = t;
            if (!A[i][j].is_zero()) r.parts.emplace_back(A[i][j], poly(1));
            if (!B[i][j].is_zero()) r.parts.emplace_back(B[i][j], poly(1));
            rels.push_back(std::move(r));
        }
    return wi_linear_comb_zero(rels, in);
}

incompat wi_matrix_congruence(const pmat& A, const pmat& B, const pmat& C, const incompat& in) {
    pmat BAC = pm_mul(pm_mul(B, A), C);
    std::vector<lin_rel> rels;
    for (std::size_t i = 0; i < BAC.size(); ++i)
        for (std::size_t j = 0; j < BAC[0].size(); ++j) {
            if (BAC[i][j].is_zero()) continue;
            lin_rel r;
            r.target = BAC[i][j];
            for (std::size_t k = 0; k < A.size(); ++k)
                for (std::size_t l = 0; l < A[0].size(); ++l)
                    if (!A[k][l].is_zero()) r.parts.emplace_back(A[k][l], B[i][k] * C[l][j]);
            rels.push_back(std::move(r));
        }
    return wi_linear_comb_zero(rels, in);
}

} // namespace psatz
