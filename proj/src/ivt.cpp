#include "psatz/ivt.hpp"

#include <algorithm>

namespace psatz {

// ----------------------------------------------------------------- taylor

std::vector<std::vector<int>> all_epsilons(unsigned p) {
    std::vector<std::vector<int>> out;
    unsigned m = p >= 1 ? p - 1 : 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> eps(p, 1);
        for (unsigned j = 0; j < m; ++j)
            if ((mask >> j) & 1) eps[j + 1] = -1;
        out.push_back(eps);
    }
    return out;
}

mixed_taylor_identity mixed_taylor(unsigned p, const std::vector<int>& eps) {
    if (p < 1) throw bad_epsilon("degree must be >= 1");
    if (eps.size() != p || eps[0] != 1) throw bad_epsilon("eps(1) must be 1");
    for (int e : eps)
        if (e != 1 && e != -1) throw bad_epsilon("eps entries must be +-1");

    mixed_taylor_identity id;
    id.p = p;
    id.eps = eps;
    id.anchor.resize(p, 0);
    for (unsigned k = 1; k < p; ++k) id.anchor[k - 1] = (eps[k - 1] == eps[k]) ? 0 : 1;

    // triangular solve: for m = 1..p
    //   1/m! = sum_{k <= m} eps(k) (N_k / k!) [a_k = t1 ? (k == m) : 1/(m-k)!]
    auto fact = [](unsigned n) {
        bigint f = 1;
        for (unsigned i = 2; i <= n; ++i) f *= i;
        return f;
    };
    std::vector<rat> Nq(p);
    for (unsigned m = 1; m <= p; ++m) {
        rat rhs = rat(1) / rat(fact(m));
        for (unsigned k = 1; k < m; ++k) {
            if (id.anchor[k - 1] == 0) continue; // anchored at t1 contributes only k == m
            rhs -= rat(eps[k - 1]) * Nq[k - 1] / (rat(fact(k)) * rat(fact(m - k)));
        }
        Nq[m - 1] = rat(eps[m - 1]) * rhs * rat(fact(m));
    }
    id.N.resize(p);
    for (unsigned k = 1; k <= p; ++k) {
        if (Nq[k - 1].get_den() != 1 || sgn(Nq[k - 1]) <= 0)
            throw std::logic_error("mixed_taylor: constant not a positive integer");
        id.N[k - 1] = Nq[k - 1].get_num();
    }

    // verify symbolically on the generic monic P
    var t1 = intern("mt_t1"), t2 = intern("mt_t2"), y = intern("mt_y");
    std::vector<poly> C;
    poly P = poly::variable(y).pow(p);
    for (unsigned h = 0; h < p; ++h) {
        var ch = intern("mt_c" + std::to_string(h));
        C.push_back(poly::variable(ch));
        P += C[h] * poly::variable(y).pow(h);
    }
    poly t1v = poly::variable(t1), t2v = poly::variable(t2);
    poly lhs = P.substitute({{y, t2v}}) - P.substitute({{y, t1v}});
    poly rhs;
    poly diff = t2v - t1v;
    for (unsigned k = 1; k <= p; ++k) {
        poly ak = (k < p && id.anchor[k - 1] == 1) ? t2v : t1v;
        poly dk = P.derivative(y, k).substitute({{y, ak}});
        rat coef = rat(id.N[k - 1]);
        bigint f = 1;
        for (unsigned i = 2; i <= k; ++i) f *= i;
        coef /= rat(f);
        rhs += rat(eps[k - 1]) * coef * dk * diff.pow(k);
    }
    if (lhs != rhs) throw std::logic_error("mixed_taylor: identity residual nonzero");
    return id;
}

// ------------------------------------------------------------- positivity

namespace {
sos_list sos_mul(const sos_list& a, const sos_list& b) {
    sos_list r;
    for (auto& [w1, v1] : a.squares)
        for (auto& [w2, v2] : b.squares) r.squares.emplace_back(w1 * w2, v1 * v2);
    return r;
}
} // namespace

positivity_data positivity_point(const poly& P, var y) {
    unsigned p = P.degree_in(y);
    if (p % 2 == 0) throw even_degree("positivity_point: even degree");
    if (!P.is_monic_in(y)) throw not_monic("positivity_point: not monic");
    auto run = [&](const poly& Q) -> std::pair<poly, sos_list> {
        auto cs = Q.coeffs_in(y); // c_0 .. c_{p-1}, 1
        poly E(long(p));
        for (unsigned h = 0; h < p; ++h) E += cs[h] * cs[h];
        // Horner recursion: Hor_i(Q)(E) = p - i + sum_{h <= p-i-1} c_h^2 + N_i + w_i
        sos_list Ni;          // sum of squares, possibly empty
        rat wi(0);
        for (unsigned i = 1; i <= p; ++i) {
            if (i == 1) {
                Ni.squares.emplace_back(rat_of(1), cs[p - 1] + rat_of(1, 2));
                wi = rat_of(3, 4);
            } else {
                // X = p - i + 1 + sum_{h <= p-i} c_h^2 + N_{i-1} + w_{i-1}
                sos_list X;
                X.squares.emplace_back(rat(long(p) - long(i) + 1) + wi, poly(1));
                for (unsigned h = 0; h + i <= p; ++h) X.squares.emplace_back(rat_of(1), cs[h]);
                for (auto& s : Ni.squares) X.squares.push_back(s);
                // multiplier p - 1 + sum_h c_h^2 (with c_p = 1)
                sos_list M;
                M.squares.emplace_back(rat(long(p)), poly(1)); // p - 1 + 1^2
                for (unsigned h = 0; h < p; ++h) M.squares.emplace_back(rat_of(1), cs[h]);
                sos_list next = sos_mul(M, X);
                for (auto& s : Ni.squares) next.squares.push_back(s);
                next.squares.emplace_back(rat_of(1), cs[p - i] + rat_of(1, 2));
                Ni = next;
                wi += rat_of(3, 4);
            }
        }
        Ni.squares.emplace_back(wi, poly(1));
        // check: value == Q(E)
        poly val = Ni.value();
        if (val != Q.substitute({{y, E}}))
            throw std::logic_error("positivity_point: decomposition residual");
        return {E, Ni};
    };
    positivity_data out;
    auto [E, pos] = run(P);
    out.E = E;
    out.pos = pos;
    poly Pm = -P.substitute({{y, -poly::variable(y)}}); // -P(-y), monic odd
    auto [E2, pos2] = run(Pm);
    if (E2 != E) throw std::logic_error("positivity_point: asymmetric point");
    out.neg_pos = pos2;
    return out;
}

// ------------------------------------------------------------------- ivt

namespace {

struct ivt_ctx {
    var t, t1, t2;
    std::size_t budget;
};

void check_budget(const incompat& c, const ivt_ctx& cx, const char* where) {
    if (certificate_size(c) > cx.budget)
        throw budget_exceeded(std::string(where) + ": certificate too large",
                              "ivt trace: size " + std::to_string(certificate_size(c)));
}

// C_lead^{power - k} * (pseudo quotient / remainder) so that
// lead^{power} * A = quot * P + rem exactly
struct reduction {
    poly quot, rem;
};
reduction reduce_mod(const poly& A, const poly& P, var t, unsigned power, const poly& lead) {
    if (A.is_zero()) return {poly(), poly()};
    if (A.degree_in(t) < P.degree_in(t)) {
        return {poly(), A * lead.pow(power)};
    }
    auto pd = pseudo_divrem(A, P, t);
    if (pd.power > power) throw std::logic_error("reduce_mod: power too small");
    poly scale = lead.pow(power - pd.power);
    return {pd.quot * scale, pd.rem * scale};
}

incompat ivt_weak_impl(const poly& P, const ivt_ctx& cx, const incompat& in);

// base case p = 0: P is t-free
incompat ivt_base(const poly& P, const ivt_ctx& cx, const incompat& in) {
    incompat at0 = substitute_in_certificate(in, {{cx.t, poly(0)}});
    auto qi = at0.sys.find_eq(P);
    poly W;
    incompat work = at0;
    if (qi) {
        std::vector<ideal_component> kept;
        for (auto& z : work.ideal) {
            if (z.index == *qi) W += z.cofactor;
            else kept.push_back(z);
        }
        work.ideal = kept;
    }
    sign_system target;
    target.add_ne(P);
    unsigned gm = target.add_ge(-(P * P)); // -P(t1) P(t2), both equal to P
    translation tr(work, target);
    if (qi) tr.claim_eq(*qi);
    term_sum A = translate_parts(work, tr, "ivt_weak(base)");
    // (S+N+Z)^2 = W^2 P^2; add W^2 * (-P^2)
    term_sum out = sum_mul(A, A, tr.out);
    out.push_back(c_term{rat_of(1), W, {{gm, 1}}});
    return from_terms(tr.out, out, "ivt_weak(base)");
}

incompat ivt_weak_impl(const poly& P, const ivt_ctx& cx, const incompat& in) {
    unsigned p = P.degree_in(cx.t);
    if (p == 0) return ivt_base(P, cx, in);
    poly lead = P.coeff_of(cx.t, p);
    poly t1v = poly::variable(cx.t1), t2v = poly::variable(cx.t2);
    poly Pt1 = P.substitute({{cx.t, t1v}});
    poly Pt2 = P.substitute({{cx.t, t2v}});
    poly out_ge = -(Pt1 * Pt2);

    auto qi = in.sys.find_eq(P);
    poly Q; // cofactor of P in the input
    incompat work = in;
    if (qi) {
        std::vector<ideal_component> kept;
        for (auto& z : work.ideal) {
            if (z.index == *qi) Q += z.cofactor;
            else kept.push_back(z);
        }
        work.ideal = kept;
    }
    if (Q.is_zero()) {
        // the root equation is unused: evaluate t = 0 and weaken
        incompat at0 = substitute_in_certificate(work, {{cx.t, poly(0)}});
        // drop the (substituted) unused equation atom if present
        if (qi) {
            translation tr(at0, {});
            tr.claim_eq(*qi);
            at0 = translate(at0, tr, "ivt_weak(noQ)");
        }
        return weaken(at0, {lead}, {out_ge}, {});
    }

    unsigned delta_t = std::max(certificate_degree(in, var_group{cx.t}), p);
    unsigned bar = delta_t + (delta_t % 2);

    // main_inc: multiply by lead^{bar} and reduce the cone roots and ideal
    // cofactors mod P; track the new cofactor Q' of P exactly
    std::vector<cone_component> red_cone;
    poly Qp = Q * lead.pow(bar);
    for (auto& c : work.cone) {
        auto rd = reduce_mod(c.root, P, cx.t, bar / 2, lead);
        red_cone.push_back({c.weight, rd.rem, c.factors});
        // lead^{bar} V^2 - rem^2 = P (quot^2 P + 2 quot rem) ... wait: see below
        poly Nel(1);
        for (auto& [i, e] : c.factors) Nel = Nel * work.sys.ge[i].pow(e);
        Qp += c.weight * Nel * (rd.quot * rd.quot * P + rat_of(2) * (rd.quot * rd.rem));
    }
    std::vector<ideal_component> red_ideal;
    for (auto& z : work.ideal) {
        auto rd = reduce_mod(z.cofactor, P, cx.t, bar, lead);
        red_ideal.push_back({rd.rem, z.index});
        Qp += rd.quot * work.sys.eq[z.index];
    }
    // main identity: S lead^{bar} + sum red_cone + sum red_ideal + Q' P = 0
    {
        poly chk = work.expand_monoid() * lead.pow(bar);
        incompat probe = work;
        probe.cone = red_cone;
        probe.ideal = red_ideal;
        for (std::size_t k = 0; k < red_cone.size(); ++k) chk += probe.expand_cone(k);
        for (std::size_t k = 0; k < red_ideal.size(); ++k) chk += probe.expand_ideal(k);
        if (chk + Qp * P != poly())
            throw std::logic_error("ivt_weak: reduced identity residual");
    }

    // helper: assemble the reduced certificate terms over a target system,
    // with the P-cofactor terms handed to the caller
    unsigned q = Qp.is_zero() ? 0 : Qp.degree_in(cx.t);
    if (Qp.is_zero() || p == 1) {
        // evaluate t = 0 in the reduced identity (Q' must vanish for p = 1)
        if (p == 1 && !Qp.is_zero()) throw std::logic_error("ivt_weak: nonzero Q' at p = 1");
        sign_system target;
        target.ne_index(lead);
        target.ge_index(out_ge);
        translation tr(work, target);
        if (qi) tr.claim_eq(*qi);
        tr.carry_rest(work);
        term_sum ts;
        {
            factor_list fs;
            for (auto& [i, e] : work.monoid.factors)
                fs = merge_factors_pub(fs, tr.out.ne_index(work.sys.ne[i]), e);
            fs = merge_factors_pub(fs, tr.out.ne_index(lead), bar);
            ts.push_back(m_term{work.monoid.scalar, fs});
        }
        for (auto& c : red_cone) {
            factor_list fs;
            for (auto& [i, e] : c.factors)
                fs = merge_factors_pub(fs, tr.out.ge_index(work.sys.ge[i]), e);
            ts.push_back(c_term{c.weight, c.root.substitute({{cx.t, poly(0)}}), fs});
        }
        for (auto& z : red_ideal) {
            if (qi && z.index == *qi) continue; // P(0) cofactor joins Q'(0) P(0): zero here
            ts.push_back(z_term{z.cofactor.substitute({{cx.t, poly(0)}}),
                                tr.out.eq_index(work.sys.eq[z.index])});
        }
        return from_terms(tr.out, ts, "ivt_weak(eval0)");
    }
    if (p == 1) throw std::logic_error("unreachable");

    // inner induction on k
    auto Dl = Qp.coeffs_in(cx.t); // D_0 .. D_q
    auto Qk = [&](unsigned k) {   // Q'_k = sum_{l <= k} D_l t^l
        poly r;
        for (unsigned l = 0; l <= k && l < Dl.size(); ++l)
            r += Dl[l] * poly::variable(cx.t).pow(l);
        return r;
    };

    // reduced certificate against [lead != 0, conj_{l in [k+1, q]} D_l = 0,
    // Q'_k(t) = 0, H]; the P-cofactor splits as P t^l on D_l plus P on Q'_k
    auto make_step_cert = [&](unsigned k) -> incompat {
        sign_system target;
        unsigned nl = target.add_ne(lead);
        std::vector<unsigned> dq(q + 1, 0);
        for (unsigned l = k + 1; l <= q; ++l) dq[l] = target.eq_index(Dl[l]);
        unsigned qk = target.eq_index(Qk(k));
        translation tr(work, target);
        if (qi) tr.claim_eq(*qi);
        tr.carry_rest(work);
        term_sum ts;
        {
            factor_list fs;
            for (auto& [i, e] : work.monoid.factors)
                fs = merge_factors_pub(fs, tr.out.ne_index(work.sys.ne[i]), e);
            fs = merge_factors_pub(fs, nl, bar);
            ts.push_back(m_term{work.monoid.scalar, fs});
        }
        for (auto& c : red_cone) {
            factor_list fs;
            for (auto& [i, e] : c.factors)
                fs = merge_factors_pub(fs, tr.out.ge_index(work.sys.ge[i]), e);
            ts.push_back(c_term{c.weight, c.root, fs});
        }
        for (auto& z : red_ideal) {
            if (qi && z.index == *qi) continue;
            ts.push_back(z_term{z.cofactor, tr.out.eq_index(work.sys.eq[z.index])});
        }
        for (unsigned l = k + 1; l <= q; ++l)
            ts.push_back(z_term{P * poly::variable(cx.t).pow(l), dq[l]});
        ts.push_back(z_term{P, qk});
        return from_terms(tr.out, ts, "ivt_weak(step)");
    };

    // k = 0: evaluate t = 0 in the reduced identity (the P-cofactor becomes
    // D_0 P(0) since Q'(0) = D_0)
    incompat cert_k = [&]() -> incompat {
        sign_system target;
        unsigned nl = target.add_ne(lead);
        std::vector<unsigned> dq(q + 1, 0);
        for (unsigned l = 0; l <= q; ++l) dq[l] = target.eq_index(Dl[l]);
        translation tr(work, target);
        if (qi) tr.claim_eq(*qi);
        tr.carry_rest(work);
        term_sum ts;
        {
            factor_list fs;
            for (auto& [i, e] : work.monoid.factors)
                fs = merge_factors_pub(fs, tr.out.ne_index(work.sys.ne[i]), e);
            fs = merge_factors_pub(fs, nl, bar);
            ts.push_back(m_term{work.monoid.scalar, fs});
        }
        for (auto& c : red_cone) {
            factor_list fs;
            for (auto& [i, e] : c.factors)
                fs = merge_factors_pub(fs, tr.out.ge_index(work.sys.ge[i]), e);
            ts.push_back(c_term{c.weight, c.root.substitute({{cx.t, poly(0)}}), fs});
        }
        for (auto& z : red_ideal) {
            if (qi && z.index == *qi) continue;
            ts.push_back(z_term{z.cofactor.substitute({{cx.t, poly(0)}}),
                                tr.out.eq_index(work.sys.eq[z.index])});
        }
        ts.push_back(z_term{P.substitute({{cx.t, poly(0)}}), dq[0]});
        return from_terms(tr.out, ts, "ivt_weak(k0)");
    }();

    for (unsigned k = 0; k <= q; ++k) {
        check_budget(cert_k, cx, "ivt inner induction");
        // (a) + (b): recurse on Q'_k to get the D_k != 0 branch
        incompat step = make_step_cert(k);
        incompat branch_ne = ivt_weak_impl(Qk(k), cx, step);
        // branch_ne certifies [D_k != 0, -Q'_k(t1) Q'_k(t2) >= 0, lead != 0,
        // D_l = 0 (l > k), H]
        // (c): rewrite the previous product atom using
        //   Q'_{k-1}(t1) Q'_{k-1}(t2) = Q'_k(t1) Q'_k(t2) + D_k * G_k
        incompat branch_eq = [&]() -> incompat {
            poly Qk1t1 = Qk(k).substitute({{cx.t, t1v}});
            poly Qk1t2 = Qk(k).substitute({{cx.t, t2v}});
            poly new_atom = -(Qk1t1 * Qk1t2);
            if (k == 0) return weaken(cert_k, {}, {new_atom}, {});
            poly Qk0t1 = Qk(k - 1).substitute({{cx.t, t1v}});
            poly Qk0t2 = Qk(k - 1).substitute({{cx.t, t2v}});
            poly old_atom = -(Qk0t1 * Qk0t2);
            poly G = -(t1v.pow(k) * Qk1t2) - (t2v.pow(k) * Qk1t1) + Dl[k] * (t1v.pow(k) * t2v.pow(k));
            // old_atom = new_atom + D_k * (-G)
            if (old_atom != new_atom - Dl[k] * G)
                throw std::logic_error("ivt_weak: product rewriting identity failed");
            auto gi = cert_k.sys.find_ge(old_atom);
            if (!gi) return weaken(cert_k, {}, {new_atom}, {});
            sign_system target;
            unsigned ga = target.add_ge(new_atom);
            unsigned dk = target.eq_index(Dl[k]);
            translation tr(cert_k, target);
            tr.claim_ge(*gi) = {c_term{rat_of(1), poly(1), {{ga, 1}}}, z_term{-G, dk}};
            return translate(cert_k, tr, "ivt_weak(rewrite)");
        }();
        // (d): case split on D_k
        cert_k = wi_case_ne_eq(Dl[k], branch_ne, branch_eq);
        check_budget(cert_k, cx, "ivt case split");
    }

    // final assembly: cert_k certifies [lead != 0, -Q'(t1) Q'(t2) >= 0, H]
    poly Qpt1 = Qp.substitute({{cx.t, t1v}});
    poly Qpt2 = Qp.substitute({{cx.t, t2v}});
    poly prod_atom = -(Qpt1 * Qpt2);
    auto ga = cert_k.sys.find_ge(prod_atom);
    incompat folded = ga ? fold_ge_even(cert_k, *ga) : cert_k;
    // split off the components odd in the product atom
    term_sum A;
    std::vector<c_term> oddc;
    sign_system cur;
    cur.add_ne(lead);
    unsigned gm = cur.add_ge(out_ge);
    {
        translation tr(folded, cur);
        if (ga) tr.claim_ge(*ga);
        tr.carry_rest(folded);
        A.push_back(m_term{folded.monoid.scalar, [&] {
                        factor_list fs;
                        for (auto& [i, e] : folded.monoid.factors)
                            fs = merge_factors_pub(fs, tr.out.ne_index(folded.sys.ne[i]), e);
                        return fs;
                    }()});
        for (auto& c : folded.cone) {
            unsigned ae = 0;
            factor_list fs;
            for (auto& [i, e] : c.factors) {
                if (ga && i == *ga) ae = e;
                else fs = merge_factors_pub(fs, tr.out.ge_index(folded.sys.ge[i]), e);
            }
            if (ae == 0) A.push_back(c_term{c.weight, c.root, fs});
            else oddc.push_back(c_term{c.weight, c.root, fs});
        }
        for (auto& z : folded.ideal)
            A.push_back(z_term{z.cofactor, tr.out.eq_index(folded.sys.eq[z.index])});
        cur = tr.out;
    }
    // main_inc evaluated at t1 and t2, with the P-cofactor moved right:
    // C and D sums have values -Q'(t1)P(t1), -Q'(t2)P(t2)
    auto eval_main = [&](const poly& tv) -> term_sum {
        term_sum ts;
        {
            factor_list fs;
            for (auto& [i, e] : work.monoid.factors)
                fs = merge_factors_pub(fs, cur.ne_index(work.sys.ne[i]), e);
            fs = merge_factors_pub(fs, cur.ne_index(lead), bar);
            ts.push_back(m_term{work.monoid.scalar, fs});
        }
        std::map<var, poly> sub{{cx.t, tv}};
        for (auto& c : red_cone) {
            factor_list fs;
            for (auto& [i, e] : c.factors)
                fs = merge_factors_pub(fs, cur.ge_index(work.sys.ge[i]), e);
            ts.push_back(c_term{c.weight, c.root.substitute(sub), fs});
        }
        for (auto& z : red_ideal) {
            if (qi && z.index == *qi) continue;
            ts.push_back(z_term{z.cofactor.substitute(sub), cur.eq_index(work.sys.eq[z.index])});
        }
        return ts;
    };
    term_sum C = eval_main(t1v), D = eval_main(t2v);
    term_sum out = sum_mul(sum_mul(A, C, cur), D, cur);
    poly qq = Qpt1 * Qpt2;
    for (auto& b : oddc) out.push_back(c_term{b.weight, b.root * qq, merge_factors_pub(b.gef, gm, 1)});
    incompat fin = from_terms(cur, out, "ivt_weak(final)");
    check_budget(fin, cx, "ivt final");
    return fin;
}

} // namespace

factor_list merge_factors_pub(const factor_list& fs, unsigned idx, unsigned e) {
    factor_list r = fs;
    for (auto& [i, k] : r)
        if (i == idx) {
            k += e;
            std::sort(r.begin(), r.end());
            return r;
        }
    r.emplace_back(idx, e);
    std::sort(r.begin(), r.end());
    return r;
}

incompat ivt_weak(const poly& P, var t, var t1, var t2, const incompat& in,
                  const ivt_options& opt) {
    ivt_ctx cx{t, t1, t2, opt.term_budget};
    return ivt_weak_impl(P, cx, in);
}

incompat odd_root_weak(const poly& P, var t, const incompat& in, const ivt_options& opt) {
    if (!P.is_monic_in(t)) throw not_monic("odd_root_weak");
    if (P.degree_in(t) % 2 == 0) throw even_degree("odd_root_weak");
    var t1 = fresh_var("t"), t2 = fresh_var("t");
    incompat mid = ivt_weak(P, t, t1, t2, in, opt);
    positivity_data pd = positivity_point(P, t);
    // substitute t1 = E, t2 = -E
    incompat sub = substitute_in_certificate(mid, {{t1, pd.E}, {t2, -pd.E}});
    // lead = 1: drop the constant ne atom; the >= atom becomes
    // -P(E) P(-E) = P(E) * (-P(-E)) with explicit cone value
    poly atom = sub.sys.ge.empty() ? poly() : poly();
    poly Pt1 = P.substitute({{t, pd.E}});
    poly Pt2 = P.substitute({{t, -pd.E}});
    poly ge_atom = -(Pt1 * Pt2);
    sos_list prod = sos_mul_pub(pd.pos, pd.neg_pos);
    if (prod.value() != ge_atom) throw std::logic_error("odd_root_weak: cone value mismatch");
    sign_system target;
    translation tr(sub, target);
    if (auto gi = sub.sys.find_ge(ge_atom)) {
        auto& img = tr.claim_ge(*gi);
        for (auto& [w, v] : prod.squares) img.push_back(c_term{w, v, {}});
    }
    if (auto ni = sub.sys.find_ne(poly(1))) tr.claim_ne(*ni) = {m_term{rat_of(1), {}}};
    (void)atom;
    return translate(sub, tr, "odd_root_weak");
}

sos_list sos_mul_pub(const sos_list& a, const sos_list& b) {
    sos_list r;
    for (auto& [w1, v1] : a.squares)
        for (auto& [w2, v2] : b.squares) r.squares.emplace_back(w1 * w2, v1 * v2);
    return r;
}

} // namespace psatz
