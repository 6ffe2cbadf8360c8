#include "psatz/infer.hpp"

#include <algorithm>

namespace psatz {

// ----------------------------------------------------------------- algebra

poly term_value(const term& t, const sign_system& sys) {
    if (auto* m = std::get_if<m_term>(&t)) {
        poly r(m->scalar);
        for (auto& [i, e] : m->nef) r = r * sys.ne.at(i).pow(e);
        return r;
    }
    if (auto* c = std::get_if<c_term>(&t)) {
        poly r = c->root * c->root * c->weight;
        for (auto& [i, e] : c->gef) r = r * sys.ge.at(i).pow(e);
        return r;
    }
    auto& z = std::get<z_term>(t);
    return z.cof * sys.eq.at(z.eq);
}

poly sum_value(const term_sum& ts, const sign_system& sys) {
    poly r;
    for (auto& t : ts) r += term_value(t, sys);
    return r;
}

namespace {
factor_list merge_factors(const factor_list& a, const factor_list& b) {
    factor_list r = a;
    for (auto& [i, e] : b) {
        bool found = false;
        for (auto& [j, f] : r)
            if (j == i) {
                f += e;
                found = true;
                break;
            }
        if (!found) r.emplace_back(i, e);
    }
    std::sort(r.begin(), r.end());
    return r;
}

// product of the ne polys with halved exponents (all exponents even)
poly half_power(const factor_list& nef, const sign_system& sys) {
    poly r(1);
    for (auto& [i, e] : nef) {
        if (e % 2 != 0) throw std::logic_error("half_power: odd monoid exponent");
        r = r * sys.ne.at(i).pow(e / 2);
    }
    return r;
}
} // namespace

term term_mul(const term& a, const term& b, const sign_system& sys) {
    if (std::holds_alternative<z_term>(a) || std::holds_alternative<z_term>(b)) {
        const z_term* z = std::get_if<z_term>(&a);
        const term& other = z ? b : a;
        if (!z) z = &std::get<z_term>(b);
        return z_term{z->cof * term_value(other, sys), z->eq};
    }
    if (auto* ma = std::get_if<m_term>(&a)) {
        if (auto* mb = std::get_if<m_term>(&b))
            return m_term{ma->scalar * mb->scalar, merge_factors(ma->nef, mb->nef)};
        auto& cb = std::get<c_term>(b);
        return c_term{ma->scalar * cb.weight, cb.root * half_power(ma->nef, sys), cb.gef};
    }
    auto& ca = std::get<c_term>(a);
    if (auto* mb = std::get_if<m_term>(&b))
        return c_term{ca.weight * mb->scalar, ca.root * half_power(mb->nef, sys), ca.gef};
    auto& cb = std::get<c_term>(b);
    return c_term{ca.weight * cb.weight, ca.root * cb.root, merge_factors(ca.gef, cb.gef)};
}

term_sum sum_mul(const term_sum& a, const term_sum& b, const sign_system& sys) {
    term_sum r;
    r.reserve(a.size() * b.size());
    for (auto& ta : a)
        for (auto& tb : b) r.push_back(term_mul(ta, tb, sys));
    return r;
}

term_sum sum_pow(const term_sum& a, unsigned e, const sign_system& sys) {
    term_sum r = {m_term{}};
    term_sum base = a;
    while (e) {
        if (e & 1) r = sum_mul(r, base, sys);
        e >>= 1;
        if (e) base = sum_mul(base, base, sys);
    }
    return r;
}

term term_scale(const term& t, const rat& positive) {
    if (sgn(positive) <= 0) throw std::logic_error("term_scale: nonpositive scalar");
    term r = t;
    if (auto* m = std::get_if<m_term>(&r)) m->scalar *= positive;
    else if (auto* c = std::get_if<c_term>(&r)) c->weight *= positive;
    else std::get<z_term>(r).cof = std::get<z_term>(r).cof * positive;
    return r;
}

term_sum to_terms(const incompat& inc) {
    term_sum ts;
    ts.push_back(m_term{inc.monoid.scalar, inc.monoid.factors});
    for (auto& c : inc.cone) ts.push_back(c_term{c.weight, c.root, c.factors});
    for (auto& z : inc.ideal) ts.push_back(z_term{z.cofactor, z.index});
    return ts;
}

incompat from_terms(const sign_system& sys, const term_sum& ts, const std::string& where) {
    incompat out;
    out.sys = sys;
    bool have_monoid = false;
    for (auto& t : ts) {
        if (auto* m = std::get_if<m_term>(&t)) {
            if (!have_monoid) {
                out.monoid.scalar = m->scalar;
                out.monoid.factors = m->nef;
                std::sort(out.monoid.factors.begin(), out.monoid.factors.end());
                have_monoid = true;
            } else {
                // demote: an even ne power is a square
                out.cone.push_back({m->scalar, half_power(m->nef, sys), {}});
            }
        } else if (auto* c = std::get_if<c_term>(&t)) {
            if (c->root.is_zero() || sgn(c->weight) == 0) continue;
            cone_component cc{c->weight, c->root, c->gef};
            std::sort(cc.factors.begin(), cc.factors.end());
            out.cone.push_back(std::move(cc));
        } else {
            auto& z = std::get<z_term>(t);
            if (z.cof.is_zero()) continue;
            out.ideal.push_back({z.cof, z.eq});
        }
    }
    if (!have_monoid) throw std::logic_error(where + ": no monoid term");
    check(out, where);
    return out;
}

// ------------------------------------------------------------- translation

translation::translation(const incompat& in, sign_system target) : out(std::move(target)) {
    ne_img.resize(in.sys.ne.size());
    ge_img.resize(in.sys.ge.size());
    eq_img.resize(in.sys.eq.size());
}

void translation::carry_rest(const incompat& in) {
    for (unsigned i = 0; i < in.sys.ne.size(); ++i)
        if (!ne_img[i]) {
            unsigned j = out.ne_index(in.sys.ne[i]);
            ne_img[i] = term_sum{m_term{rat_of(1), {{j, 2}}}};
        }
    for (unsigned i = 0; i < in.sys.ge.size(); ++i)
        if (!ge_img[i]) {
            unsigned j = out.ge_index(in.sys.ge[i]);
            ge_img[i] = term_sum{c_term{rat_of(1), poly(1), {{j, 1}}}};
        }
    for (unsigned i = 0; i < in.sys.eq.size(); ++i)
        if (!eq_img[i]) {
            unsigned j = out.eq_index(in.sys.eq[i]);
            eq_img[i] = term_sum{z_term{poly(1), j}};
        }
}

term_sum& translation::claim_ne(unsigned i) {
    ne_img.at(i) = term_sum{};
    return *ne_img[i];
}
term_sum& translation::claim_ge(unsigned i) {
    ge_img.at(i) = term_sum{};
    return *ge_img[i];
}
term_sum& translation::claim_eq(unsigned i) {
    eq_img.at(i) = term_sum{};
    return *eq_img[i];
}

term_sum translate_parts(const incompat& in, translation& tr, const std::string& where) {
    tr.carry_rest(in);
    for (auto& img : tr.eq_img)
        for (auto& t : *img)
            if (!std::holds_alternative<z_term>(t))
                throw std::logic_error(where + ": eq image with non-ideal term");
    term_sum ts;
    // monoid: ne images stand for the squared atom
    {
        term_sum acc = {m_term{in.monoid.scalar, {}}};
        for (auto& [i, e] : in.monoid.factors) {
            if (e % 2 != 0) throw std::logic_error(where + ": odd monoid exponent");
            acc = sum_mul(acc, sum_pow(*tr.ne_img[i], e / 2, tr.out), tr.out);
        }
        ts.insert(ts.end(), acc.begin(), acc.end());
    }
    for (auto& c : in.cone) {
        term_sum acc = {c_term{c.weight, c.root, {}}};
        for (auto& [i, e] : c.factors) acc = sum_mul(acc, sum_pow(*tr.ge_img[i], e, tr.out), tr.out);
        ts.insert(ts.end(), acc.begin(), acc.end());
    }
    for (auto& z : in.ideal) {
        for (auto& t : *tr.eq_img[z.index]) {
            auto& zi = std::get<z_term>(t);
            ts.push_back(z_term{z.cofactor * zi.cof, zi.eq});
        }
    }
    return ts;
}

incompat translate(const incompat& in, translation& tr, const std::string& where) {
    term_sum ts = translate_parts(in, tr, where);
    return from_terms(tr.out, ts, where);
}

incompat weaken(const incompat& in, const std::vector<poly>& add_ne,
                const std::vector<poly>& add_ge, const std::vector<poly>& add_eq) {
    incompat out = in;
    for (auto& p : add_ne) out.sys.ne_index(p);
    for (auto& p : add_ge) out.sys.ge_index(p);
    for (auto& p : add_eq) out.sys.eq_index(p);
    return out;
}

incompat multiply_certificate(const incompat& in, const term& factor, const std::string& where) {
    term_sum ts;
    for (auto& t : to_terms(in)) ts.push_back(term_mul(t, factor, in.sys));
    return from_terms(in.sys, ts, where);
}

incompat fold_ge_even(const incompat& in, unsigned ge_index) {
    incompat out = in;
    const poly& g = in.sys.ge.at(ge_index);
    for (auto& c : out.cone) {
        factor_list fs;
        for (auto& [i, e] : c.factors) {
            if (i == ge_index) {
                c.root = c.root * g.pow(e / 2);
                if (e % 2) fs.emplace_back(i, 1);
            } else {
                fs.emplace_back(i, e);
            }
        }
        c.factors = fs;
    }
    return out;
}

// ------------------------------------------------------------ basic rules

incompat wi_gt_to_ge(const poly& P, const incompat& in) { return weaken(in, {P}, {P}, {}); }

incompat wi_gt_to_ne(const poly& P, const incompat& in) { return weaken(in, {P}, {P}, {}); }

incompat wi_sq_ge(const poly& P, const incompat& in) {
    poly sq = P * P;
    auto gi = in.sys.find_ge(sq);
    if (!gi) return in;
    translation tr(in, {});
    tr.claim_ge(*gi) = {c_term{rat_of(1), P, {}}};
    return translate(in, tr, "wi_sq_ge");
}

incompat wi_ne_to_sq_gt(const poly& P, const incompat& in) {
    poly sq = P * P;
    sign_system target;
    unsigned np = target.add_ne(P);
    translation tr(in, target);
    if (auto ni = in.sys.find_ne(sq)) tr.claim_ne(*ni) = {m_term{rat_of(1), {{np, 4}}}};
    if (auto gi = in.sys.find_ge(sq)) tr.claim_ge(*gi) = {c_term{rat_of(1), P, {}}};
    return translate(in, tr, "wi_ne_to_sq_gt");
}

incompat wi_eq_mult(const poly& P, const poly& Q, const incompat& in) {
    auto qi = in.sys.find_eq(P * Q);
    if (!qi) return weaken(in, {}, {}, {P});
    sign_system target;
    unsigned ep = target.add_eq(P);
    translation tr(in, target);
    tr.claim_eq(*qi) = {z_term{Q, ep}};
    return translate(in, tr, "wi_eq_mult");
}

incompat wi_prod_ne(const std::vector<poly>& Ps, const incompat& in) {
    poly prod(1);
    for (auto& p : Ps) prod = prod * p;
    sign_system target;
    factor_list fs;
    for (auto& p : Ps) fs.emplace_back(target.ne_index(p), 2);
    translation tr(in, target);
    if (auto ni = in.sys.find_ne(prod)) tr.claim_ne(*ni) = {m_term{rat_of(1), fs}};
    return translate(in, tr, "wi_prod_ne");
}

incompat wi_prod_ge(const std::vector<poly>& Ps, const incompat& in) {
    poly prod(1);
    for (auto& p : Ps) prod = prod * p;
    sign_system target;
    factor_list fs;
    for (auto& p : Ps) fs.emplace_back(target.ge_index(p), 1);
    translation tr(in, target);
    if (auto gi = in.sys.find_ge(prod)) tr.claim_ge(*gi) = {c_term{rat_of(1), poly(1), fs}};
    return translate(in, tr, "wi_prod_ge");
}

incompat wi_prod_gt(const std::vector<poly>& Ps, const incompat& in) {
    poly prod(1);
    for (auto& p : Ps) prod = prod * p;
    sign_system target;
    factor_list nfs, gfs;
    for (auto& p : Ps) nfs.emplace_back(target.ne_index(p), 2);
    for (auto& p : Ps) gfs.emplace_back(target.ge_index(p), 1);
    translation tr(in, target);
    if (auto ni = in.sys.find_ne(prod)) tr.claim_ne(*ni) = {m_term{rat_of(1), nfs}};
    if (auto gi = in.sys.find_ge(prod)) tr.claim_ge(*gi) = {c_term{rat_of(1), poly(1), gfs}};
    return translate(in, tr, "wi_prod_gt");
}

incompat wi_scale(const rat& alpha, int sign_case, const poly& P, const incompat& in) {
    if (sign_case == 0) {
        if (sgn(alpha) == 0) return in; // 0 = 0 condition never used
        auto qi = in.sys.find_eq(alpha * P);
        if (!qi) return weaken(in, {}, {}, {P});
        sign_system target;
        unsigned ep = target.add_eq(P);
        translation tr(in, target);
        tr.claim_eq(*qi) = {z_term{poly(alpha), ep}};
        return translate(in, tr, "wi_scale");
    }
    if (sgn(alpha) == 0) throw shape_mismatch("wi_scale: zero scalar with strict case");
    // consequent atom polys
    poly cge = sgn(alpha) > 0 ? alpha * P : -(alpha * P);
    poly cne = alpha * P;
    sign_system target;
    unsigned gp = target.add_ge(P);
    translation tr(in, target);
    rat aa = sgn(alpha) > 0 ? alpha : -alpha;
    if (auto gi = in.sys.find_ge(cge)) tr.claim_ge(*gi) = {c_term{aa, poly(1), {{gp, 1}}}};
    if (sign_case > 1) {
        unsigned np = tr.out.add_ne(P);
        if (auto ni = in.sys.find_ne(cne)) tr.claim_ne(*ni) = {m_term{alpha * alpha, {{np, 2}}}};
    }
    return translate(in, tr, "wi_scale");
}

incompat wi_ge_le_to_eq(const poly& P, const incompat& in) {
    auto qi = in.sys.find_eq(P);
    if (!qi) return weaken(in, {}, {P, -P}, {});
    incompat work = in;
    poly W;
    std::vector<ideal_component> kept;
    for (auto& z : work.ideal) {
        if (z.index == *qi) W += z.cofactor;
        else kept.push_back(z);
    }
    work.ideal = kept;
    sign_system target;
    unsigned gp = target.add_ge(P);
    unsigned gm = target.add_ge(-P);
    translation tr(work, target);
    tr.claim_eq(*qi); // all occurrences stripped above
    term_sum ts = translate_parts(work, tr, "wi_ge_le_to_eq");
    if (!W.is_zero()) {
        poly one(1);
        ts.push_back(c_term{rat_of(1, 4), one + W, {{gp, 1}}});
        ts.push_back(c_term{rat_of(1, 4), one - W, {{gm, 1}}});
    }
    return from_terms(tr.out, ts, "wi_ge_le_to_eq");
}

// --------------------------------------------------------------- sum rules

namespace {
poly poly_sum(const std::vector<poly>& Ps) {
    poly s;
    for (auto& p : Ps) s += p;
    return s;
}
} // namespace

incompat wi_eq_sum(const std::vector<poly>& Ps, const incompat& in) {
    poly S = poly_sum(Ps);
    sign_system target;
    std::vector<unsigned> eqs;
    for (auto& p : Ps) eqs.push_back(target.eq_index(p));
    translation tr(in, target);
    if (auto qi = in.sys.find_eq(S)) {
        auto& img = tr.claim_eq(*qi);
        for (unsigned j = 0; j < Ps.size(); ++j) img.push_back(z_term{poly(1), eqs[j]});
    }
    return translate(in, tr, "wi_eq_sum");
}

incompat wi_ge_sum(const std::vector<poly>& Ps, unsigned mprime, const incompat& in) {
    poly S = poly_sum(Ps);
    sign_system target;
    translation tr(in, target);
    if (auto gi = in.sys.find_ge(S)) {
        auto& img = tr.claim_ge(*gi);
        for (unsigned j = 0; j < Ps.size(); ++j) {
            if (j < mprime)
                img.push_back(c_term{rat_of(1), poly(1), {{tr.out.ge_index(Ps[j]), 1}}});
            else
                img.push_back(z_term{poly(1), tr.out.eq_index(Ps[j])});
        }
    } else {
        for (unsigned j = 0; j < Ps.size(); ++j) {
            if (j < mprime) tr.out.ge_index(Ps[j]);
            else tr.out.eq_index(Ps[j]);
        }
    }
    return translate(in, tr, "wi_ge_sum");
}

namespace {
// image of (sum P_j)^2 over a target where P_1 carries `lead` roles and the
// others are eq members; used by wi_ne_sum / wi_gt_sum
term_sum square_sum_image(const std::vector<poly>& Ps, unsigned mprime, bool strict,
                          sign_system& out) {
    // (sum)^2 = sum_{i,j} P_i P_j; classify pairs
    poly S = poly_sum(Ps);
    term_sum img;
    unsigned n1 = out.ne_index(Ps[0]);
    img.push_back(m_term{rat_of(1), {{n1, 2}}});
    // cross terms between the first m' (ne/ge) members stay in the cone
    for (unsigned i = 0; i < mprime; ++i)
        for (unsigned j = 0; j < mprime; ++j) {
            if (i == 0 && j == 0) continue;
            if (i >= 1 && j >= 1 && !strict) continue; // handled below for ne case
            factor_list fs;
            fs = merge_factors({{out.ge_index(Ps[i]), 1}}, {{out.ge_index(Ps[j]), 1}});
            img.push_back(c_term{rat_of(1), poly(1), fs});
        }
    // terms touching an eq member go to the ideal; collect the rest of the
    // expansion exactly: (sum)^2 - (handled part)
    poly handled;
    for (auto& t : img) handled += term_value(t, out);
    poly rest = S * S - handled;
    // rest lies in the ideal generated by P_{m'+1..m}: peel one generator at
    // a time
    for (unsigned j = mprime; j < Ps.size() && !rest.is_zero(); ++j) {
        // rest = P_j * C_j + rest', choose C_j as the full cofactor of P_j in
        // a symmetric expansion: divide greedily
        // (sum)^2 terms with P_j: P_j * (2*sum_{i<j} P_i + P_j) for i ranges;
        // simpler: subtract P_j * B_j with B_j = 2*sum_{i<j}P_i + P_j
        poly Bj;
        for (unsigned i = 0; i < j; ++i) Bj += rat_of(2) * Ps[i];
        Bj += Ps[j];
        img.push_back(z_term{Bj, out.eq_index(Ps[j])});
        rest -= Ps[j] * Bj;
    }
    if (!rest.is_zero()) throw std::logic_error("square_sum_image: residual");
    return img;
}
} // namespace

incompat wi_ne_sum(const std::vector<poly>& Ps, const incompat& in) {
    poly S = poly_sum(Ps);
    sign_system target;
    translation tr(in, target);
    if (auto ni = in.sys.find_ne(S)) {
        tr.claim_ne(*ni) = square_sum_image(Ps, 1, false, tr.out);
    } else {
        tr.out.ne_index(Ps[0]);
    }
    return translate(in, tr, "wi_ne_sum");
}

incompat wi_gt_sum(const std::vector<poly>& Ps, unsigned mprime, const incompat& in) {
    poly S = poly_sum(Ps);
    sign_system target;
    translation tr(in, target);
    tr.out.ne_index(Ps[0]);
    tr.out.ge_index(Ps[0]);
    if (auto ni = in.sys.find_ne(S)) tr.claim_ne(*ni) = square_sum_image(Ps, mprime, true, tr.out);
    if (auto gi = in.sys.find_ge(S)) {
        auto& img = tr.claim_ge(*gi);
        for (unsigned j = 0; j < Ps.size(); ++j) {
            if (j < mprime)
                img.push_back(c_term{rat_of(1), poly(1), {{tr.out.ge_index(Ps[j]), 1}}});
            else
                img.push_back(z_term{poly(1), tr.out.eq_index(Ps[j])});
        }
    }
    return translate(in, tr, "wi_gt_sum");
}

incompat wi_linear_comb_zero(const std::vector<lin_rel>& rels, const incompat& in) {
    sign_system target;
    translation tr(in, target);
    for (auto& rel : rels) {
        poly chk;
        for (auto& [P, Q] : rel.parts) chk += P * Q;
        if (chk != rel.target) throw std::logic_error("wi_linear_comb_zero: relation does not expand");
        auto qi = in.sys.find_eq(rel.target);
        if (!qi) {
            for (auto& [P, Q] : rel.parts) tr.out.eq_index(P);
            continue;
        }
        auto& img = tr.claim_eq(*qi);
        for (auto& [P, Q] : rel.parts) img.push_back(z_term{Q, tr.out.eq_index(P)});
    }
    return translate(in, tr, "wi_linear_comb_zero");
}

// ------------------------------------------------------------ factor rules

incompat wi_prod_ge_pos(const poly& P1, const poly& P2, const incompat& in) {
    incompat w = in;
    auto g1 = w.sys.find_ge(P1);
    if (g1) w = fold_ge_even(w, *g1);
    sign_system target;
    unsigned np2 = target.add_ne(P2);
    unsigned g12 = target.add_ge(P1 * P2);
    unsigned gp2 = target.add_ge(P2);
    translation tr(w, target);
    if (g1) tr.claim_ge(*g1); // occurrences rewritten below
    tr.carry_rest(w);

    term_sum ts;
    ts.push_back(m_term{w.monoid.scalar, [&] {
                      factor_list fs;
                      for (auto& [i, e] : w.monoid.factors)
                          fs = merge_factors(fs, {{tr.out.ne_index(w.sys.ne[i]), e}});
                      return merge_factors(fs, {{np2, 2}});
                  }()});
    for (auto& c : w.cone) {
        unsigned p1e = 0;
        factor_list fs;
        for (auto& [i, e] : c.factors) {
            if (g1 && i == *g1) p1e = e;
            else {
                auto img = std::get<c_term>((*tr.ge_img[i])[0]);
                fs = merge_factors(fs, {{img.gef[0].first, e}});
            }
        }
        if (p1e == 0) {
            ts.push_back(c_term{c.weight, c.root * P2, fs});
        } else if (p1e == 1) {
            ts.push_back(c_term{c.weight, c.root, merge_factors(fs, {{g12, 1}, {gp2, 1}})});
        } else {
            throw std::logic_error("wi_prod_ge_pos: unexpected exponent after folding");
        }
    }
    poly p2sq = P2 * P2;
    for (auto& z : w.ideal) {
        unsigned j = std::get<z_term>((*tr.eq_img[z.index])[0]).eq;
        ts.push_back(z_term{z.cofactor * p2sq, j});
    }
    return from_terms(tr.out, ts, "wi_prod_ge_pos");
}

incompat wi_prod_gt_pos(const poly& P1, const poly& P2, const incompat& in) {
    auto n1 = in.sys.find_ne(P1);
    unsigned e = 0;
    if (n1) {
        for (auto& [i, k] : in.monoid.factors)
            if (i == *n1) e = k / 2;
    }
    if (e == 0) {
        incompat out = wi_prod_ge_pos(P1, P2, in);
        out.sys.ne_index(P1 * P2);
        check(out, "wi_prod_gt_pos");
        return out;
    }
    incompat w = in;
    auto g1 = w.sys.find_ge(P1);
    if (g1) w = fold_ge_even(w, *g1);
    sign_system target;
    unsigned n12 = target.add_ne(P1 * P2);
    unsigned g12 = target.add_ge(P1 * P2);
    unsigned np2 = target.add_ne(P2);
    unsigned gp2 = target.add_ge(P2);
    translation tr(w, target);
    if (g1) tr.claim_ge(*g1);
    tr.claim_ne(*n1);
    tr.carry_rest(w);

    term_sum ts;
    {
        factor_list fs = {{n12, 2 * e}};
        for (auto& [i, k] : w.monoid.factors) {
            if (i == *n1) {
                if (k != 2 * e) throw std::logic_error("wi_prod_gt_pos: inconsistent exponent");
                continue;
            }
            fs = merge_factors(fs, {{tr.out.ne_index(w.sys.ne[i]), k}});
        }
        ts.push_back(m_term{w.monoid.scalar, fs});
    }
    for (auto& c : w.cone) {
        unsigned p1e = 0;
        factor_list fs;
        for (auto& [i, k] : c.factors) {
            if (g1 && i == *g1) p1e = k;
            else {
                auto img = std::get<c_term>((*tr.ge_img[i])[0]);
                fs = merge_factors(fs, {{img.gef[0].first, k}});
            }
        }
        if (p1e == 0) {
            ts.push_back(c_term{c.weight, c.root * P2.pow(e), fs});
        } else {
            ts.push_back(c_term{c.weight, c.root * P2.pow(e - 1),
                                merge_factors(fs, {{g12, 1}, {gp2, 1}})});
        }
    }
    poly p2e = P2.pow(2 * e);
    for (auto& z : w.ideal) {
        unsigned j = std::get<z_term>((*tr.eq_img[z.index])[0]).eq;
        ts.push_back(z_term{z.cofactor * p2e, j});
    }
    return from_terms(tr.out, ts, "wi_prod_gt_pos");
}

incompat wi_sum_prod_pos(const poly& P1, const poly& P2, const incompat& in) {
    incompat w = in;
    auto g1 = w.sys.find_ge(P1);
    auto g2 = w.sys.find_ge(P2);
    if (g1) w = fold_ge_even(w, *g1);
    if (g2 && g2 != g1) w = fold_ge_even(w, *g2);
    poly S = P1 + P2, Pr = P1 * P2;
    sign_system target;
    unsigned ns = target.add_ne(S);
    unsigned gs = target.add_ge(S);
    unsigned gp = target.add_ge(Pr);
    translation tr(w, target);
    if (g1) tr.claim_ge(*g1);
    if (g2 && g2 != g1) tr.claim_ge(*g2);
    tr.carry_rest(w);

    term_sum ts;
    {
        factor_list fs = {{ns, 2}};
        for (auto& [i, k] : w.monoid.factors)
            fs = merge_factors(fs, {{tr.out.ne_index(w.sys.ne[i]), k}});
        ts.push_back(m_term{w.monoid.scalar, fs});
    }
    for (auto& c : w.cone) {
        unsigned e1 = 0, e2 = 0;
        factor_list fs;
        for (auto& [i, k] : c.factors) {
            if (g1 && i == *g1) e1 = k;
            else if (g2 && i == *g2) e2 = k;
            else {
                auto img = std::get<c_term>((*tr.ge_img[i])[0]);
                fs = merge_factors(fs, {{img.gef[0].first, k}});
            }
        }
        if (e1 == 0 && e2 == 0) {
            ts.push_back(c_term{c.weight, c.root, merge_factors(fs, {{gs, 2}})});
        } else if (e1 == 1 && e2 == 0) {
            ts.push_back(c_term{c.weight, c.root * P1, merge_factors(fs, {{gs, 1}})});
            ts.push_back(c_term{c.weight, c.root, merge_factors(fs, {{gs, 1}, {gp, 1}})});
        } else if (e1 == 0 && e2 == 1) {
            ts.push_back(c_term{c.weight, c.root * P2, merge_factors(fs, {{gs, 1}})});
            ts.push_back(c_term{c.weight, c.root, merge_factors(fs, {{gs, 1}, {gp, 1}})});
        } else if (e1 == 1 && e2 == 1) {
            ts.push_back(c_term{c.weight, c.root, merge_factors(fs, {{gp, 1}, {gs, 2}})});
        } else {
            throw std::logic_error("wi_sum_prod_pos: unexpected exponents");
        }
    }
    poly ssq = S * S;
    for (auto& z : w.ideal) {
        unsigned j = std::get<z_term>((*tr.eq_img[z.index])[0]).eq;
        ts.push_back(z_term{z.cofactor * ssq, j});
    }
    return from_terms(tr.out, ts, "wi_sum_prod_pos");
}

incompat wi_product_zero_split(const std::vector<poly>& Ps, const std::vector<incompat>& ins) {
    if (Ps.size() != ins.size() || Ps.empty())
        throw missing_branch("wi_product_zero_split: need one input per factor");
    poly prod(1);
    for (auto& p : Ps) prod = prod * p;
    sign_system target;
    unsigned qi = target.add_eq(prod);
    // translate each input into the common target, stripping its P_j = 0 comps
    term_sum product = {m_term{}};
    poly wprod(1);
    sign_system cur = target;
    std::vector<term_sum> parts;
    std::vector<poly> Ws;
    for (unsigned j = 0; j < ins.size(); ++j) {
        const incompat& inj = ins[j];
        auto qj = inj.sys.find_eq(Ps[j]);
        incompat work = inj;
        poly W;
        if (qj) {
            std::vector<ideal_component> kept;
            for (auto& z : work.ideal) {
                if (z.index == *qj) W += z.cofactor;
                else kept.push_back(z);
            }
            work.ideal = kept;
        }
        translation tr(work, cur);
        if (qj) tr.claim_eq(*qj);
        term_sum ts = translate_parts(work, tr, "wi_product_zero_split");
        cur = tr.out;
        parts.push_back(ts);
        Ws.push_back(W);
        wprod = wprod * W;
    }
    for (auto& ts : parts) product = sum_mul(product, ts, cur);
    // (-1)^{m+1} prod W_j on the product generator
    rat sign = (Ps.size() % 2 == 0) ? rat_of(-1) : rat_of(1);
    product.push_back(z_term{wprod * sign, qi});
    return from_terms(cur, product, "wi_product_zero_split");
}

// ---------------------------------------------------------- sums of squares

poly sos_list::value() const {
    poly r;
    for (auto& [w, v] : squares) r += w * (v * v);
    return r;
}

sos_list cs_identity(const std::vector<poly>& A, const std::vector<poly>& B) {
    if (A.size() != B.size() || A.empty()) throw std::invalid_argument("cs_identity: size mismatch");
    unsigned m = unsigned(A.size());
    sos_list N;
    // sum over sign vectors != (1,...,1)
    for (unsigned mask = 0; mask + 1 < (1u << m) + 1; ++mask) {
        if (mask == 0) continue; // mask bit set => sigma(j) = -1; skip all-plus
        poly t;
        for (unsigned j = 0; j < m; ++j) {
            poly ab = A[j] * B[j];
            t += (mask >> j) & 1 ? -ab : ab;
        }
        N.squares.emplace_back(rat_of(1), t);
    }
    rat w = rat(pow2(m));
    for (unsigned j = 0; j < m; ++j)
        for (unsigned j2 = 0; j2 < m; ++j2)
            if (j != j2) N.squares.emplace_back(w, A[j] * B[j2]);
    // verify the identity
    poly lhs;
    {
        poly s;
        for (unsigned j = 0; j < m; ++j) s += A[j] * B[j];
        lhs = s * s + N.value();
    }
    poly rhs;
    {
        poly sa, sb;
        for (unsigned j = 0; j < m; ++j) sa += A[j] * A[j], sb += B[j] * B[j];
        rhs = rat(pow2(m)) * (sa * sb);
    }
    if (lhs != rhs) throw std::logic_error("cs_identity: identity failed");
    return N;
}

incompat wi_sos_zero_split(const std::vector<poly>& Ps, const incompat& in) {
    poly sum_sq;
    for (auto& p : Ps) sum_sq += p * p;
    // strip the ideal components on each P_j, collecting cofactors
    incompat work = in;
    std::vector<poly> W(Ps.size());
    std::vector<std::optional<unsigned>> qs(Ps.size());
    for (unsigned j = 0; j < Ps.size(); ++j) qs[j] = work.sys.find_eq(Ps[j]);
    std::vector<ideal_component> kept;
    for (auto& z : work.ideal) {
        bool hit = false;
        for (unsigned j = 0; j < Ps.size(); ++j)
            if (qs[j] && z.index == *qs[j]) {
                W[j] += z.cofactor;
                hit = true;
                break;
            }
        if (!hit) kept.push_back(z);
    }
    work.ideal = kept;
    sign_system target;
    unsigned qq = target.add_eq(sum_sq);
    translation tr(work, target);
    for (unsigned j = 0; j < Ps.size(); ++j)
        if (qs[j]) tr.claim_eq(*qs[j]);
    // terms of (S + N + Z)^2 + N(W, P) - 2^m sum W^2 * sum P^2
    term_sum base = translate_parts(work, tr, "wi_sos_zero_split");
    term_sum out = sum_mul(base, base, tr.out);
    sos_list N = cs_identity(W, Ps);
    for (auto& [w, v] : N.squares) out.push_back(c_term{w, v, {}});
    poly wsq;
    for (auto& w : W) wsq += w * w;
    out.push_back(z_term{-(rat(pow2(unsigned(Ps.size()))) * wsq), qq});
    return from_terms(tr.out, out, "wi_sos_zero_split");
}

incompat wi_comb_ne(const std::vector<poly>& Ps, const std::vector<poly>& Qs, const incompat& in) {
    if (Ps.size() != Qs.size() || Ps.empty()) throw std::invalid_argument("wi_comb_ne: size mismatch");
    unsigned m = unsigned(Ps.size());
    poly sum_p2, sum_q2, sum_pq;
    for (unsigned j = 0; j < m; ++j) {
        sum_p2 += Ps[j] * Ps[j];
        sum_q2 += Qs[j] * Qs[j];
        sum_pq += Ps[j] * Qs[j];
    }
    auto ni = in.sys.find_ne(sum_p2);
    unsigned e = 0;
    if (ni)
        for (auto& [i, k] : in.monoid.factors)
            if (i == *ni) e = k / 2;
    sign_system target;
    unsigned npq = target.add_ne(sum_pq);
    translation tr(in, target);
    if (ni) tr.claim_ne(*ni);
    tr.carry_rest(in);
    sos_list N = cs_identity(Ps, Qs);
    rat mul = rpow(rat(pow2(m)), 2 * e);
    term_sum ts;
    {
        // monoid * 2^{2me} (sum Q^2)^{2e} = S * ((sum PQ)^2 + N)^{2e}
        m_term rest{in.monoid.scalar, {}};
        for (auto& [i, k] : in.monoid.factors) {
            if (ni && i == *ni) continue;
            rest.nef = merge_factors(rest.nef, {{tr.out.ne_index(in.sys.ne[i]), k}});
        }
        term_sum expand = {m_term{rat_of(1), {{npq, 2}}}};
        for (auto& [w, v] : N.squares) expand.push_back(c_term{w, v, {}});
        term_sum powd = sum_pow(expand, 2 * e, tr.out);
        for (auto& t : powd) ts.push_back(term_mul(term(rest), t, tr.out));
    }
    poly q2e = sum_q2.pow(e);
    for (auto& c : in.cone) {
        factor_list fs;
        for (auto& [i, k] : c.factors)
            fs = merge_factors(fs, {{tr.out.ge_index(in.sys.ge[i]), k}});
        ts.push_back(c_term{c.weight * mul, c.root * q2e, fs});
    }
    poly scale = mul * sum_q2.pow(2 * e);
    for (auto& z : in.ideal)
        ts.push_back(z_term{z.cofactor * scale, tr.out.eq_index(in.sys.eq[z.index])});
    return from_terms(tr.out, ts, "wi_comb_ne");
}

// ---------------------------------------------------------------- case split

incompat wi_case_ne_eq(const poly& P, const incompat& in_ne, const incompat& in_eq) {
    auto ni = in_ne.sys.find_ne(P);
    unsigned e = 0;
    if (ni)
        for (auto& [i, k] : in_ne.monoid.factors)
            if (i == *ni) e = k / 2;
    if (e == 0) {
        // drop the unused atom
        incompat work = in_ne;
        if (ni) {
            translation tr(work, {});
            tr.claim_ne(*ni); // verified unused via final check
            return translate(work, tr, "wi_case_ne_eq");
        }
        return work;
    }
    // strip P-components from the eq branch
    auto qi = in_eq.sys.find_eq(P);
    incompat work = in_eq;
    poly W;
    if (qi) {
        std::vector<ideal_component> kept;
        for (auto& z : work.ideal) {
            if (z.index == *qi) W += z.cofactor;
            else kept.push_back(z);
        }
        work.ideal = kept;
    }
    // common output system
    sign_system target;
    translation tr2(work, target);
    if (qi) tr2.claim_eq(*qi);
    term_sum B = translate_parts(work, tr2, "wi_case_ne_eq");

    // now bring the ne branch over the same system
    translation tr1(in_ne, tr2.out);
    tr1.claim_ne(*ni); // handled manually
    tr1.carry_rest(in_ne);
    term_sum ts;
    // S1 * B^{2e} (B's value is -W*P)
    {
        m_term s1{in_ne.monoid.scalar, {}};
        for (auto& [i, k] : in_ne.monoid.factors) {
            if (i == *ni) continue;
            s1.nef = merge_factors(s1.nef, {{tr1.out.ne_index(in_ne.sys.ne[i]), k}});
        }
        term_sum c = sum_mul({term(s1)}, sum_pow(B, 2 * e, tr1.out), tr1.out);
        ts.insert(ts.end(), c.begin(), c.end());
    }
    if (!W.is_zero()) {
        poly w2e = W.pow(2 * e), we = W.pow(e);
        for (auto& c : in_ne.cone) {
            factor_list fs;
            for (auto& [i, k] : c.factors)
                fs = merge_factors(fs, {{tr1.out.ge_index(in_ne.sys.ge[i]), k}});
            ts.push_back(c_term{c.weight, c.root * we, fs});
        }
        for (auto& z : in_ne.ideal)
            ts.push_back(z_term{z.cofactor * w2e, tr1.out.eq_index(in_ne.sys.eq[z.index])});
    }
    return from_terms(tr1.out, ts, "wi_case_ne_eq");
}

incompat wi_case_pos_neg(const poly& P, const incompat& in_pos, const incompat& in_neg) {
    sign_system cur;
    cur.add_ne(P);
    // split a branch into (terms with even atom power, comps with one odd
    // power stripped); the negated ne atom is normalized to P
    auto split = [&P, &cur](const incompat& inb, const poly& atom)
        -> std::pair<term_sum, std::vector<c_term>> {
        incompat w = inb;
        auto gi = w.sys.find_ge(atom);
        if (gi) w = fold_ge_even(w, *gi);
        translation tr(w, cur);
        if (gi) tr.claim_ge(*gi);
        if (auto nm = w.sys.find_ne(-P))
            tr.claim_ne(*nm) = {m_term{rat_of(1), {{cur.ne_index(P), 2}}}};
        tr.carry_rest(w);
        term_sum even;
        std::vector<c_term> odd;
        {
            term_sum acc = {m_term{w.monoid.scalar, {}}};
            for (auto& [i, k] : w.monoid.factors)
                acc = sum_mul(acc, sum_pow(*tr.ne_img[i], k / 2, tr.out), tr.out);
            even.insert(even.end(), acc.begin(), acc.end());
        }
        for (auto& c : w.cone) {
            unsigned ae = 0;
            factor_list fs;
            for (auto& [i, k] : c.factors) {
                if (gi && i == *gi) ae = k;
                else {
                    auto img = std::get<c_term>((*tr.ge_img[i])[0]);
                    fs = merge_factors(fs, {{img.gef[0].first, k}});
                }
            }
            if (ae == 0) even.push_back(c_term{c.weight, c.root, fs});
            else odd.push_back(c_term{c.weight, c.root, fs});
        }
        for (auto& z : w.ideal)
            even.push_back(z_term{z.cofactor, std::get<z_term>((*tr.eq_img[z.index])[0]).eq});
        cur = tr.out;
        return {even, odd};
    };
    auto [A1, odd1] = split(in_pos, P);
    auto [A2, odd2] = split(in_neg, -P);
    // A1 = -N1' P ; A2 = +N2' P  (values) ; A1*A2 + N1' N2' P^2 = 0
    term_sum ts = sum_mul(A1, A2, cur);
    for (auto& c1 : odd1)
        for (auto& c2 : odd2)
            ts.push_back(c_term{c1.weight * c2.weight, c1.root * c2.root * P,
                                merge_factors(c1.gef, c2.gef)});
    return from_terms(cur, ts, "wi_case_pos_neg");
}

incompat wi_trichotomy(const poly& P, const incompat& in_pos, const incompat& in_neg,
                       const incompat& in_eq) {
    incompat ne_branch = wi_case_pos_neg(P, in_pos, in_neg);
    return wi_case_ne_eq(P, ne_branch, in_eq);
}

incompat wi_multi_case_eq(const std::vector<poly>& Ps,
                          const std::function<incompat(unsigned)>& branch) {
    unsigned m = unsigned(Ps.size());
    std::function<incompat(unsigned, unsigned)> rec = [&](unsigned k, unsigned J) -> incompat {
        // certificates over P_1..P_k with fixed J on those; remaining free
        if (k == 0) return branch(J);
        return wi_case_ne_eq(Ps[k - 1], rec(k - 1, J), rec(k - 1, J | (1u << (k - 1))));
    };
    return rec(m, 0);
}

incompat wi_multi_case_sign(const std::vector<poly>& Ps,
                            const std::function<incompat(unsigned)>& branch) {
    unsigned m = unsigned(Ps.size());
    std::function<incompat(unsigned, unsigned)> rec = [&](unsigned k, unsigned J) -> incompat {
        if (k == 0) return branch(J);
        return wi_case_pos_neg(Ps[k - 1], rec(k - 1, J | (1u << (k - 1))), rec(k - 1, J));
    };
    return rec(m, 0);
}

incompat wi_multi_case_full(const std::vector<poly>& Ps,
                            const std::function<incompat(unsigned, unsigned)>& branch) {
    return wi_multi_case_eq(Ps, [&](unsigned J) -> incompat {
        std::vector<poly> rest;
        std::vector<unsigned> idx;
        for (unsigned j = 0; j < Ps.size(); ++j)
            if (!((J >> j) & 1)) {
                rest.push_back(Ps[j]);
                idx.push_back(j);
            }
        if (rest.empty()) return branch(J, 0);
        return wi_multi_case_sign(rest, [&](unsigned Jp) -> incompat {
            unsigned full = 0;
            for (unsigned r = 0; r < idx.size(); ++r)
                if ((Jp >> r) & 1) full |= 1u << idx[r];
            return branch(J, full);
        });
    });
}

} // namespace psatz
