#include "psatz/roots.hpp"

#include <algorithm>

namespace psatz {

namespace {

// plain monic Euclid over Q[y]; independent of the signed subresultant path
poly gcd_poly(poly a, poly b, var y) {
    auto monic = [&](poly p) {
        if (p.is_zero()) return p;
        unsigned d = p.degree_in(y);
        poly lc = p.coeff_of(y, d);
        return p * (rat_of(1) / lc.constant_value());
    };
    if (a.degree_in(y) < b.degree_in(y)) std::swap(a, b);
    a = monic(a);
    b = monic(b);
    while (!b.is_zero()) {
        if (b.degree_in(y) == 0) return poly(1);
        auto [q, r] = quot_rem(a, b, y);
        (void)q;
        a = b;
        b = monic(r);
    }
    return a;
}

poly squarefree_part(const poly& P, var y) {
    if (P.degree_in(y) <= 1) return P;
    poly g = gcd_poly(P, P.derivative(y), y);
    if (g.degree_in(y) == 0) return P;
    return exact_div(P, g, y);
}

// interval Horner evaluation of P over [lo, hi]
std::pair<rat, rat> horner_interval(const std::vector<rat>& cs, const rat& lo, const rat& hi) {
    rat a(0), b(0);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        rat c1 = a * lo, c2 = a * hi, c3 = b * lo, c4 = b * hi;
        rat nlo = std::min(std::min(c1, c2), std::min(c3, c4)) + *it;
        rat nhi = std::max(std::max(c1, c2), std::max(c3, c4)) + *it;
        a = nlo;
        b = nhi;
    }
    return {a, b};
}

std::vector<rat> rat_coeffs(const poly& P, var y) {
    std::vector<rat> cs;
    for (auto& c : P.coeffs_in(y)) {
        if (!c.is_constant()) throw std::invalid_argument("roots: polynomial not univariate");
        cs.push_back(c.constant_value());
    }
    return cs;
}

rat eval_at(const std::vector<rat>& cs, const rat& x) {
    rat v(0);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) v = v * x + *it;
    return v;
}

// Cauchy root bound
rat root_bound(const std::vector<rat>& cs) {
    rat lead = cs.back();
    rat m(0);
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) m = std::max(m, rat(abs(cs[i] / lead)));
    return m + 1;
}

// one root in (lo, hi), signs at the ends nonzero and opposite
isolated_root bisect_to_root(const std::vector<rat>& cs, rat lo, rat hi) {
    int slo = sgn(eval_at(cs, lo));
    for (int it = 0; it < 8; ++it) {
        rat mid = (lo + hi) / 2;
        rat v = eval_at(cs, mid);
        if (sgn(v) == 0) return {mid, mid};
        if (sgn(v) == slo) lo = mid;
        else hi = mid;
    }
    return {lo, hi};
}

std::vector<isolated_root> isolate_sf(const poly& sf, var y) {
    unsigned d = sf.degree_in(y);
    std::vector<isolated_root> out;
    if (d == 0) return out;
    auto cs = rat_coeffs(sf, y);
    if (d == 1) {
        rat r0 = -cs[0] / cs[1];
        out.push_back({r0, r0});
        return out;
    }
    rat B = root_bound(cs);
    // critical points partition the line into monotone pieces
    poly dsf = squarefree_part(sf.derivative(y), y);
    std::vector<isolated_root> crit = isolate_sf(dsf, y);
    std::vector<rat> pts;
    pts.push_back(-B);
    for (auto r : crit) {
        if (!r.exact()) {
            // refine until sf has a definite sign over the interval
            for (;;) {
                auto iv = horner_interval(cs, r.lo, r.hi);
                if (sgn(iv.first) > 0 || sgn(iv.second) < 0) break;
                rat w = (r.hi - r.lo) / 4;
                r = refine(dsf, y, r, w);
                if (r.exact()) break;
            }
        }
        if (r.exact()) {
            if (sgn(eval_at(cs, r.lo)) == 0) out.push_back({r.lo, r.lo});
            if (r.lo > -B && r.lo < B) pts.push_back(r.lo);
            continue;
        }
        if (r.lo > -B && r.lo < B) pts.push_back(r.lo);
        if (r.hi > -B && r.hi < B) pts.push_back(r.hi);
    }
    pts.push_back(B);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        rat a = pts[i], b = pts[i + 1];
        int sa = sgn(eval_at(cs, a)), sb = sgn(eval_at(cs, b));
        if (sa == 0) {
            out.push_back({a, a});
            continue;
        }
        if (sb == 0) continue; // picked up as the left end of the next piece
        if (sa != sb) out.push_back(bisect_to_root(cs, a, b));
    }
    std::sort(out.begin(), out.end(),
              [](const isolated_root& x, const isolated_root& z) { return x.lo < z.lo; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const isolated_root& x, const isolated_root& z) {
                              return x.lo == z.lo && x.hi == z.hi;
                          }),
              out.end());
    return out;
}

} // namespace

std::vector<isolated_root> isolate_roots(const poly& P, var y) {
    if (P.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    return isolate_sf(squarefree_part(P, y), y);
}

int sign_at(const poly& P, var y, const rat& x) { return sgn(eval_at(rat_coeffs(P, y), x)); }

isolated_root refine(const poly& P, var y, isolated_root r, const rat& eps) {
    if (r.exact()) return r;
    auto cs = rat_coeffs(P, y);
    int slo = sgn(eval_at(cs, r.lo));
    while (r.hi - r.lo > eps) {
        rat mid = (r.lo + r.hi) / 2;
        int sm = sgn(eval_at(cs, mid));
        if (sm == 0) return {mid, mid};
        if (sm == slo) r.lo = mid;
        else r.hi = mid;
    }
    return r;
}

int sign_at_root(const poly& Q, const poly& P, var y, isolated_root r) {
    if (Q.is_zero()) return 0;
    poly sp = squarefree_part(P, y);
    auto qcs = rat_coeffs(Q, y);
    if (r.exact()) return sgn(eval_at(qcs, r.lo));
    auto pcs = rat_coeffs(sp, y);
    poly g = gcd_poly(sp, Q, y);
    if (g.degree_in(y) >= 1) {
        // theta is a root of Q iff g changes sign across the isolating interval
        auto gcs = rat_coeffs(g, y);
        for (;;) {
            rat glo = eval_at(gcs, r.lo), ghi = eval_at(gcs, r.hi);
            if (sgn(glo) == 0) {
                if (sgn(eval_at(pcs, r.lo)) == 0) return 0; // theta is this rational point
                r.lo = (r.lo * 3 + r.hi) / 4;
                continue;
            }
            if (sgn(ghi) == 0) {
                if (sgn(eval_at(pcs, r.hi)) == 0) return 0;
                r.hi = (r.lo + r.hi * 3) / 4;
                continue;
            }
            if (sgn(glo) != sgn(ghi)) return 0;
            break;
        }
    }
    int slo = sgn(eval_at(pcs, r.lo));
    for (;;) {
        auto iv = horner_interval(qcs, r.lo, r.hi);
        if (sgn(iv.first) > 0) return 1;
        if (sgn(iv.second) < 0) return -1;
        rat mid = (r.lo + r.hi) / 2;
        int sm = sgn(eval_at(pcs, mid));
        if (sm == 0) return sgn(eval_at(qcs, mid));
        if (sm == slo) r.lo = mid;
        else r.hi = mid;
    }
}

unsigned count_roots_with_sign(const poly& P, const poly& Q, var y, int s) {
    unsigned n = 0;
    for (auto& r : isolate_roots(P, y))
        if (sign_at_root(Q, P, y, r) == s) ++n;
    return n;
}

std::vector<rat> sample_points(const std::vector<isolated_root>& roots) {
    std::vector<rat> pts;
    if (roots.empty()) {
        pts.push_back(rat_of(0));
        return pts;
    }
    pts.push_back(roots.front().lo - 1);
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
        pts.push_back((roots[i].hi + roots[i + 1].lo) / 2);
    pts.push_back(roots.back().hi + 1);
    return pts;
}

} // namespace psatz
