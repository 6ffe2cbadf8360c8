#include "psatz/tower.hpp"

#include <cmath>
#include <sstream>

namespace psatz {

struct tower::node {
    enum class kind { leaf, sum, prod, pw } k;
    rat value;               // leaf
    std::vector<tower> kids; // sum/prod operands; pw: {base, exponent}
    // memoized results (default bit ceiling only)
    mutable bool eval_done = false;
    mutable std::optional<rat> eval_cache;
    mutable std::vector<std::pair<unsigned, std::optional<std::pair<rat, rat>>>> ival_cache;
};

tower::tower(const rat& q) {
    auto p = std::make_shared<node>();
    p->k = node::kind::leaf;
    p->value = q;
    n = std::move(p);
}

tower tower::sum(std::vector<tower> ts) {
    if (ts.size() == 1) return ts[0];
    auto p = std::make_shared<node>();
    p->k = node::kind::sum;
    p->kids = std::move(ts);
    return tower(std::move(p));
}

tower tower::prod(std::vector<tower> ts) {
    if (ts.size() == 1) return ts[0];
    auto p = std::make_shared<node>();
    p->k = node::kind::prod;
    p->kids = std::move(ts);
    return tower(std::move(p));
}

tower tower::pow(tower base, tower expo) {
    auto p = std::make_shared<node>();
    p->k = node::kind::pw;
    p->kids = {std::move(base), std::move(expo)};
    return tower(std::move(p));
}

namespace {

unsigned long rat_bits(const rat& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

// ceil(log2 q) and floor(log2 q) for q > 0
long ceil_log2(const rat& q) {
    if (sgn(q) <= 0) throw std::domain_error("log of nonpositive value");
    const bigint &num = q.get_num(), &den = q.get_den();
    long bn = long(mpz_sizeinbase(num.get_mpz_t(), 2));
    long bd = long(mpz_sizeinbase(den.get_mpz_t(), 2));
    long lo = (bn - 1) - bd, hi = bn - (bd - 1);
    for (long k = lo; k <= hi; ++k) {
        rat p = k >= 0 ? rat(pow2(unsigned(k))) : rat(1) / rat(pow2(unsigned(-k)));
        if (q <= p) return k;
    }
    return hi;
}

long floor_log2(const rat& q) {
    long c = ceil_log2(q);
    rat p = c >= 0 ? rat(pow2(unsigned(c))) : rat(1) / rat(pow2(unsigned(-c)));
    return q == p ? c : c - 1;
}

} // namespace

std::optional<rat> tower::try_eval(unsigned long max_bits) const {
    if (max_bits == default_eval_bits && n->eval_done) return n->eval_cache;
    auto result = [&]() -> std::optional<rat> {
    switch (n->k) {
        case node::kind::leaf:
            return n->value;
        case node::kind::sum: {
            rat acc(0);
            for (auto& t : n->kids) {
                auto v = t.try_eval(max_bits);
                if (!v) return std::nullopt;
                acc += *v;
                if (rat_bits(acc) > max_bits) return std::nullopt;
            }
            return acc;
        }
        case node::kind::prod: {
            rat acc(1);
            for (auto& t : n->kids) {
                auto v = t.try_eval(max_bits);
                if (!v) return std::nullopt;
                acc *= *v;
                if (rat_bits(acc) > max_bits) return std::nullopt;
            }
            return acc;
        }
        case node::kind::pw: {
            auto b = n->kids[0].try_eval(max_bits);
            auto e = n->kids[1].try_eval(max_bits);
            if (!b || !e) return std::nullopt;
            if (e->get_den() != 1) return std::nullopt; // formal non-integer exponent
            bigint en = e->get_num();
            if (sgn(en) < 0) return std::nullopt;
            if (!en.fits_ulong_p()) return std::nullopt;
            unsigned long k = en.get_ui();
            if (k > 0) {
                unsigned long base_bits = rat_bits(*b);
                if (base_bits > 1 && k > max_bits / (base_bits - 1)) return std::nullopt;
            }
            return rpow(*b, k);
        }
    }
    return std::nullopt;
    }();
    if (max_bits == default_eval_bits) {
        n->eval_done = true;
        n->eval_cache = result;
    }
    return result;
}

namespace {

tower ulog2(const tower& x);
tower llog2(const tower& x);
int cmp_impl(const tower& a, const tower& b, int depth);

using interval = std::pair<rat, rat>; // [lo, hi], exact rationals

// directed bounds for v^{1/q}, v > 0, with `prec` fractional bits
interval root_interval(const rat& v, unsigned long q, unsigned prec) {
    bigint scale = pow2(prec * q);
    bigint scaled = (v.get_num() * scale) / v.get_den(); // floor(v * 2^{prec q})
    bigint lo;
    mpz_root(lo.get_mpz_t(), scaled.get_mpz_t(), q);
    rat denom = rat(pow2(prec));
    return {rat(lo) / denom, rat(lo + 2) / denom};
}

std::optional<interval> eval_interval(const tower& x, unsigned long max_bits, unsigned prec) {
    using node = tower::node;
    if (max_bits == tower::default_eval_bits)
        for (auto& [p, iv] : x.n->ival_cache)
            if (p == prec) return iv;
    auto result = [&]() -> std::optional<interval> {
    switch (x.n->k) {
        case node::kind::leaf:
            return interval{x.n->value, x.n->value};
        case node::kind::sum: {
            rat lo(0), hi(0);
            for (auto& t : x.n->kids) {
                auto v = eval_interval(t, max_bits, prec);
                if (!v) return std::nullopt;
                lo += v->first;
                hi += v->second;
                if (rat_bits(lo) > max_bits || rat_bits(hi) > max_bits) return std::nullopt;
            }
            return interval{lo, hi};
        }
        case node::kind::prod: {
            rat lo(1), hi(1);
            for (auto& t : x.n->kids) {
                auto v = eval_interval(t, max_bits, prec);
                if (!v) return std::nullopt;
                rat c1 = lo * v->first, c2 = lo * v->second, c3 = hi * v->first,
                    c4 = hi * v->second;
                lo = std::min(std::min(c1, c2), std::min(c3, c4));
                hi = std::max(std::max(c1, c2), std::max(c3, c4));
                if (rat_bits(lo) > max_bits || rat_bits(hi) > max_bits) return std::nullopt;
            }
            return interval{lo, hi};
        }
        case node::kind::pw: {
            auto b = eval_interval(x.n->kids[0], max_bits, prec);
            auto e = eval_interval(x.n->kids[1], max_bits, prec);
            if (!b || !e) return std::nullopt;
            if (sgn(b->first) <= 0) return std::nullopt; // positive bases only
            // directed base^expo for exact rationals; the exponent is
            // coarsened to 64ths so root degrees stay small
            auto powd = [&](const rat& base, const rat& expo, bool up) -> std::optional<rat> {
                rat ex = expo;
                if (ex.get_den() > 64) {
                    bool round_up = (up == (base >= rat(1)));
                    bigint num64 = (ex.get_num() * 64) / ex.get_den(); // truncated
                    rat coarse(num64, 64);
                    coarse.canonicalize();
                    if (round_up && coarse < ex) num64 += 1;
                    if (!round_up && coarse > ex) num64 -= 1;
                    ex = rat(num64, 64);
                    ex.canonicalize();
                }
                bool neg = sgn(ex) < 0;
                rat ee = neg ? rat(-ex) : ex;
                bigint p = ee.get_num(), q = ee.get_den();
                if (!p.fits_ulong_p() || !q.fits_ulong_p()) return std::nullopt;
                unsigned long pi = p.get_ui(), qi = q.get_ui();
                unsigned long base_bits = rat_bits(base);
                // cap the intermediate base^p, not just the rooted result
                if (pi > 0 && base_bits > 1 && pi > max_bits / (base_bits - 1))
                    return std::nullopt;
                rat v = rpow(base, pi);
                rat r;
                if (qi == 1) {
                    r = v;
                } else {
                    auto ri = root_interval(v, qi, prec);
                    r = (up != neg) ? ri.second : ri.first;
                }
                if (neg) {
                    if (sgn(r) <= 0) return std::nullopt;
                    r = rat(1) / r;
                }
                return r;
            };
            std::optional<rat> lo, hi;
            for (const rat& bb : {b->first, b->second})
                for (const rat& ex : {e->first, e->second}) {
                    auto l = powd(bb, ex, false), u = powd(bb, ex, true);
                    if (!l || !u) return std::nullopt;
                    if (!lo || *l < *lo) lo = *l;
                    if (!hi || *u > *hi) hi = *u;
                }
            return interval{*lo, *hi};
        }
    }
    return std::nullopt;
    }();
    if (max_bits == tower::default_eval_bits) x.n->ival_cache.emplace_back(prec, result);
    return result;
}

tower ulog2(const tower& x) {
    using node = tower::node;
    switch (x.n->k) {
        case node::kind::leaf:
            return tower(ceil_log2(x.n->value));
        case node::kind::prod: {
            std::vector<tower> ls;
            for (auto& t : x.n->kids) ls.push_back(ulog2(t));
            return tower::sum(ls);
        }
        case node::kind::pw: {
            const tower& base = x.n->kids[0];
            const tower& e = x.n->kids[1];
            auto ev = e.try_eval();
            if (ev && sgn(*ev) == 0) return tower(0);
            bool epos = ev ? sgn(*ev) > 0 : true; // non-evaluable exponents here are positive
            return epos ? e * ulog2(base) : e * llog2(base);
        }
        case node::kind::sum: {
            std::vector<tower> pos;
            for (auto& t : x.n->kids) {
                auto v = t.try_eval();
                if (v && sgn(*v) <= 0) continue; // dropping negatives raises the bound
                pos.push_back(t);
            }
            if (pos.empty()) throw std::domain_error("ulog2: nonpositive sum");
            tower m = ulog2(pos[0]);
            for (std::size_t i = 1; i < pos.size(); ++i) m = tower_max(m, ulog2(pos[i]));
            long extra = ceil_log2(rat_of(long(pos.size())));
            return m + tower(extra);
        }
    }
    throw std::logic_error("ulog2: bad node");
}

tower llog2(const tower& x) {
    using node = tower::node;
    switch (x.n->k) {
        case node::kind::leaf:
            return tower(floor_log2(x.n->value));
        case node::kind::prod: {
            std::vector<tower> ls;
            for (auto& t : x.n->kids) ls.push_back(llog2(t));
            return tower::sum(ls);
        }
        case node::kind::pw: {
            const tower& base = x.n->kids[0];
            const tower& e = x.n->kids[1];
            auto ev = e.try_eval();
            if (ev && sgn(*ev) == 0) return tower(0);
            bool epos = ev ? sgn(*ev) > 0 : true;
            return epos ? e * llog2(base) : e * ulog2(base);
        }
        case node::kind::sum: {
            std::vector<tower> pos, neg;
            for (auto& t : x.n->kids) {
                auto v = t.try_eval();
                if (v && sgn(*v) < 0) neg.push_back(tower(rat(-*v)));
                else if (v && sgn(*v) == 0) continue;
                else pos.push_back(t);
            }
            if (pos.empty()) throw std::domain_error("llog2: nonpositive sum");
            tower m = llog2(pos[0]);
            for (std::size_t i = 1; i < pos.size(); ++i) m = tower_max(m, llog2(pos[i]));
            if (neg.empty()) return m;
            // x = P - N >= 2^{lp} - 2^{un} = 2^{lp}(1 - 2^{-delta});
            // delta >= 1 gives x >= 2^{lp - 1}; small rational delta > 0
            // gives x >= 2^{lp} * delta / 2
            tower un = ulog2(tower::sum(neg));
            tower delta = m - un;
            if (cmp_impl(delta, tower(1), 0) >= 0) return m - tower(1);
            auto dv = delta.try_eval();
            if (dv && sgn(*dv) > 0) return m + tower(floor_log2(*dv)) - tower(1);
            throw tower_incomparable("llog2: negative part not dominated");
        }
    }
    throw std::logic_error("llog2: bad node");
}

int cmp_impl(const tower& a, const tower& b, int depth) {
    if (depth > 64) throw tower_incomparable("descent too deep");
    auto va = a.try_eval();
    auto vb = b.try_eval();
    if (va && vb) return sgn(*va - *vb);
    // exact rational intervals at increasing precision
    for (unsigned prec : {16u, 64u, 256u}) {
        auto ia = eval_interval(a, tower::default_eval_bits, prec);
        auto ib = eval_interval(b, tower::default_eval_bits, prec);
        if (!ia || !ib) break;
        if (ia->second < ib->first) return -1;
        if (ib->second < ia->first) return 1;
    }
    try {
        if (cmp_impl(ulog2(a), llog2(b), depth + 1) < 0) return -1;
    } catch (const std::domain_error&) {
    } catch (const tower_incomparable&) {
    }
    try {
        if (cmp_impl(ulog2(b), llog2(a), depth + 1) < 0) return 1;
    } catch (const std::domain_error&) {
    } catch (const tower_incomparable&) {
    }
    throw tower_incomparable(a.str() + "  vs  " + b.str());
}

} // namespace

int tower_cmp(const tower& a, const tower& b) { return cmp_impl(a, b, 0); }

tower tower_max(const tower& a, const tower& b) { return tower_cmp(a, b) >= 0 ? a : b; }

std::string tower::str() const {
    std::ostringstream os;
    switch (n->k) {
        case node::kind::leaf:
            os << rat_str(n->value);
            break;
        case node::kind::sum: {
            os << "(";
            for (std::size_t i = 0; i < n->kids.size(); ++i)
                os << (i ? " + " : "") << n->kids[i].str();
            os << ")";
            break;
        }
        case node::kind::prod: {
            os << "(";
            for (std::size_t i = 0; i < n->kids.size(); ++i)
                os << (i ? " * " : "") << n->kids[i].str();
            os << ")";
            break;
        }
        case node::kind::pw:
            os << n->kids[0].str() << "^" << n->kids[1].str();
            break;
    }
    return os.str();
}

} // namespace psatz
