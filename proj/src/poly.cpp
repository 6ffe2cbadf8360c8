#include "psatz/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace psatz {

unsigned monomial::total_degree() const {
    unsigned d = 0;
    for (auto& [v, e] : pow) d += e;
    return d;
}

unsigned monomial::degree_in(var v) const {
    for (auto& [w, e] : pow)
        if (w == v) return e;
    return 0;
}

unsigned monomial::degree_in(const var_group& w) const {
    unsigned d = 0;
    for (auto& [v, e] : pow)
        if (w.contains(v)) d += e;
    return d;
}

monomial monomial::of(var v, std::uint32_t e) {
    monomial m;
    if (e > 0) m.pow.emplace_back(v, e);
    return m;
}

monomial monomial::operator*(const monomial& o) const {
    monomial r;
    r.pow.reserve(pow.size() + o.pow.size());
    auto a = pow.begin(), b = o.pow.begin();
    while (a != pow.end() && b != o.pow.end()) {
        if (a->first == b->first) {
            r.pow.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        } else if (a->first < b->first) {
            r.pow.push_back(*a++);
        } else {
            r.pow.push_back(*b++);
        }
    }
    r.pow.insert(r.pow.end(), a, pow.end());
    r.pow.insert(r.pow.end(), b, o.pow.end());
    return r;
}

bool mono_cmp::operator()(const monomial& a, const monomial& b) const {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // lex with the smallest variable id most significant; bigger exponent first
    auto ia = a.pow.begin(), ib = b.pow.begin();
    while (ia != a.pow.end() && ib != b.pow.end()) {
        if (ia->first != ib->first) return ia->first > ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia, ++ib;
    }
    return ia == a.pow.end() && ib != b.pow.end();
}

bool poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

rat poly::constant_value() const {
    if (terms_.empty()) return rat_of(0);
    return coeff(monomial::one());
}

void poly::set_term(const monomial& m, const rat& c) {
    if (sgn(c) == 0)
        terms_.erase(m);
    else
        terms_[m] = c;
}

void poly::add_term(const monomial& m, const rat& c) {
    if (sgn(c) == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

rat poly::coeff(const monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? rat_of(0) : it->second;
}

poly poly::operator-() const {
    poly r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

poly poly::operator+(const poly& o) const {
    poly r = *this;
    r += o;
    return r;
}

poly poly::operator-(const poly& o) const {
    poly r = *this;
    r -= o;
    return r;
}

poly& poly::operator+=(const poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

poly& poly::operator-=(const poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

poly poly::operator*(const poly& o) const {
    poly r;
    if (terms_.empty() || o.terms_.empty()) return r;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

poly poly::operator*(const rat& c) const {
    poly r;
    if (sgn(c) == 0) return r;
    for (auto& [m, q] : terms_) r.terms_.emplace(m, q * c);
    return r;
}

poly poly::pow(unsigned e) const {
    poly r(1);
    poly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

unsigned poly::degree() const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

unsigned poly::degree_in(var v) const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
    return d;
}

unsigned poly::degree_in(const var_group& w) const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree_in(w));
    return d;
}

std::vector<var> poly::vars() const {
    std::set<var> s;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.pow) s.insert(v);
    return std::vector<var>(s.begin(), s.end());
}

std::vector<poly> poly::coeffs_in(var y) const {
    std::vector<poly> cs(degree_in(y) + 1);
    for (auto& [m, c] : terms_) {
        unsigned e = m.degree_in(y);
        monomial rest;
        for (auto& [v, k] : m.pow)
            if (v != y) rest.pow.emplace_back(v, k);
        cs[e].add_term(rest, c);
    }
    return cs;
}

poly poly::coeff_of(var y, unsigned k) const {
    poly r;
    for (auto& [m, c] : terms_) {
        if (m.degree_in(y) != k) continue;
        monomial rest;
        for (auto& [v, e] : m.pow)
            if (v != y) rest.pow.emplace_back(v, e);
        r.add_term(rest, c);
    }
    return r;
}

poly poly::leading_coeff(var y) const {
    return coeff_of(y, degree_in(y));
}

bool poly::is_monic_in(var y) const {
    poly lc = leading_coeff(y);
    return lc.is_constant() && lc.constant_value() == rat_of(1);
}

poly poly::derivative(var y, unsigned order) const {
    poly r = *this;
    for (unsigned k = 0; k < order; ++k) {
        poly d;
        for (auto& [m, c] : r.terms_) {
            unsigned e = m.degree_in(y);
            if (e == 0) continue;
            monomial m2;
            for (auto& [v, k2] : m.pow) {
                if (v == y) {
                    if (e > 1) m2.pow.emplace_back(v, e - 1);
                } else {
                    m2.pow.emplace_back(v, k2);
                }
            }
            d.add_term(m2, c * rat_of(static_cast<long>(e)));
        }
        r = d;
    }
    return r;
}

poly poly::substitute(const std::map<var, poly>& bindings) const {
    poly r;
    for (auto& [m, c] : terms_) {
        poly t(c);
        for (auto& [v, e] : m.pow) {
            auto it = bindings.find(v);
            if (it == bindings.end())
                t = t * poly::variable(v).pow(e);
            else
                t = t * it->second.pow(e);
        }
        r += t;
    }
    return r;
}

poly poly::eval(const std::map<var, rat>& point) const {
    poly r;
    for (auto& [m, c] : terms_) {
        rat coef = c;
        monomial rest;
        for (auto& [v, e] : m.pow) {
            auto it = point.find(v);
            if (it == point.end())
                rest.pow.emplace_back(v, e);
            else
                coef *= rpow(it->second, e);
        }
        r.add_term(rest, coef);
    }
    return r;
}

poly from_coeffs(const std::vector<poly>& cs, var y) {
    poly r;
    for (unsigned k = 0; k < cs.size(); ++k) r += cs[k] * poly::variable(y).pow(k);
    return r;
}

std::pair<poly, poly> quot_rem(const poly& P, const poly& D, var y) {
    unsigned d = D.degree_in(y);
    if (d == 0) throw std::invalid_argument("quot_rem: divisor constant in main variable");
    if (!D.is_monic_in(y)) throw not_monic("quot_rem: divisor not monic in main variable");
    poly q, r = P;
    while (!r.is_zero() && r.degree_in(y) >= d) {
        unsigned dr = r.degree_in(y);
        poly t = r.coeff_of(y, dr) * poly::variable(y).pow(dr - d);
        q += t;
        r -= t * D;
    }
    return {q, r};
}

pseudo_div_result pseudo_divrem(const poly& P, const poly& D, var y) {
    unsigned d = D.degree_in(y);
    if (d == 0) throw std::invalid_argument("pseudo_divrem: divisor constant in main variable");
    poly lc = D.leading_coeff(y);
    poly q, r = P;
    unsigned power = 0;
    while (!r.is_zero() && r.degree_in(y) >= d) {
        unsigned dr = r.degree_in(y);
        poly rl = r.coeff_of(y, dr);
        // scale up so the leading term divides exactly
        q = q * lc;
        r = r * lc;
        ++power;
        poly t = rl * poly::variable(y).pow(dr - d);
        q += t;
        r -= t * D;
        if (r.degree_in(y) >= dr && !r.is_zero()) throw std::runtime_error("pseudo_divrem: no progress");
    }
    return {q, r, power};
}

poly exact_div(const poly& P, const poly& D, var y) {
    if (P.is_zero()) return poly();
    poly lc = D.leading_coeff(y);
    if (!lc.is_constant()) throw std::invalid_argument("exact_div: divisor leading coefficient not constant");
    auto pd = pseudo_divrem(P, D, y);
    if (!pd.rem.is_zero()) throw std::runtime_error("exact_div: not divisible");
    rat inv = rat_of(1) / rpow(lc.constant_value(), pd.power);
    return pd.quot * inv;
}

// ---------------------------------------------------------------- printing

std::string print_poly(const poly& p) {
    if (p.is_zero()) return "0";
    // graded-lex descending
    std::vector<std::pair<monomial, rat>> ts(p.terms().begin(), p.terms().end());
    std::reverse(ts.begin(), ts.end());
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : ts) {
        if (!first) os << " + ";
        first = false;
        if (m.is_one()) {
            os << rat_str(c);
        } else {
            if (c != rat_of(1)) {
                if (c == rat_of(-1))
                    os << "-";
                else
                    os << rat_str(c) << "*";
            }
            bool fv = true;
            for (auto& [v, e] : m.pow) {
                if (!fv) os << "*";
                fv = false;
                os << var_name(v);
                if (e > 1) os << "^" << e;
            }
        }
    }
    return os.str();
}

std::string poly::str() const { return print_poly(*this); }

// ---------------------------------------------------------------- parsing

namespace {

struct parser {
    const std::string& s;
    std::size_t i = 0;

    explicit parser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const {
        std::size_t line = 1, col = 1;
        for (std::size_t k = 0; k < i && k < s.size(); ++k) {
            if (s[k] == '\n') ++line, col = 1;
            else ++col;
        }
        throw std::runtime_error("parse error at line " + std::to_string(line) + ", col " +
                                 std::to_string(col) + ": " + msg);
    }

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    std::string number() {
        skip_ws();
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail("expected number");
        std::string r = s.substr(i, j - i);
        i = j;
        return r;
    }

    std::string ident() {
        skip_ws();
        std::size_t j = i;
        if (j >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[j])) || s[j] == '_')) fail("expected variable");
        ++j;
        while (j < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\'')) ++j;
        std::string r = s.substr(i, j - i);
        i = j;
        return r;
    }

    // [int]['/'posint]  or a bare power product
    poly term() {
        bool neg = false;
        skip_ws();
        while (peek() == '+' || peek() == '-') {
            if (eat('-')) neg = !neg;
            else eat('+');
        }
        rat coef = rat_of(1);
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = number();
            std::string den = "1";
            if (eat('/')) den = number();
            coef = rat_parse(num + "/" + den);
            have_coef = true;
        }
        monomial m;
        bool expect_factor = false;
        if (have_coef) {
            if (eat('*')) expect_factor = true;
        } else {
            expect_factor = true;
        }
        while (expect_factor) {
            std::string name = ident();
            unsigned long e = 1;
            if (eat('^')) {
                skip_ws();
                if (peek() == '-') fail("negative exponent");
                e = std::stoul(number());
                if (e == 0) fail("zero exponent");
            }
            var v = intern(name);
            bool put = false;
            for (auto& [w, k] : m.pow)
                if (w == v) {
                    k += static_cast<std::uint32_t>(e);
                    put = true;
                }
            if (!put) m.pow.emplace_back(v, static_cast<std::uint32_t>(e));
            expect_factor = eat('*');
        }
        std::sort(m.pow.begin(), m.pow.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        poly p;
        p.add_term(m, neg ? -coef : coef);
        return p;
    }

    poly run() {
        poly p = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                eat('+');
                p += term();
            } else if (c == '-') {
                // leave the '-' for term() to consume as a sign
                p += term();
            } else {
                break;
            }
        }
        skip_ws();
        if (i != s.size()) fail("trailing input");
        return p;
    }
};

} // namespace

poly parse_poly(const std::string& text) {
    parser p(text);
    return p.run();
}

} // namespace psatz
