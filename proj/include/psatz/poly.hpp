#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "psatz/rat.hpp"
#include "psatz/symbol.hpp"

namespace psatz {

// Power product with positive exponents, sorted by variable id.
struct monomial {
    std::vector<std::pair<var, std::uint32_t>> pow;

    unsigned total_degree() const;
    unsigned degree_in(var v) const;
    unsigned degree_in(const var_group& w) const;
    bool is_one() const { return pow.empty(); }

    static monomial one() { return {}; }
    static monomial of(var v, std::uint32_t e = 1);

    monomial operator*(const monomial& o) const;
    bool operator==(const monomial& o) const { return pow == o.pow; }
};

// Graded lexicographic; ties by interned-symbol order. Total and canonical.
struct mono_cmp {
    bool operator()(const monomial& a, const monomial& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no zero coefficients stored.
class poly {
  public:
    using term_map = std::map<monomial, rat, mono_cmp>;

    poly() = default;
    poly(long n) { set_term(monomial::one(), rat_of(n)); }
    poly(const rat& q) { set_term(monomial::one(), q); }
    static poly variable(var v) {
        poly p;
        p.set_term(monomial::of(v), rat_of(1));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // constant term; only meaningful when is_constant()
    rat constant_value() const;
    std::size_t term_count() const { return terms_.size(); }
    const term_map& terms() const { return terms_; }

    void set_term(const monomial& m, const rat& c);
    void add_term(const monomial& m, const rat& c);
    rat coeff(const monomial& m) const;

    poly operator-() const;
    poly operator+(const poly& o) const;
    poly operator-(const poly& o) const;
    poly operator*(const poly& o) const;
    poly& operator+=(const poly& o);
    poly& operator-=(const poly& o);
    poly& operator*=(const poly& o) { *this = *this * o; return *this; }
    poly operator*(const rat& c) const;
    bool operator==(const poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const poly& o) const { return !(*this == o); }

    poly pow(unsigned e) const;

    // degree conventions: the zero polynomial has degree 0
    unsigned degree() const;
    unsigned degree_in(var v) const;
    unsigned degree_in(const var_group& w) const;

    std::vector<var> vars() const;
    bool depends_on(var v) const { return degree_in(v) > 0; }

    // univariate view in y: c[k] = coefficient of y^k (a poly in the rest)
    std::vector<poly> coeffs_in(var y) const;
    poly coeff_of(var y, unsigned k) const;
    poly leading_coeff(var y) const;
    bool is_monic_in(var y) const;

    poly derivative(var y, unsigned order = 1) const;
    poly substitute(const std::map<var, poly>& bindings) const;
    poly eval(const std::map<var, rat>& point) const; // partial evaluation

    std::string str() const;

  private:
    term_map terms_;
};

inline poly operator*(const rat& c, const poly& p) { return p * c; }

poly from_coeffs(const std::vector<poly>& cs, var y);

struct not_monic : std::runtime_error {
    explicit not_monic(const std::string& m) : std::runtime_error(m) {}
};

// P = Q * D + R with deg_y R < deg_y D; D monic in y.
std::pair<poly, poly> quot_rem(const poly& P, const poly& D, var y);

// lc(D)^k * P = Q * D + R exactly, k minimal needed; returns (Q, R, k).
struct pseudo_div_result {
    poly quot, rem;
    unsigned power;
};
pseudo_div_result pseudo_divrem(const poly& P, const poly& D, var y);

// exact division; throws if not divisible
poly exact_div(const poly& P, const poly& D, var y);

// spec text grammar: terms joined by '+', rational coefs as num/den,
// power products as v^e joined by '*'
poly parse_poly(const std::string& text);
std::string print_poly(const poly& p);

} // namespace psatz
