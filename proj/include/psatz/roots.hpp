#pragma once

#include "psatz/poly.hpp"

namespace psatz {

// Exact real-root isolation for univariate rational polynomials by interval
// bisection with exact sign evaluation (sign changes + derivative splitting;
// no subresultant machinery, so it can serve as an independent oracle).

struct isolated_root {
    rat lo, hi;      // lo < root < hi, or lo == hi for an exact rational root
    bool exact() const { return lo == hi; }
};

// distinct real roots of P (any nonzero univariate polynomial), sorted
std::vector<isolated_root> isolate_roots(const poly& P, var y);

// sign of P at a rational point
int sign_at(const poly& P, var y, const rat& x);

// sign of Q at an isolated root of P (refines the interval as needed);
// P must be the polynomial the root was isolated from
int sign_at_root(const poly& Q, const poly& P, var y, isolated_root r);

// number of distinct real roots t of P with sign(Q(t)) = s
unsigned count_roots_with_sign(const poly& P, const poly& Q, var y, int s);

// refine the isolating interval until its width is at most eps
isolated_root refine(const poly& P, var y, isolated_root r, const rat& eps);

// a rational point strictly between consecutive roots / beyond extremes
std::vector<rat> sample_points(const std::vector<isolated_root>& roots);

} // namespace psatz
