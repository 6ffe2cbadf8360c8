#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace psatz {

// Exact rational scalar. mpq_class keeps gcd(num, den) = 1 and den > 0
// after canonicalize(), which every constructor below guarantees.
using rat = mpq_class;
using bigint = mpz_class;

inline rat rat_of(long n, long d = 1) {
    rat q(n, d);
    q.canonicalize();
    return q;
}

inline rat rat_parse(const std::string& s) {
    rat q(s);
    q.canonicalize();
    return q;
}

inline int sign_of(const rat& q) { return sgn(q); }

inline std::string rat_str(const rat& q) { return q.get_str(); }

// 2^k for k >= 0
inline bigint pow2(unsigned long k) {
    bigint r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

inline bigint ipow(const bigint& b, unsigned long k) {
    bigint r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), k);
    return r;
}

inline rat rpow(const rat& b, unsigned long k) {
    rat r;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num().get_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den().get_mpz_t(), k);
    return r;
}

} // namespace psatz
