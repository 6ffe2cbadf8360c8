#pragma once

#include "psatz/tower.hpp"

namespace psatz {

// number of bits of d (1 for d = 0)
unsigned bitlen(unsigned long d);

// binomial coefficient
bigint binom(unsigned long n, unsigned long k);

// the auxiliary bound functions; {..} arguments follow the brace notation
tower g1(long k, long p);                 // 2^{3*2^k} p^{k+1}; g1{-1,0} = 2
tower g2(unsigned p);                     // 2^{2^{3 (p/2)^{2^{r{p}}}}}
tower g3(unsigned p);                     // 2^{2^{3 (p/2)^p + 1}}
tower g4(unsigned p);                     // 2^{2^{3 (p/2)^p + 2}}
tower g_H(unsigned p, unsigned q);        // 39 * 2^{7p} p^{5p+6} (q+3)^{4p+2}
tower g_H1(unsigned p);                   // g_H{p, 2 bit{p} (p-1)}
tower g_H1_tilde(unsigned p);
tower g_H2(unsigned p, unsigned q);       // g_H{p, 2(bit{p}-1)(p-1) + 2q}
tower g_H2_tilde(unsigned p, unsigned q);
tower g_H3_tilde(unsigned p);             // g_H2_tilde{p, p}
tower g5(unsigned p, const tower& e, const tower& f, const tower& g, const tower& ep);
tower g6(unsigned p, unsigned s, const tower& e, const tower& f, const tower& g);
tower g7(const tower& p, const tower& s, const tower& e);
tower g8(unsigned d, unsigned s, unsigned k, unsigned i);
tower g9(unsigned d, unsigned k, unsigned i);

// the exponent of 2 in the degree bound of the main theorem
tower psatz_degree_bound(unsigned d, unsigned s, unsigned k);

// largest power of two dividing p, and n{p} = C(p,2)
unsigned two_adic_valuation(unsigned p);
inline unsigned long n_of(unsigned long p) { return p * (p - 1) / 2; }

// Annex technical-lemma suite: every inequality over the declared finite
// ranges; failures are entries in the report.
struct annex_entry {
    std::string lemma;
    std::string params;
    bool pass = false;
};
struct annex_ranges {
    unsigned g1_k = 8, g1_p = 8;
    unsigned g2_p = 11;      // odd items up to 11, even up to 8
    unsigned g3_p = 8;
    unsigned g4_p = 6;
    unsigned fix_thom_p = 4, fix_thom_e = 4;
    unsigned almost_final_p = 3, almost_final_s = 2, almost_final_e = 2;
    unsigned sect7_d = 3, sect7_s = 3, sect7_k = 3;
};
std::vector<annex_entry> annex_suite(const annex_ranges& r = {});

} // namespace psatz
