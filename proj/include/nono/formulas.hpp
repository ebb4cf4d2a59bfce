// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>

namespace nono {

enum class HalfRule {
    HalfDown,     // x.5 rounds down
    Unreachable,  // a tie is a logic error
};

mpz_class round_nearest(const mpq_class& x, HalfRule rule);

// S(q,n) for n in {2,3,4}.
mpz_class s_closed(int q, int n);
// N(q,n) for n in {3,4}.
mpz_class n_closed(int q, int n);
// Number of maximal codes for n in {2,3,4}; n = 4 needs q >= 3.
mpz_class count_maximal(int q, int n);

mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace nono
