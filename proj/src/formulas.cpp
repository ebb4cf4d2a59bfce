// SPDX-License-Identifier: MIT
#include "nono/formulas.hpp"

#include <stdexcept>

#include "nono/core.hpp"

namespace nono {

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

mpz_class round_nearest(const mpq_class& x, HalfRule rule) {
    if (x < 0) throw InputError("round_nearest expects a nonnegative value");
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    mpq_class frac = x - mpq_class(fl);
    int c = cmp(frac, mpq_class(1, 2));
    if (c == 0 && rule == HalfRule::Unreachable) throw std::logic_error("unexpected tie in rounding");
    return c <= 0 ? fl : mpz_class(fl + 1);
}

namespace {

mpz_class pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

mpz_class pw(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

mpz_class bracket3(int q) { return round_nearest(mpq_class(2 * q, 3), HalfRule::Unreachable); }
mpz_class bracket4(int q) { return round_nearest(mpq_class(3 * q, 4), HalfRule::HalfDown); }

void check_q(int q) {
    if (q < 2) throw InputError("alphabet size must be at least 2");
}

}  // namespace

mpz_class s_closed(int q, int n) {
    check_q(q);
    switch (n) {
        case 2:
            return mpz_class(q / 2) * ((q + 1) / 2);
        case 3: {
            mpz_class r = bracket3(q);
            return r * r * (q - r);
        }
        case 4: {
            mpz_class r = bracket4(q);
            return r * r * r * (q - r);
        }
        default:
            throw InputError("closed form for S(q,n) needs n in {2,3,4}");
    }
}

mpz_class n_closed(int q, int n) {
    check_q(q);
    switch (n) {
        case 3:
            return 2 * binomial(q, bracket3(q).get_ui());
        case 4:
            if (q == 2) return 6;
            return 2 * binomial(q, bracket4(q).get_ui());
        default:
            throw InputError("closed form for N(q,n) needs n in {3,4}");
    }
}

mpz_class count_maximal(int q, int n) {
    check_q(q);
    const unsigned long uq = q;
    mpz_class total = 0;
    switch (n) {
        case 2:
            return pow2(uq) - 2;
        case 3:
            for (unsigned long m = 1; m < uq; ++m) total += binomial(uq, m) * pow2(m * (uq - m));
            return total;
        case 4:
            if (q < 3) throw InputError("the four-letter maximal count needs q >= 3");
            for (unsigned long m = 1; m < uq; ++m) {
                const unsigned long e = m * (uq - m);
                mpz_class t = 2 * pw(pow2(uq - m) - 1, e) + pw(pow2(m) + pow2(uq - m), e) - pow2(m * e) -
                              pow2(e * (uq - m));
                total += binomial(uq, m) * t;
            }
            return total;
        default:
            throw InputError("maximal-code counts need n in {2,3,4}");
    }
}

}  // namespace nono
