#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace artin {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(Int base, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int binom(unsigned n, unsigned k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline bool is_prime(unsigned long p) {
    if (p < 2) return false;
    mpz_class z(static_cast<unsigned long>(p));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

} // namespace artin
