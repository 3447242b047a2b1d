#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace dtv {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = base;
    bool inv = e < 0;
    unsigned long n = inv ? -(unsigned long)e : (unsigned long)e;
    Rat num, den;
    mpz_pow_ui(num.get_num_mpz_t(), b.get_num_mpz_t(), n);
    mpz_pow_ui(den.get_num_mpz_t(), b.get_den_mpz_t(), n);
    mpz_set_ui(num.get_den_mpz_t(), 1);
    mpz_set_ui(den.get_den_mpz_t(), 1);
    Rat r = inv ? den / num : num / den;
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace dtv
