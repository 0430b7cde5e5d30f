#pragma once

#include <gmpxx.h>

#include <string>

namespace kbchroma {

using Rational = mpq_class;
using BigInt = mpz_class;

// num/den reduced to lowest terms.
inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// x(x-1)...(x-k+1); k = 0 gives 1.
inline Rational falling_factorial(const Rational& x, unsigned k) {
    Rational r(1);
    for (unsigned s = 0; s < k; ++s) r *= x - long(s);
    return r;
}

inline BigInt falling_factorial(long x, unsigned k) {
    BigInt r(1);
    for (unsigned s = 0; s < k; ++s) r *= BigInt(x - long(s));
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace kbchroma
