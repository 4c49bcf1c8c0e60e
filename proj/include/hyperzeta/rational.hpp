#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hyperzeta {

// Exact arbitrary-precision arithmetic. mpq_class keeps values canonical
// (lowest terms, positive denominator) under arithmetic, which is exactly the
// representation contract the library relies on; constructors from num/den
// pairs must go through frac() below so the canonical form is restored.
using Integer  = mpz_class;
using Rational = mpq_class;

inline Rational frac(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational frac(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "13/3", or just "7" for integers.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer pow2(unsigned long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
    return p;
}

} // namespace hyperzeta
