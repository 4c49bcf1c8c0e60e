#pragma once

#include "hyperzeta/rational.hpp"

namespace hyperzeta {

// Exact Bernoulli numbers, B_1 = -1/2 convention, via the defining recurrence
// sum_{k=0}^{m} C(m+1, k) B_k = 0. Not internally synchronised; the free
// function bernoulli() uses a thread-local instance.
class BernoulliCache {
public:
    const Rational& value(unsigned n);

private:
    std::vector<Rational> values_;
};

Rational bernoulli(unsigned n);

// zeta(m) for integer m >= 2, to near machine precision. Primary evaluation
// is the Cohen-Rodriguez Villegas-Zagier Chebyshev acceleration of the
// alternating series eta(m), divided by (1 - 2^{1-m}); with 64 terms the
// acceleration remainder is ~3.2^-64, far below double epsilon.
// Throws std::domain_error for m <= 1.
double zeta(int m);

// Independent evaluation of zeta(m) by Euler-Maclaurin summation at N = 16
// with exact Bernoulli coefficients; used to cross-check zeta(). Throws
// accuracy_error if the correction terms stop improving before reaching
// ~1e-15 relative (does not happen for 2 <= m <= 60).
double zeta_euler_maclaurin(int m);

// Exact value of zeta at even integers: zeta(m) = coefficient * pi^m with
// coefficient = (-1)^{m/2+1} B_m 2^{m-1} / m!. Throws std::domain_error
// unless m is even and >= 2.
struct ZetaEvenForm {
    Rational coefficient;
    int pi_power;
};

ZetaEvenForm zeta_even_pi_form(int m);

} // namespace hyperzeta
