#pragma once

#include <cstdint>

#include "hyperzeta/compensated.hpp"
#include "hyperzeta/power_series.hpp"
#include "hyperzeta/summation.hpp"
#include "hyperzeta/zeta_algebra.hpp"

namespace hyperzeta {

// Emits H_1^(r), H_2^(r), ... as doubles in O(1) per step, without large
// intermediates: it advances the closed form C(n+r-1, r-1) (H_{n+r-1} -
// H_{r-1}) by one multiplicative update of the binomial factor and one
// compensated add to the harmonic difference. The binomial factor is
// re-anchored from an exact product every 1024 steps, keeping the relative
// error below 1e-12 out to n = 10^7. Requires 1 <= r <= 40 (beyond that the
// factor overflows double range long before any convergent use).
class HyperharmonicStream {
public:
    explicit HyperharmonicStream(int r);

    // Value for the current index (starting at n = 1), then advances.
    double next();

    // Index the next call to next() will produce.
    std::uint64_t index() const { return n_; }
    int order() const { return r_; }

private:
    void anchor();

    int r_;
    std::uint64_t n_ = 1;
    double binom_ = 1.0;        // C(n+r-2, r-1) after n-1 emissions
    CompensatedSum harmonic_;   // H_{n+r-2} - H_{r-1}
};

// Partial sum sum_{n=1}^{N} H_n^(r) / n^m with compensated accumulation.
// Deterministic: same key and N always give the bit-identical double.
double direct_sum(SumKey key, std::uint64_t terms);

// First-order estimate of the tail sum_{n>N} H_n^(r)/n^m, from the integral
// of the asymptotic term size n^{r-1} log(n) / ((r-1)! n^m):
//   (log N / (a-1) + 1/(a-1)^2) * N^{1-a} / (r-1)!,  a = m - r + 1.
// Requires m >= r + 1 (throws divergence_error) and N >= 2 (domain_error).
double tail_estimate(SumKey key, std::uint64_t terms);

// direct_sum + tail_estimate: the numeric oracle the closed forms are
// checked against. Same preconditions as tail_estimate.
double accelerated_sum(SumKey key, std::uint64_t terms);

// Everything needed to judge one closed form at a glance.
struct SumReport {
    SumKey key;
    ZetaExpr closed_form;
    double closed_value;
    double oracle_value;
    double discrepancy; // |closed_value - oracle_value|
    std::uint64_t terms_used;
};

SumReport oracle_report(SumKey key, std::uint64_t terms);

// Taylor coefficients of -log(1-z) / (1-z)^r through z^order; coefficient of
// z^n is exactly H_n^(r).
PowerSeries hyperharmonic_gf(unsigned r, std::size_t order);

// Taylor coefficients of (-log(1-z))^m / m! through z^order; coefficient of
// z^n is exactly stirling_cycle(n, m) / n!.
PowerSeries stirling_gf(unsigned m, std::size_t order);

// Dilogarithm Li_2(x) = sum_{n>=1} x^n / n^2 for x in [-1/2, 1): power series
// on |x| <= 1/2, the Euler reflection through 1-x above. Near machine
// accuracy; throws std::domain_error outside the supported range.
double dilog(double x);

// Residual |F'(z) - f_r(z)| of the antiderivative of the log kernel
//   f_r(z) = log(z) / ((1 - z) z^r),
//   F_r(z) = Li_2(1-z) + log(z)^2/2
//            - sum_{k=1}^{r-1} (log(z)/(k z^k) + 1/(k^2 z^k)).
// F' is taken as a central difference with h = 1e-5 z; the residual is then
// dominated by the difference's O(h^2) truncation error and stays below 1e-5
// on r <= 4, z in [0.1, 0.9]. Requires r >= 1 and 0.05 < z < 0.95.
double antiderivative_residual(int r, double z);

// Checks the classical sandwich
//   log(n) + gamma + 1/(2(n+1)) < H_n < log(n) + gamma + 1/(2n),
// with H_n computed exactly (then converted to double) for n <= 10^4 and by
// compensated accumulation above that. The margins are ~5/(12n^2) below and
// ~1/(12n^2) above — still ~8e-14 at n = 10^6, beyond float noise. n >= 1.
bool harmonic_bounds_check(std::uint64_t n);

// Checks zeta(s+1)/r! < accelerated_sum({r, r+s}, N) < 1.5 (2r)^r zeta(s)/(r-1)!
// for r >= 2, s >= 2: the crude sandwich that pins the sum's scale before the
// exact machinery is trusted.
bool sandwich_bounds_check(int r, int s, std::uint64_t terms);

// H_n^(r) divided by its leading asymptotic n^{r-1} log(n) / (r-1)!; drifts
// toward 1 like 1/log(n). Requires r >= 2 and n >= 2.
double asymptotic_ratio(int r, std::uint64_t n);

} // namespace hyperzeta
