#include "hyperzeta/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/errors.hpp"
#include "hyperzeta/zeta.hpp"

namespace hyperzeta {

namespace {

// Deterministic x^e for integer e >= 0 (no libm variance across platforms).
double ipow(double x, int e) {
    double r = 1.0;
    while (e > 0) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

double factorial_d(int n) { return to_double(Rational(factorial(static_cast<unsigned>(n)))); }

} // namespace

HyperharmonicStream::HyperharmonicStream(int r) : r_(r) {
    if (r < 1 || r > 40)
        throw std::domain_error(
            "HyperharmonicStream: order must be in [1, 40] (the binomial factor "
            "leaves double range beyond that)");
}

void HyperharmonicStream::anchor() {
    // Exact-form refresh of C(n+r-2, r-1) for the current n: at most r-1
    // multiplications, so its own error is ~(r-1) eps, while it wipes the
    // error the incremental updates accumulated over the previous block.
    double b = 1.0;
    for (int i = 1; i < r_; ++i)
        b *= (static_cast<double>(n_ - 1) + i) / i;
    binom_ = b;
}

double HyperharmonicStream::next() {
    if ((n_ & 1023u) == 1u && n_ > 1) anchor();
    double n = static_cast<double>(n_);
    binom_ *= (n + r_ - 1.0) / n;          // C(n+r-2, r-1) -> C(n+r-1, r-1)
    harmonic_.add(1.0 / (n + r_ - 1.0));   // -> H_{n+r-1} - H_{r-1}
    ++n_;
    return binom_ * harmonic_.value();
}

double direct_sum(SumKey key, std::uint64_t terms) {
    if (key.r < 1 || key.m < 1)
        throw std::domain_error("direct_sum: requires r >= 1 and m >= 1");
    HyperharmonicStream stream(key.r);
    CompensatedSum acc;
    for (std::uint64_t n = 1; n <= terms; ++n)
        acc.add(stream.next() / ipow(static_cast<double>(n), key.m));
    return acc.value();
}

double tail_estimate(SumKey key, std::uint64_t terms) {
    if (!convergent(key))
        throw divergence_error("divergent: " + sum_name(key) + " has no finite tail");
    if (terms < 2)
        throw std::domain_error("tail_estimate: requires at least 2 summed terms");
    // Integrate the asymptotic term size x^{r-1} log(x) / ((r-1)! x^m) from N:
    // with a = m - r + 1, that is (log N/(a-1) + 1/(a-1)^2) N^{1-a} / (r-1)!.
    double a = static_cast<double>(key.m - key.r + 1);
    double n = static_cast<double>(terms);
    return (std::log(n) / (a - 1.0) + 1.0 / ((a - 1.0) * (a - 1.0))) *
           std::pow(n, 1.0 - a) / factorial_d(key.r - 1);
}

double accelerated_sum(SumKey key, std::uint64_t terms) {
    double tail = tail_estimate(key, terms); // also validates convergence
    return direct_sum(key, terms) + tail;
}

SumReport oracle_report(SumKey key, std::uint64_t terms) {
    SumReport report;
    report.key = key;
    report.closed_form = sum_closed_form(key);
    report.closed_value = report.closed_form.eval();
    report.oracle_value = accelerated_sum(key, terms);
    report.discrepancy = std::abs(report.closed_value - report.oracle_value);
    report.terms_used = terms;
    return report;
}

PowerSeries hyperharmonic_gf(unsigned r, std::size_t order) {
    if (r < 1) throw std::domain_error("hyperharmonic_gf: r must be >= 1");
    return PowerSeries::log_reciprocal(order) * PowerSeries::geometric_power(r, order);
}

PowerSeries stirling_gf(unsigned m, std::size_t order) {
    if (m < 1) throw std::domain_error("stirling_gf: m must be >= 1");
    return PowerSeries::log_reciprocal(order)
        .pow(m)
        .scaled(frac(Integer(1), factorial(m)));
}

double dilog(double x) {
    if (!(x >= -0.5 && x < 1.0))
        throw std::domain_error("dilog: supported range is [-1/2, 1)");
    if (x > 0.5) {
        // Euler reflection moves the argument into the fast-series range.
        double y = 1.0 - x;
        return std::numbers::pi * std::numbers::pi / 6.0 -
               std::log(x) * std::log(y) - dilog(y);
    }
    // sum x^n / n^2; |x| <= 1/2 halves each term, so ~60 terms reach eps.
    double p = x;
    double s = 0.0;
    for (int n = 1; n < 200; ++n) {
        double t = p / (static_cast<double>(n) * n);
        s += t;
        if (t == 0.0 || std::abs(t) < 1e-17 * std::abs(s)) break;
        p *= x;
    }
    return s;
}

double antiderivative_residual(int r, double z) {
    if (r < 1) throw std::domain_error("antiderivative_residual: r must be >= 1");
    if (!(z > 0.05 && z < 0.95))
        throw std::domain_error("antiderivative_residual: z must lie in (0.05, 0.95)");
    auto antiderivative = [r](double t) {
        double v = dilog(1.0 - t) + 0.5 * std::log(t) * std::log(t);
        double tk = 1.0;
        for (int k = 1; k < r; ++k) {
            tk *= t;
            v -= std::log(t) / (k * tk) + 1.0 / (static_cast<double>(k) * k * tk);
        }
        return v;
    };
    double h = 1e-5 * z;
    double derivative = (antiderivative(z + h) - antiderivative(z - h)) / (2.0 * h);
    double integrand = std::log(z) / ((1.0 - z) * ipow(z, r));
    return std::abs(derivative - integrand);
}

bool harmonic_bounds_check(std::uint64_t n) {
    if (n < 1) throw std::domain_error("harmonic_bounds_check: n must be >= 1");
    double h;
    if (n <= 10000) {
        h = to_double(harmonic(n));
    } else {
        CompensatedSum acc;
        for (std::uint64_t k = 1; k <= n; ++k)
            acc.add(1.0 / static_cast<double>(k));
        h = acc.value();
    }
    constexpr double gamma = 0.5772156649015329;
    double base = std::log(static_cast<double>(n)) + gamma;
    double lower = base + 1.0 / (2.0 * (static_cast<double>(n) + 1.0));
    double upper = base + 1.0 / (2.0 * static_cast<double>(n));
    return lower < h && h < upper;
}

bool sandwich_bounds_check(int r, int s, std::uint64_t terms) {
    if (r < 2 || s < 2)
        throw std::domain_error("sandwich_bounds_check: requires r >= 2 and s >= 2");
    double value = accelerated_sum({r, r + s}, terms);
    double lower = zeta(s + 1) / factorial_d(r);
    double upper = 1.5 * ipow(2.0 * r, r) / factorial_d(r - 1) * zeta(s);
    return lower < value && value < upper;
}

double asymptotic_ratio(int r, std::uint64_t n) {
    if (r < 2) throw std::domain_error("asymptotic_ratio: requires r >= 2");
    if (n < 2) throw std::domain_error("asymptotic_ratio: requires n >= 2");
    HyperharmonicStream stream(r);
    double h = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) h = stream.next();
    double leading = ipow(static_cast<double>(n), r - 1) *
                     std::log(static_cast<double>(n)) / factorial_d(r - 1);
    return h / leading;
}

} // namespace hyperzeta
