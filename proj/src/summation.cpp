#include "hyperzeta/summation.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/compensated.hpp"
#include "hyperzeta/errors.hpp"

namespace hyperzeta {

bool convergent(SumKey key) {
    if (key.r < 1 || key.m < 1)
        throw std::domain_error("convergent: requires r >= 1 and m >= 1");
    return key.m >= key.r + 1;
}

ZetaExpr euler_sum(int m) {
    if (m < 2)
        throw divergence_error("divergent: sum of H_n / n^m requires m >= 2");
    // (1 + m/2) zeta(m+1) - (1/2) sum_{k=1}^{m-2} zeta(m-k) zeta(k+1). The
    // second sum visits symmetric pairs twice; add_term merges them.
    ZetaExpr e = ZetaExpr::zeta(m + 1).scaled(frac(m + 2, 2));
    for (int k = 1; k <= m - 2; ++k)
        e.add_term(ZetaMonomial(m - k, k + 1), frac(-1, 2));
    return e;
}

ZetaExpr rising_factorial_sum(int k, int m) {
    if (k < 1) throw std::domain_error("rising_factorial_sum: k must be >= 1");
    if (m < k + 2)
        throw divergence_error("divergent: rising-factorial sum with k = " +
                               std::to_string(k) + " requires m >= k + 2");
    // (n)_k expands over Stirling cycle numbers: (n)_k = sum_j c(k, j) n^j,
    // so the sum splits into (1/k!) sum_j c(k, j) zeta(m - j).
    Rational inv_kfact = frac(Integer(1), factorial(static_cast<unsigned>(k)));
    ZetaExpr e;
    for (int j = 1; j <= k; ++j)
        e.add_term(ZetaMonomial(m - j),
                   Rational(stirling_cycle(static_cast<unsigned>(k),
                                           static_cast<unsigned>(j))) *
                       inv_kfact);
    return e;
}

double rising_factorial_sum_numeric(int k, int m, double tol) {
    if (k < 1) throw std::domain_error("rising_factorial_sum_numeric: k must be >= 1");
    if (m < k + 2)
        throw divergence_error("divergent: rising-factorial sum with k = " +
                               std::to_string(k) + " requires m >= k + 2");
    if (!(tol > 0.0))
        throw std::domain_error("rising_factorial_sum_numeric: tolerance must be positive");

    const double a = m - k; // tail decays like n^{-a}, a >= 2
    const double kfact = to_double(Rational(factorial(static_cast<unsigned>(k))));
    // Error of the midpoint tail correction: dropping the 1/n correction of
    // (n)_k / n^k costs ~ C(k,2)/(k! a) N^{-a}; the midpoint rule itself a
    // further ~ a(a+1)/24 N^{-a-1}.
    const double lead = (k >= 2) ? to_double(Rational(binomial(k, 2))) / (kfact * a) : 0.0;
    auto error_at = [&](double n) {
        return (lead + a * (a + 1.0) / 24.0 / n) * std::pow(n, -a);
    };

    const std::uint64_t cap = std::uint64_t(1) << 26;
    std::uint64_t terms = 16;
    while (error_at(static_cast<double>(terms)) >= tol / 4.0) {
        terms *= 2;
        if (terms > cap)
            throw accuracy_error("rising_factorial_sum_numeric: tolerance " +
                                 std::to_string(tol) + " needs more than 2^26 terms");
    }

    // t_1 = (1)_k / (k! 1^m) = 1; t_{n+1} = t_n ((n+k)/n) (n/(n+1))^m.
    CompensatedSum acc;
    double t = 1.0;
    for (std::uint64_t n = 1; n <= terms; ++n) {
        acc.add(t);
        double dn = static_cast<double>(n);
        t *= ((dn + k) / dn) * std::pow(dn / (dn + 1.0), m);
    }
    double tail = std::pow(static_cast<double>(terms) + 0.5, 1.0 - a) / ((a - 1.0) * kfact);
    return acc.value() + tail;
}

const ZetaExpr& SummationEngine::closed_form(SumKey key) {
    if (key.r < 1)
        throw std::domain_error("closed_form: requires r >= 1");
    if (key.m < key.r + 1)
        throw divergence_error("divergent: " + sum_name(key) + " requires m >= r + 1");
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    // S(r, m) = S(1, m) + sum_{k=1}^{r-1} (1/k) [ S(k, m-1) - B(k, m) ].
    // Every sub-key (k, m-1) with k <= r-1 satisfies m-1 >= k+1, so the
    // recursion stays inside the convergent cone.
    ZetaExpr value = euler_sum(key.m);
    for (int k = 1; k <= key.r - 1; ++k) {
        ZetaExpr bracket = closed_form({k, key.m - 1}) - rising_factorial_sum(k, key.m);
        value += bracket.scaled(frac(1, k));
    }
    return memo_.emplace(key, std::move(value)).first->second;
}

ZetaExpr sum_closed_form(SumKey key) {
    thread_local SummationEngine engine;
    return engine.closed_form(key);
}

} // namespace hyperzeta
