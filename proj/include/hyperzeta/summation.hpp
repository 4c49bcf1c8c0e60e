#pragma once

#include <compare>
#include <map>
#include <string>

#include "hyperzeta/zeta_algebra.hpp"

namespace hyperzeta {

// Identifies the infinite series S(r, m) = sum_{n>=1} H_n^(r) / n^m.
struct SumKey {
    int r;
    int m;

    friend auto operator<=>(const SumKey&, const SumKey&) = default;
};

// "S(2, 3)" — for error messages and reports.
inline std::string sum_name(SumKey key) {
    return "S(" + std::to_string(key.r) + ", " + std::to_string(key.m) + ")";
}

// S(r, m) converges iff m >= r + 1 (the terms grow like n^{r-1-m} log n).
// Requires r >= 1 and m >= 1 (throws std::domain_error outside).
bool convergent(SumKey key);

// Euler's evaluation of the linear sum S(1, m) for m >= 2:
//   S(1, m) = (1 + m/2) zeta(m+1) - (1/2) sum_{k=1}^{m-2} zeta(m-k) zeta(k+1).
// Throws divergence_error for m <= 1.
ZetaExpr euler_sum(int m);

// The auxiliary series (1/k!) sum_{n>=1} (n)_k / n^m, expanded through the
// Stirling-cycle decomposition of the rising factorial:
//   (1/k!) sum_{j=1}^{k} stirling_cycle(k, j) zeta(m - j).
// Converges iff m >= k + 2 (throws divergence_error otherwise; k >= 1).
ZetaExpr rising_factorial_sum(int k, int m);

// The same series summed numerically, term by term, entirely independent of
// stirling_cycle/zeta: the terms t_n = (n)_k / (k! n^m) satisfy the rational
// ratio t_{n+1}/t_n = ((n+k)/n) (n/(n+1))^m, so they are generated
// multiplicatively, and the truncated tail (~ sum n^{k-m}/k!) is corrected by
// the midpoint estimate (N+1/2)^{k-m+1} / ((m-k-1) k!). The truncation point
// adapts to tol; throws accuracy_error if the cap of 2^26 terms cannot meet
// it, and divergence_error if m < k + 2.
double rising_factorial_sum_numeric(int k, int m, double tol = 1e-10);

// Closed forms of S(r, m) as exact zeta expressions, built by the recursion
//   S(r, m) = S(1, m) + sum_{k=1}^{r-1} (1/k) [ S(k, m-1) - B(k, m) ]
// with B as rising_factorial_sum. Memoised over SumKey: the recursion
// re-enters the same keys heavily, and without the memo the cost is
// exponential in r. A convergent key only ever generates convergent
// sub-keys, so the entry guard is the only divergence check needed.
class SummationEngine {
public:
    // Throws divergence_error (naming the offending key) if m < r + 1.
    const ZetaExpr& closed_form(SumKey key);

private:
    std::map<SumKey, ZetaExpr> memo_;
};

// Closed form via a thread-local SummationEngine.
ZetaExpr sum_closed_form(SumKey key);

} // namespace hyperzeta
