#pragma once

#include <vector>

#include "hyperzeta/rational.hpp"

namespace hyperzeta {

// Exact n-th harmonic number H_n = 1 + 1/2 + ... + 1/n (n >= 1). Binary
// splitting keeps the intermediate denominators balanced, so this is usable
// well past n = 10^4.
Rational harmonic(unsigned long n);

// Binomial coefficient C(n, k); 0 for k > n.
Integer binomial(unsigned long n, unsigned long k);

// Rising factorial (x)_n = x (x+1) ... (x+n-1); empty product for n = 0.
Rational pochhammer(const Rational& x, unsigned n);

// Unsigned Stirling number of the first kind: permutations of n elements
// with exactly k cycles. value(n, 0) = [n == 0].
Integer stirling_cycle(unsigned n, unsigned k);

// r-Stirling cycle number: permutations of {1..n} with k cycles in which the
// elements 1..r lie in distinct cycles. Requires n >= r and r >= 1.
Integer r_stirling_cycle(unsigned n, unsigned k, unsigned r);

// Hyperharmonic numbers H_n^(r): H_n^(1) = H_n, and for r > 1 the prefix sums
// H_n^(r) = sum_{k<=n} H_k^(r-1). Rows are materialised once per order and
// grown on demand, so repeated queries cost amortised O(1) exact additions.
//
// One memo instance is not internally synchronised; use one per thread (the
// free function below does) or guard it externally. Queries beyond the
// construction-time bounds are answered correctly via a private scratch
// computation but are not cached.
class HyperharmonicMemo {
public:
    explicit HyperharmonicMemo(unsigned max_n = 5000, unsigned max_r = 64);

    // H_n^(r) for n >= 1, r >= 1.
    Rational value(unsigned long n, unsigned r);

    unsigned max_n() const { return max_n_; }
    unsigned max_r() const { return max_r_; }

private:
    std::vector<std::vector<Rational>> rows_; // rows_[r-1][n-1] = H_n^(r)
    unsigned max_n_;
    unsigned max_r_;
};

// H_n^(r) via a thread-local HyperharmonicMemo.
Rational hyperharmonic(unsigned long n, unsigned r);

// H_n^(r) via the closed form C(n+r-1, r-1) * (H_{n+r-1} - H_{r-1}),
// computed independently of the recurrence (used to cross-check it).
Rational hyperharmonic_closed(unsigned long n, unsigned r);

} // namespace hyperzeta
