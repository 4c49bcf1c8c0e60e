#include "hyperzeta/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hyperzeta {

namespace {

// Exact sum 1/a + 1/(a+1) + ... + 1/b by balanced splitting: both halves
// produce denominators of comparable size, so the gcd work stays subquadratic
// compared to left-to-right accumulation.
Rational harmonic_range(unsigned long a, unsigned long b) {
    if (a == b) return frac(1, static_cast<long>(a));
    unsigned long mid = a + (b - a) / 2;
    return harmonic_range(a, mid) + harmonic_range(mid + 1, b);
}

} // namespace

Rational harmonic(unsigned long n) {
    if (n == 0) throw std::domain_error("harmonic: n must be >= 1");
    return harmonic_range(1, n);
}

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return Integer(0);
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return c;
}

Rational pochhammer(const Rational& x, unsigned n) {
    Rational p(1);
    Rational factor(x);
    for (unsigned i = 0; i < n; ++i) {
        p *= factor;
        factor += 1;
    }
    return p;
}

Integer stirling_cycle(unsigned n, unsigned k) {
    if (k > n) return Integer(0);
    if (n == 0) return Integer(1); // k == 0 here
    if (k == 0) return Integer(0);
    // Row-by-row table for c(n, k) = (n-1) c(n-1, k) + c(n-1, k-1), cached
    // per thread: the summation engine asks for whole rows repeatedly.
    thread_local std::vector<std::vector<Integer>> rows{{Integer(1)}}; // row 0: c(0,0)=1
    while (rows.size() <= n) {
        const auto& prev = rows.back();
        unsigned rn = static_cast<unsigned>(rows.size());
        std::vector<Integer> row(rn + 1);
        row[0] = 0;
        for (unsigned j = 1; j <= rn; ++j) {
            Integer carry = (j < prev.size()) ? prev[j] * (rn - 1) : Integer(0);
            row[j] = carry + prev[j - 1];
        }
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

Integer r_stirling_cycle(unsigned n, unsigned k, unsigned r) {
    if (r == 0) throw std::domain_error("r_stirling_cycle: r must be >= 1");
    if (n < r) throw std::domain_error("r_stirling_cycle: requires n >= r");
    if (k < r || k > n) return Integer(0);
    // Same triangle recurrence as stirling_cycle, but seeded at row n = r,
    // where the only arrangement puts each of 1..r in its own cycle.
    std::vector<Integer> row(k + 1);
    row[r] = 1;
    for (unsigned i = r + 1; i <= n; ++i) {
        for (unsigned j = std::min<unsigned>(k, i); j > r; --j)
            row[j] = row[j] * (i - 1) + row[j - 1];
        row[r] *= (i - 1);
    }
    return row[k];
}

HyperharmonicMemo::HyperharmonicMemo(unsigned max_n, unsigned max_r)
    : max_n_(max_n), max_r_(max_r) {}

namespace {

// rows[r-1][n-1] = H_n^(r); extends every order's prefix row to length n.
void extend_rows(std::vector<std::vector<Rational>>& rows, unsigned r, unsigned long n) {
    if (rows.size() < r) rows.resize(r);
    if (rows[0].empty()) rows[0].push_back(Rational(1));
    while (rows[0].size() < n) {
        unsigned long next = rows[0].size() + 1;
        rows[0].push_back(rows[0].back() + frac(1, static_cast<long>(next)));
    }
    for (unsigned i = 1; i < r; ++i) {
        auto& row = rows[i];
        const auto& below = rows[i - 1];
        if (row.empty()) row.push_back(below[0]);
        while (row.size() < n) {
            row.push_back(row.back() + below[row.size()]);
        }
    }
}

} // namespace

Rational HyperharmonicMemo::value(unsigned long n, unsigned r) {
    if (n == 0 || r == 0)
        throw std::domain_error("hyperharmonic: n and r must be >= 1");
    if (n <= max_n_ && r <= max_r_) {
        extend_rows(rows_, r, n);
        return rows_[r - 1][n - 1];
    }
    // Out-of-cache queries still use the defining recurrence, just without
    // keeping the scratch rows around.
    std::vector<std::vector<Rational>> scratch;
    extend_rows(scratch, r, n);
    return scratch[r - 1][n - 1];
}

Rational hyperharmonic(unsigned long n, unsigned r) {
    thread_local HyperharmonicMemo memo;
    return memo.value(n, r);
}

Rational hyperharmonic_closed(unsigned long n, unsigned r) {
    if (n == 0 || r == 0)
        throw std::domain_error("hyperharmonic_closed: n and r must be >= 1");
    Rational h = harmonic(n + r - 1);
    if (r >= 2) h -= harmonic(r - 1);
    return Rational(binomial(n + r - 1, r - 1)) * h;
}

} // namespace hyperzeta
