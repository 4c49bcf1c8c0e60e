#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "hyperzeta/combinatorics.hpp"

using namespace hyperzeta;

namespace {

// Brute-force census over all n! permutations of {0..n-1}: census[k] counts
// the permutations with exactly k cycles in which the elements 0..r-1 all lie
// in distinct cycles (r = 0 places no restriction). Independent of every
// recurrence under test.
std::vector<long> cycle_census(int n, int r) {
    std::vector<long> census(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        std::vector<int> cycle_of(p.size(), -1);
        int cycles = 0;
        for (std::size_t s = 0; s < p.size(); ++s) {
            if (cycle_of[s] != -1) continue;
            for (std::size_t e = s; cycle_of[e] == -1; e = static_cast<std::size_t>(p[e]))
                cycle_of[e] = cycles;
            ++cycles;
        }
        bool distinct = true;
        for (int i = 0; i < r && distinct; ++i)
            for (int j = 0; j < i; ++j)
                if (cycle_of[static_cast<std::size_t>(i)] ==
                    cycle_of[static_cast<std::size_t>(j)]) {
                    distinct = false;
                    break;
                }
        if (distinct) ++census[static_cast<std::size_t>(cycles)];
    } while (std::next_permutation(p.begin(), p.end()));
    return census;
}

} // namespace

TEST_CASE("harmonic numbers: values and increments") {
    CHECK(harmonic(1) == 1);
    CHECK(harmonic(2) == frac(3, 2));
    CHECK(harmonic(5) == frac(137, 60));
    CHECK(harmonic(10) == frac(7381, 2520));

    // The binary-splitting evaluation against a plain left-to-right fold.
    Rational acc = 0;
    for (unsigned long n = 1; n <= 300; ++n) {
        acc += frac(1, static_cast<long>(n));
        if (n % 37 == 0 || n == 300) CHECK(harmonic(n) == acc);
    }

    CHECK(harmonic(1000) - harmonic(999) == frac(1, 1000));
}

TEST_CASE("binomial coefficients against an additively built Pascal triangle") {
    std::vector<std::vector<Integer>> triangle{{Integer(1)}};
    for (unsigned n = 1; n <= 40; ++n) {
        std::vector<Integer> row(n + 1);
        row[0] = row[n] = 1;
        for (unsigned k = 1; k < n; ++k) row[k] = triangle[n - 1][k - 1] + triangle[n - 1][k];
        triangle.push_back(row);
    }
    for (unsigned n = 0; n <= 40; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(binomial(n, k) == triangle[n][k]);

    CHECK(binomial(5, 9) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(52, 5) == 2598960);
}

TEST_CASE("pochhammer: boundary cases and the splitting identity") {
    CHECK(pochhammer(frac(7, 3), 0) == 1);
    CHECK(pochhammer(frac(1), 6) == Rational(factorial(6)));
    CHECK(pochhammer(frac(-3), 5) == 0); // the factor (x+3) vanishes

    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 5);
    std::uniform_int_distribution<unsigned> len(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        Rational x = frac(num(rng), den(rng));
        unsigned a = len(rng), b = len(rng);
        CHECK(pochhammer(x, a + b) == pochhammer(x, a) * pochhammer(x + Rational(a), b));
    }
}

TEST_CASE("stirling cycle numbers match a brute-force permutation count") {
    for (int n = 1; n <= 7; ++n) {
        std::vector<long> census = cycle_census(n, 0);
        for (int k = 0; k <= n; ++k)
            CHECK(stirling_cycle(static_cast<unsigned>(n), static_cast<unsigned>(k)) ==
                  census[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("stirling cycle numbers: rows, edges, and the harmonic column") {
    CHECK(stirling_cycle(0, 0) == 1);
    CHECK(stirling_cycle(0, 3) == 0);
    CHECK(stirling_cycle(6, 8) == 0);

    for (unsigned n = 1; n <= 12; ++n) {
        Integer row_sum = 0;
        for (unsigned k = 0; k <= n; ++k) row_sum += stirling_cycle(n, k);
        CHECK(row_sum == factorial(n)); // every permutation has some cycle count
        CHECK(stirling_cycle(n, 1) == factorial(n - 1));
        CHECK(stirling_cycle(n, n) == 1);
    }

    // c(n+1, 2) = n! H_n: the column that makes these numbers matter here.
    for (unsigned n = 1; n <= 30; ++n)
        CHECK(Rational(stirling_cycle(n + 1, 2)) == Rational(factorial(n)) * harmonic(n));
}

TEST_CASE("r-restricted stirling numbers match the restricted permutation count") {
    for (int r = 1; r <= 3; ++r)
        for (int n = r; n <= 7; ++n) {
            std::vector<long> census = cycle_census(n, r);
            for (int k = 0; k <= n; ++k)
                CHECK(r_stirling_cycle(static_cast<unsigned>(n), static_cast<unsigned>(k),
                                       static_cast<unsigned>(r)) ==
                      census[static_cast<std::size_t>(k)]);
        }
}

TEST_CASE("r-restricted stirling numbers: reductions and the hyperharmonic column") {
    // r = 1 places no restriction at all.
    for (unsigned n = 1; n <= 8; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(r_stirling_cycle(n, k, 1) == stirling_cycle(n, k));

    // With n = r each of 1..r must sit in its own cycle; only k = r survives.
    for (unsigned r = 1; r <= 6; ++r) {
        CHECK(r_stirling_cycle(r, r, r) == 1);
        if (r >= 2) CHECK(r_stirling_cycle(r, r - 1, r) == 0);
    }

    // The column at k = r + 1 carries the hyperharmonic numbers.
    for (unsigned r = 1; r <= 4; ++r)
        for (unsigned long n = 1; n <= 20; ++n)
            CHECK(Rational(r_stirling_cycle(static_cast<unsigned>(n) + r, r + 1, r)) ==
                  Rational(factorial(n)) * hyperharmonic(n, r));

    CHECK_THROWS_AS(r_stirling_cycle(5, 2, 0), std::domain_error);
    CHECK_THROWS_AS(r_stirling_cycle(2, 2, 3), std::domain_error);
}

TEST_CASE("hyperharmonic numbers: recurrence, closed form, and the memo") {
    CHECK(hyperharmonic(3, 2) == frac(13, 3));
    CHECK(hyperharmonic(5, 3) == frac(459, 20));
    for (unsigned r = 1; r <= 7; ++r) CHECK(hyperharmonic(1, r) == 1);
    for (unsigned long n = 1; n <= 12; ++n) CHECK(hyperharmonic(n, 1) == harmonic(n));

    // Column recurrence: H_n^(r) - H_{n-1}^(r) = H_n^(r-1).
    for (unsigned r = 2; r <= 5; ++r)
        for (unsigned long n = 2; n <= 25; ++n)
            CHECK(hyperharmonic(n, r) - hyperharmonic(n - 1, r) == hyperharmonic(n, r - 1));

    // The binomial-times-harmonic-difference closed form, exactly.
    for (unsigned r = 1; r <= 6; ++r)
        for (unsigned long n = 1; n <= 50; ++n)
            CHECK(hyperharmonic(n, r) == hyperharmonic_closed(n, r));

    // Queries beyond the memo's construction bounds fall back to a correct
    // scratch computation.
    HyperharmonicMemo cramped(4, 2);
    CHECK(cramped.value(10, 5) == hyperharmonic(10, 5));
    CHECK(cramped.value(3, 2) == frac(13, 3));
    CHECK(cramped.max_n() == 4);
}
