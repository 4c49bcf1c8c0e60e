#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <numbers>

#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/compensated.hpp"
#include "hyperzeta/errors.hpp"
#include "hyperzeta/oracle.hpp"

using namespace hyperzeta;

TEST_CASE("compensated accumulation survives catastrophic intermediate growth") {
    CompensatedSum s;
    s.add(1.0);
    s.add(1e100);
    s.add(1.0);
    s.add(-1e100);
    CHECK(s.value() == 2.0); // plain (and Kahan) summation both return 0 here

    CompensatedSum tenth;
    for (int i = 0; i < 100000; ++i) tenth.add(0.1);
    CHECK(std::abs(tenth.value() - 10000.0) < 1e-9);
}

TEST_CASE("hyperharmonic stream reproduces the exact values") {
    // r = 1 is the plain harmonic sequence.
    HyperharmonicStream plain(1);
    Rational h = 0;
    for (unsigned long n = 1; n <= 2000; ++n) {
        h += frac(1, static_cast<long>(n));
        double got = plain.next();
        CHECK(std::abs(got - to_double(h)) <= 1e-13 * to_double(h));
    }

    // Higher orders, including across the 1024-step re-anchoring boundary.
    for (int r : {2, 3, 5}) {
        HyperharmonicStream stream(r);
        for (unsigned long n = 1; n <= 3000; ++n) {
            double got = stream.next();
            double want = to_double(hyperharmonic(n, static_cast<unsigned>(r)));
            CHECK(std::abs(got - want) <= 1e-12 * want);
        }
    }

    HyperharmonicStream indexed(4);
    CHECK(indexed.index() == 1);
    CHECK(indexed.order() == 4);
    indexed.next();
    CHECK(indexed.index() == 2);

    CHECK_THROWS_AS(HyperharmonicStream(0), std::domain_error);
    CHECK_THROWS_AS(HyperharmonicStream(41), std::domain_error);
}

TEST_CASE("direct sums: exact-arithmetic agreement and determinism") {
    // Against an all-rational evaluation of the same partial sum.
    for (SumKey key : {SumKey{1, 2}, SumKey{2, 3}, SumKey{3, 4}, SumKey{4, 6}}) {
        Rational exact = 0;
        for (unsigned long n = 1; n <= 100; ++n) {
            Rational term = hyperharmonic(n, static_cast<unsigned>(key.r));
            for (int p = 0; p < key.m; ++p) term /= static_cast<long>(n);
            exact += term;
        }
        double direct = direct_sum(key, 100);
        CHECK(std::abs(direct - to_double(exact)) <= 1e-12 * to_double(exact));
    }

    // Bit-identical on repeat: the oracle must be stable under re-runs.
    CHECK(direct_sum({4, 5}, 50000) == direct_sum({4, 5}, 50000));

    CHECK_THROWS_AS(direct_sum({0, 3}, 10), std::domain_error);
}

TEST_CASE("tail estimate: scale, monotonicity, and guards") {
    double t4 = tail_estimate({4, 5}, 100000);
    CHECK(t4 > 1.5e-5);
    CHECK(t4 < 2.5e-5);

    for (std::uint64_t n : {100u, 1000u, 10000u})
        CHECK(tail_estimate({2, 4}, n) > tail_estimate({2, 4}, 10 * n));

    // The estimate should roughly predict the actual remainder: compare the
    // N = 10^3 partial sum + tail against a much deeper partial sum.
    double deep = direct_sum({2, 4}, 2000000);
    double est = direct_sum({2, 4}, 1000) + tail_estimate({2, 4}, 1000);
    CHECK(std::abs(est - deep) < 5e-3 * deep);

    CHECK_THROWS_AS(tail_estimate({3, 3}, 100), divergence_error);
    CHECK_THROWS_AS(tail_estimate({2, 4}, 1), std::domain_error);
}

TEST_CASE("accelerated oracle matches the closed forms") {
    for (SumKey key : {SumKey{2, 3}, SumKey{4, 5}}) {
        double closed = sum_closed_form(key).eval();
        CHECK(std::abs(closed - accelerated_sum(key, 1000000)) < 1e-6);
        CHECK(std::abs(closed - accelerated_sum(key, 100000)) < 1e-4);
    }

    SumReport report = oracle_report({2, 4}, 50000);
    CHECK(report.key == SumKey{2, 4});
    CHECK(report.closed_form == sum_closed_form({2, 4}));
    CHECK(report.closed_value == report.closed_form.eval());
    CHECK(report.oracle_value == accelerated_sum({2, 4}, 50000));
    CHECK(report.discrepancy == std::abs(report.closed_value - report.oracle_value));
    CHECK(report.terms_used == 50000);
}

TEST_CASE("generating functions carry the exact coefficients") {
    // -log(1-z)/(1-z)^r: coefficient of z^n is H_n^(r).
    for (unsigned r = 1; r <= 5; ++r) {
        PowerSeries gf = hyperharmonic_gf(r, 30);
        CHECK(gf.coeff(0) == 0);
        for (std::size_t n = 1; n <= 30; ++n)
            CHECK(gf.coeff(n) == hyperharmonic(n, r));
    }
    CHECK(hyperharmonic_gf(1, 3).coeff(2) == frac(3, 2));
    CHECK(hyperharmonic_gf(2, 3).coeff(3) == frac(13, 3));

    // (-log(1-z))^m / m!: n! times the coefficient of z^n is c(n, m).
    for (unsigned m = 1; m <= 4; ++m) {
        PowerSeries gf = stirling_gf(m, 25);
        for (std::size_t n = 0; n <= 25; ++n)
            CHECK(gf.coeff(n) * Rational(factorial(n)) == stirling_cycle(n, m));
    }
    CHECK(stirling_gf(1, 5).coeff(3) == frac(1, 3));
    CHECK(stirling_gf(2, 5).coeff(3) * Rational(factorial(3)) == 3);
    for (unsigned m = 1; m <= 6; ++m) CHECK(stirling_gf(m, 8).coeff(m) == frac(1, factorial(m)));

    // Successive orders differ by one geometric factor.
    for (unsigned r = 2; r <= 5; ++r)
        CHECK(hyperharmonic_gf(r, 30) ==
              hyperharmonic_gf(1, 30) * PowerSeries::geometric_power(r - 1, 30));

    CHECK_THROWS_AS(hyperharmonic_gf(0, 5), std::domain_error);
    CHECK_THROWS_AS(stirling_gf(0, 5), std::domain_error);
}

TEST_CASE("dilogarithm: special values, reflection, and domain") {
    double ln2 = std::numbers::ln2;
    double pi = std::numbers::pi;
    CHECK(std::abs(dilog(0.5) - (pi * pi / 12.0 - ln2 * ln2 / 2.0)) < 1e-14);
    CHECK(dilog(0.0) == 0.0);

    // Landen-type identity: Li2(x) + Li2(-x) = Li2(x^2)/2.
    for (double x : {0.1, 0.3, 0.5}) {
        CHECK(std::abs(dilog(x) + dilog(-x) - 0.5 * dilog(x * x)) < 1e-14);
    }

    // The series and reflection branches must agree where they meet.
    CHECK(std::abs(dilog(0.5 + 1e-9) - dilog(0.5 - 1e-9)) < 1e-8);

    CHECK_THROWS_AS(dilog(1.0), std::domain_error);
    CHECK_THROWS_AS(dilog(-0.51), std::domain_error);
}

TEST_CASE("antiderivative residual is small on the working grid") {
    for (int r = 1; r <= 4; ++r)
        for (double z : {0.1, 0.25, 0.5, 0.75, 0.9})
            CHECK(antiderivative_residual(r, z) < 1e-5);

    CHECK_THROWS_AS(antiderivative_residual(0, 0.5), std::domain_error);
    CHECK_THROWS_AS(antiderivative_residual(2, 0.99), std::domain_error);
    CHECK_THROWS_AS(antiderivative_residual(2, 0.01), std::domain_error);
}

TEST_CASE("harmonic sandwich bounds hold across the evaluation strategies") {
    for (std::uint64_t n = 1; n <= 1000; ++n) CHECK(harmonic_bounds_check(n));
    // Either side of the exact-rational / compensated-float switchover.
    CHECK(harmonic_bounds_check(10000));
    CHECK(harmonic_bounds_check(10001));
    CHECK(harmonic_bounds_check(100000));
    CHECK_THROWS_AS(harmonic_bounds_check(0), std::domain_error);
}

TEST_CASE("crude sandwich bounds bracket the sums") {
    for (int r = 2; r <= 4; ++r)
        for (int s = 2; s <= 3; ++s) CHECK(sandwich_bounds_check(r, s, 10000));
    CHECK_THROWS_AS(sandwich_bounds_check(1, 2, 100), std::domain_error);
    CHECK_THROWS_AS(sandwich_bounds_check(2, 1, 100), std::domain_error);
}

TEST_CASE("asymptotic ratio drifts toward 1 from below") {
    // Pinned sample: H_n^(2) / (n log n) at n = 1000.
    CHECK(std::abs(asymptotic_ratio(2, 1000) - 0.9399517) < 1e-4);

    for (int r : {2, 3}) {
        double coarse = asymptotic_ratio(r, 1000);
        double fine = asymptotic_ratio(r, 100000);
        CHECK(std::abs(fine - 1.0) < std::abs(coarse - 1.0));
        CHECK(fine < 1.0);
        CHECK(fine > 0.8);
    }

    CHECK_THROWS_AS(asymptotic_ratio(1, 100), std::domain_error);
    CHECK_THROWS_AS(asymptotic_ratio(2, 1), std::domain_error);
}
