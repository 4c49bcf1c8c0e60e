#pragma once

#include <cstddef>
#include <vector>

#include "hyperzeta/rational.hpp"

namespace hyperzeta {

// Truncated formal power series over Q: coefficients of z^0 .. z^order, all
// operations exact. Binary operations truncate to the smaller order.
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order);

    // -log(1 - z) = sum_{n>=1} z^n / n.
    static PowerSeries log_reciprocal(std::size_t order);

    // (1 - z)^{-k} = sum_{n>=0} C(n+k-1, k-1) z^n, integer k >= 0.
    static PowerSeries geometric_power(unsigned k, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& coeff(std::size_t n) const;
    void set_coeff(std::size_t n, const Rational& value);

    // Coefficient-wise scaling by an exact rational.
    PowerSeries scaled(const Rational& c) const;

    PowerSeries& operator+=(const PowerSeries& rhs);
    PowerSeries& operator-=(const PowerSeries& rhs);
    friend PowerSeries operator+(PowerSeries lhs, const PowerSeries& rhs) { return lhs += rhs; }
    friend PowerSeries operator-(PowerSeries lhs, const PowerSeries& rhs) { return lhs -= rhs; }
    friend PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs);

    // Integer power by repeated squaring.
    PowerSeries pow(unsigned m) const;

    // this / rhs; rhs must have a nonzero constant term (throws
    // std::domain_error otherwise).
    PowerSeries quotient(const PowerSeries& rhs) const;

    // Coefficient-wise antiderivative with zero constant term,
    // z^n -> z^{n+1}/(n+1), truncated back to the same order.
    PowerSeries integral() const;

    // Formal derivative, truncated to the same order (top coefficient 0).
    PowerSeries derivative() const;

    friend bool operator==(const PowerSeries& lhs, const PowerSeries& rhs) {
        return lhs.coeffs_ == rhs.coeffs_;
    }

private:
    std::vector<Rational> coeffs_;
};

} // namespace hyperzeta
