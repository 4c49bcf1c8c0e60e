#include "hyperzeta/power_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperzeta/combinatorics.hpp"

namespace hyperzeta {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

PowerSeries PowerSeries::log_reciprocal(std::size_t order) {
    PowerSeries s(order);
    for (std::size_t n = 1; n <= order; ++n)
        s.coeffs_[n] = frac(1, static_cast<long>(n));
    return s;
}

PowerSeries PowerSeries::geometric_power(unsigned k, std::size_t order) {
    PowerSeries s(order);
    if (k == 0) {
        s.coeffs_[0] = 1;
        return s;
    }
    for (std::size_t n = 0; n <= order; ++n)
        s.coeffs_[n] = Rational(binomial(n + k - 1, k - 1));
    return s;
}

const Rational& PowerSeries::coeff(std::size_t n) const {
    if (n >= coeffs_.size())
        throw std::out_of_range("PowerSeries::coeff: index beyond truncation order");
    return coeffs_[n];
}

void PowerSeries::set_coeff(std::size_t n, const Rational& value) {
    if (n >= coeffs_.size())
        throw std::out_of_range("PowerSeries::set_coeff: index beyond truncation order");
    coeffs_[n] = value;
}

PowerSeries PowerSeries::scaled(const Rational& c) const {
    PowerSeries out(order());
    for (std::size_t n = 0; n <= order(); ++n) out.coeffs_[n] = coeffs_[n] * c;
    return out;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
    return *this;
}

PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs) {
    PowerSeries out(std::min(lhs.order(), rhs.order()));
    for (std::size_t n = 0; n < out.coeffs_.size(); ++n) {
        Rational acc(0);
        for (std::size_t i = 0; i <= n; ++i) acc += lhs.coeffs_[i] * rhs.coeffs_[n - i];
        out.coeffs_[n] = std::move(acc);
    }
    return out;
}

PowerSeries PowerSeries::pow(unsigned m) const {
    PowerSeries result(order());
    result.coeffs_[0] = 1;
    PowerSeries base = *this;
    while (m > 0) {
        if (m & 1u) result = result * base;
        m >>= 1u;
        if (m > 0) base = base * base;
    }
    return result;
}

PowerSeries PowerSeries::quotient(const PowerSeries& rhs) const {
    if (rhs.coeffs_[0] == 0)
        throw std::domain_error("PowerSeries::quotient: divisor has zero constant term");
    PowerSeries out(std::min(order(), rhs.order()));
    for (std::size_t n = 0; n < out.coeffs_.size(); ++n) {
        Rational acc = coeffs_[n];
        for (std::size_t i = 0; i < n; ++i) acc -= out.coeffs_[i] * rhs.coeffs_[n - i];
        out.coeffs_[n] = acc / rhs.coeffs_[0];
    }
    return out;
}

PowerSeries PowerSeries::integral() const {
    PowerSeries out(order());
    for (std::size_t n = 1; n <= order(); ++n)
        out.coeffs_[n] = coeffs_[n - 1] / Rational(static_cast<long>(n));
    return out;
}

PowerSeries PowerSeries::derivative() const {
    PowerSeries out(order());
    for (std::size_t n = 0; n < order(); ++n)
        out.coeffs_[n] = coeffs_[n + 1] * Rational(static_cast<long>(n) + 1);
    return out;
}

} // namespace hyperzeta
