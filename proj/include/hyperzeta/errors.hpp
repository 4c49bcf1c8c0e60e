#pragma once

#include <stdexcept>
#include <string>

namespace hyperzeta {

// Requested series does not converge (e.g. sum of H_n^(r)/n^m with m <= r).
class divergence_error : public std::domain_error {
public:
    explicit divergence_error(const std::string& what) : std::domain_error(what) {}
};

// Result would leave the representable domain of a type (e.g. a zeta-monomial
// product of degree > 2, which the expression algebra does not model).
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// An iterative numeric routine hit its iteration cap before meeting the
// requested tolerance.
class accuracy_error : public std::runtime_error {
public:
    explicit accuracy_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hyperzeta
