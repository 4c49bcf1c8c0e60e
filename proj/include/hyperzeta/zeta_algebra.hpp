#pragma once

#include <array>
#include <map>
#include <string>

#include "hyperzeta/rational.hpp"

namespace hyperzeta {

// Product of zeta factors of degree at most 2: the unit 1, zeta(a), or
// zeta(a)zeta(b) with the arguments stored in ascending order. Arguments must
// be integers >= 2 (inside the convergence half-plane).
class ZetaMonomial {
public:
    ZetaMonomial() = default; // the unit monomial
    explicit ZetaMonomial(int a);
    ZetaMonomial(int a, int b);

    int degree() const { return degree_; }
    int weight() const { return args_[0] + args_[1]; }
    // arg(0) <= arg(1); unused slots read 0.
    int arg(int i) const { return args_[static_cast<std::size_t>(i)]; }

    double eval() const;

    // Throws capacity_error if the combined degree would exceed 2.
    friend ZetaMonomial operator*(const ZetaMonomial& lhs, const ZetaMonomial& rhs);

    friend auto operator<=>(const ZetaMonomial&, const ZetaMonomial&) = default;

private:
    std::array<int, 2> args_{0, 0};
    int degree_ = 0;
};

enum class RenderStyle { zeta_only, pi_power };

// "zeta-only" / "pi-power"; throws std::domain_error otherwise.
RenderStyle render_style_from(const std::string& name);

// Finite Q-linear combination of zeta monomials: the exact closed forms this
// library produces all live in the degree <= 2 slice of the algebra, e.g.
// (5/2) zeta(4) - (1/2) zeta(2)^2 + 2 zeta(3) - zeta(2). Zero coefficients
// are never stored, so term_count() == 0 iff the expression is zero.
class ZetaExpr {
public:
    ZetaExpr() = default; // zero

    static ZetaExpr constant(const Rational& c);
    static ZetaExpr zeta(int a); // the single term 1 * zeta(a)

    ZetaExpr& add_term(const ZetaMonomial& mono, const Rational& coeff);

    ZetaExpr& operator+=(const ZetaExpr& rhs);
    ZetaExpr& operator-=(const ZetaExpr& rhs);
    friend ZetaExpr operator+(ZetaExpr lhs, const ZetaExpr& rhs) { return lhs += rhs; }
    friend ZetaExpr operator-(ZetaExpr lhs, const ZetaExpr& rhs) { return lhs -= rhs; }
    friend ZetaExpr operator-(const ZetaExpr& e) { return e.scaled(frac(-1)); }

    ZetaExpr scaled(const Rational& c) const;
    friend ZetaExpr operator*(const ZetaExpr& e, const Rational& c) { return e.scaled(c); }
    friend ZetaExpr operator*(const Rational& c, const ZetaExpr& e) { return e.scaled(c); }

    // Bilinear product; throws capacity_error if any monomial product would
    // exceed degree 2.
    friend ZetaExpr operator*(const ZetaExpr& lhs, const ZetaExpr& rhs);

    // Numeric value using zeta().
    double eval() const;

    // Highest monomial degree present (0 for constants and for zero).
    int degree() const;

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ZetaMonomial, Rational>& terms() const { return terms_; }

    // Deterministic human-readable form; see render docs in zeta_algebra.cpp.
    // zeta-only:  "(5/2)ζ(4) - (1/2)ζ(2)^2 + 2ζ(3) - ζ(2)"
    // pi-power:   "π^4/72 + 2ζ(3) - π^2/6"
    std::string render(RenderStyle style) const;

    friend bool operator==(const ZetaExpr& lhs, const ZetaExpr& rhs) {
        return lhs.terms_ == rhs.terms_;
    }

private:
    std::map<ZetaMonomial, Rational> terms_;
};

} // namespace hyperzeta
