#include "hyperzeta/zeta_algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hyperzeta/errors.hpp"
#include "hyperzeta/zeta.hpp"

namespace hyperzeta {

ZetaMonomial::ZetaMonomial(int a) : args_{a, 0}, degree_(1) {
    if (a < 2) throw std::domain_error("ZetaMonomial: zeta argument must be >= 2");
}

ZetaMonomial::ZetaMonomial(int a, int b)
    : args_{std::min(a, b), std::max(a, b)}, degree_(2) {
    if (std::min(a, b) < 2)
        throw std::domain_error("ZetaMonomial: zeta argument must be >= 2");
}

double ZetaMonomial::eval() const {
    double v = 1.0;
    for (int a : args_)
        if (a != 0) v *= zeta(a);
    return v;
}

ZetaMonomial operator*(const ZetaMonomial& lhs, const ZetaMonomial& rhs) {
    if (lhs.degree_ + rhs.degree_ > 2)
        throw capacity_error("zeta-monomial product would exceed degree 2");
    if (lhs.degree_ == 0) return rhs;
    if (rhs.degree_ == 0) return lhs;
    return ZetaMonomial(lhs.args_[0], rhs.args_[0]);
}

RenderStyle render_style_from(const std::string& name) {
    if (name == "zeta-only") return RenderStyle::zeta_only;
    if (name == "pi-power") return RenderStyle::pi_power;
    throw std::domain_error("unknown render style: " + name);
}

ZetaExpr ZetaExpr::constant(const Rational& c) {
    ZetaExpr e;
    e.add_term(ZetaMonomial{}, c);
    return e;
}

ZetaExpr ZetaExpr::zeta(int a) {
    ZetaExpr e;
    e.add_term(ZetaMonomial(a), Rational(1));
    return e;
}

ZetaExpr& ZetaExpr::add_term(const ZetaMonomial& mono, const Rational& coeff) {
    if (coeff == 0) return *this;
    auto [it, inserted] = terms_.emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

ZetaExpr& ZetaExpr::operator+=(const ZetaExpr& rhs) {
    for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, coeff);
    return *this;
}

ZetaExpr& ZetaExpr::operator-=(const ZetaExpr& rhs) {
    for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, -coeff);
    return *this;
}

ZetaExpr ZetaExpr::scaled(const Rational& c) const {
    ZetaExpr out;
    if (c == 0) return out;
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * c);
    return out;
}

ZetaExpr operator*(const ZetaExpr& lhs, const ZetaExpr& rhs) {
    ZetaExpr out;
    for (const auto& [ml, cl] : lhs.terms_)
        for (const auto& [mr, cr] : rhs.terms_)
            out.add_term(ml * mr, cl * cr);
    return out;
}

double ZetaExpr::eval() const {
    double v = 0.0;
    for (const auto& [mono, coeff] : terms_) v += to_double(coeff) * mono.eval();
    return v;
}

int ZetaExpr::degree() const {
    int d = 0;
    for (const auto& [mono, coeff] : terms_) d = std::max(d, mono.degree());
    return d;
}

namespace {

// A displayable term: an optional pi power, remaining zeta factors
// (ascending), and the merged rational coefficient.
struct RenderTerm {
    int weight = 0;
    int factor_count = 0;
    std::vector<int> zeta_args;
    int pi_pow = 0;
    Rational coeff;
};

bool render_order(const RenderTerm& a, const RenderTerm& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    if (a.factor_count != b.factor_count) return a.factor_count < b.factor_count;
    if (a.zeta_args != b.zeta_args) return a.zeta_args < b.zeta_args;
    return a.pi_pow < b.pi_pow;
}

std::string zeta_factor_string(const std::vector<int>& args) {
    std::string s;
    for (std::size_t i = 0; i < args.size();) {
        std::size_t j = i;
        while (j < args.size() && args[j] == args[i]) ++j;
        s += "ζ(" + std::to_string(args[i]) + ")";
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

std::string term_body(const RenderTerm& t) {
    Rational a = abs(t.coeff);
    std::string num = a.get_num().get_str();
    std::string den = a.get_den().get_str();
    std::string factors = zeta_factor_string(t.zeta_args);

    if (t.pi_pow > 0) {
        std::string head = (num == "1" ? "" : num) + "π^" + std::to_string(t.pi_pow);
        if (den != "1") head += "/" + den;
        return factors.empty() ? head : head + "·" + factors;
    }
    if (factors.empty()) return num + (den != "1" ? "/" + den : "");
    if (num == "1" && den == "1") return factors;
    if (den == "1") return num + factors;
    return "(" + num + "/" + den + ")" + factors;
}

} // namespace

std::string ZetaExpr::render(RenderStyle style) const {
    std::vector<RenderTerm> parts;
    if (style == RenderStyle::zeta_only) {
        for (const auto& [mono, coeff] : terms_) {
            RenderTerm t;
            t.weight = mono.weight();
            t.factor_count = mono.degree();
            for (int i = 0; i < mono.degree(); ++i) t.zeta_args.push_back(mono.arg(i));
            t.coeff = coeff;
            parts.push_back(std::move(t));
        }
    } else {
        // Convert even-argument factors to their exact pi powers and merge
        // terms that land on the same (pi power, zeta factors) shape. The
        // merge can cancel: e.g. zeta(2)^2 - (5/2) zeta(4) is exactly 0.
        std::vector<RenderTerm> merged;
        for (const auto& [mono, coeff] : terms_) {
            RenderTerm t;
            t.coeff = coeff;
            for (int i = 0; i < mono.degree(); ++i) {
                int a = mono.arg(i);
                if (a % 2 == 0) {
                    ZetaEvenForm form = zeta_even_pi_form(a);
                    t.coeff *= form.coefficient;
                    t.pi_pow += form.pi_power;
                } else {
                    t.zeta_args.push_back(a);
                }
            }
            t.weight = t.pi_pow;
            for (int a : t.zeta_args) t.weight += a;
            t.factor_count = static_cast<int>(t.zeta_args.size()) + (t.pi_pow > 0 ? 1 : 0);
            auto same = std::find_if(merged.begin(), merged.end(), [&](const RenderTerm& u) {
                return u.pi_pow == t.pi_pow && u.zeta_args == t.zeta_args;
            });
            if (same == merged.end()) merged.push_back(std::move(t));
            else same->coeff += t.coeff;
        }
        for (auto& t : merged)
            if (t.coeff != 0) parts.push_back(std::move(t));
    }

    if (parts.empty()) return "0";
    std::sort(parts.begin(), parts.end(), render_order);

    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        bool negative = parts[i].coeff < 0;
        if (i == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += term_body(parts[i]);
    }
    return out;
}

} // namespace hyperzeta
