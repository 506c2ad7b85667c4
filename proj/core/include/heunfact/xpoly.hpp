#pragma once

#include "heunfact/rational_function.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace heunfact {

/// Dense univariate polynomial in x with RationalFunction coefficients;
/// coeff(i) multiplies x^i. The highest stored coefficient is never zero.
class XPoly {
public:
    explicit XPoly(SymbolTablePtr symbols);
    XPoly(SymbolTablePtr symbols, std::vector<RationalFunction> coeffs);

    static XPoly x(SymbolTablePtr symbols);
    static XPoly constant(const RationalFunction& c);
    /// x - root
    static XPoly linear_factor(const RationalFunction& root);
    /// Product of (x - r) over roots; 1 for an empty list.
    static XPoly from_roots(SymbolTablePtr symbols, std::span<const RationalFunction> roots);

    const SymbolTablePtr& symbols() const noexcept { return symbols_; }
    const std::vector<RationalFunction>& coeffs() const noexcept { return coeffs_; }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const;
    /// Zero when i is past the degree.
    RationalFunction coeff(int i) const;
    RationalFunction leading_coefficient() const;

    XPoly& operator+=(const XPoly& rhs);
    XPoly& operator-=(const XPoly& rhs);
    friend XPoly operator+(XPoly lhs, const XPoly& rhs) { return lhs += rhs; }
    friend XPoly operator-(XPoly lhs, const XPoly& rhs) { return lhs -= rhs; }
    friend XPoly operator*(const XPoly& lhs, const XPoly& rhs);
    friend XPoly operator*(const XPoly& lhs, const RationalFunction& rhs);
    friend XPoly operator*(const RationalFunction& lhs, const XPoly& rhs) { return rhs * lhs; }
    XPoly operator-() const;

    XPoly scaled(const RationalFunction& c) const { return *this * c; }
    XPoly derivative() const;
    RationalFunction evaluate(const RationalFunction& at) const;
    /// Exact quotient by (x - root); throws ConsistencyFailure if root is not a root.
    XPoly divide_by_linear(const RationalFunction& root) const;

    /// Coefficientwise simplification (printing form).
    XPoly simplified() const;

    /// Descending powers, e.g. "x^2 + (-a - b)*x + a*b".
    std::string str(std::string_view var = "x") const;

    friend bool operator==(const XPoly& lhs, const XPoly& rhs);

private:
    void trim();

    SymbolTablePtr symbols_;
    std::vector<RationalFunction> coeffs_;
};

inline XPoly xpoly_derivative(const XPoly& p) { return p.derivative(); }
inline RationalFunction xpoly_eval(const XPoly& p, const RationalFunction& at) { return p.evaluate(at); }

/// Reads f as a polynomial in the symbol `var` of f's table; the remaining
/// symbols are re-expressed over `target` by name. Throws InvalidInput if the
/// denominator depends on `var`.
XPoly to_xpoly(const RationalFunction& f, std::string_view var, const SymbolTablePtr& target);

} // namespace heunfact
