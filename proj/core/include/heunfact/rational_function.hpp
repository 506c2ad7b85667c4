#pragma once

#include "heunfact/param_poly.hpp"

#include <span>
#include <string>

namespace heunfact {

/// Quotient num/den of ParamPolys. Equality is by cross-multiplication; the
/// stored pair is not required to be reduced.
class RationalFunction {
public:
    explicit RationalFunction(SymbolTablePtr symbols);
    RationalFunction(SymbolTablePtr symbols, const Rational& constant);
    explicit RationalFunction(ParamPoly num);
    RationalFunction(ParamPoly num, ParamPoly den);

    static RationalFunction variable(SymbolTablePtr symbols, std::size_t index);

    const ParamPoly& num() const noexcept { return num_; }
    const ParamPoly& den() const noexcept { return den_; }
    const SymbolTablePtr& symbols() const noexcept { return num_.symbols(); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    /// True when the stored form has a constant denominator (den == 1 after construction).
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;

    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);

    friend RationalFunction operator+(RationalFunction lhs, const RationalFunction& rhs) { return lhs += rhs; }
    friend RationalFunction operator-(RationalFunction lhs, const RationalFunction& rhs) { return lhs -= rhs; }
    friend RationalFunction operator*(RationalFunction lhs, const RationalFunction& rhs) { return lhs *= rhs; }
    friend RationalFunction operator/(RationalFunction lhs, const RationalFunction& rhs) { return lhs /= rhs; }
    friend RationalFunction operator*(RationalFunction lhs, const Rational& rhs);
    RationalFunction operator-() const;

    RationalFunction pow(unsigned exponent) const;

    /// Reduced form for printing; rf_equal to *this.
    RationalFunction simplified() const;

    /// Canonical text of the simplified form.
    std::string str() const;

    friend bool operator==(const RationalFunction& lhs, const RationalFunction& rhs);

private:
    void normalize();

    ParamPoly num_;
    ParamPoly den_;
};

/// num_f * den_g == num_g * den_f.
bool rf_equal(const RationalFunction& f, const RationalFunction& g);

/// Content extraction, exact trial division of num by den, positive leading
/// coefficient of den.
RationalFunction rf_simplify(const RationalFunction& f);

/// Replaces symbol i of f's table with values[i]; every value must share one
/// (target) symbol table.
RationalFunction substitute(const RationalFunction& f, std::span<const RationalFunction> values);
RationalFunction substitute(const ParamPoly& p, std::span<const RationalFunction> values);

/// Re-expresses f over `target`, matching symbols by name. Throws UnknownSymbol
/// when f depends on a name that `target` lacks.
RationalFunction rebase(const RationalFunction& f, const SymbolTablePtr& target);

} // namespace heunfact
