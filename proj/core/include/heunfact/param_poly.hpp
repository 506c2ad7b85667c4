#pragma once

#include "heunfact/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace heunfact {

/// Ordered list of parameter names. Position i is the i-th exponent slot of every monomial.
class SymbolTable {
public:
    explicit SymbolTable(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const SymbolTable&, const SymbolTable&) = default;

private:
    std::vector<std::string> names_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

SymbolTablePtr make_symbols(std::vector<std::string> names);

/// True when both tables declare the same names in the same order.
bool same_symbols(const SymbolTablePtr& a, const SymbolTablePtr& b);

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order, largest monomial first.
struct GrlexDescending {
    bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

/// Sparse multivariate polynomial over Q in the symbols of a SymbolTable.
///
/// Terms are kept in canonical form: no zero coefficients, exponent tuples of
/// length symbols()->size(), iteration in descending grlex order.
class ParamPoly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexDescending>;

    explicit ParamPoly(SymbolTablePtr symbols);
    ParamPoly(SymbolTablePtr symbols, const Rational& constant);

    static ParamPoly variable(SymbolTablePtr symbols, std::size_t index);
    static ParamPoly monomial(SymbolTablePtr symbols, Exponents exponents, const Rational& coeff);

    const SymbolTablePtr& symbols() const noexcept { return symbols_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term value; zero for the zero polynomial. Only meaningful when is_constant().
    Rational constant_value() const;
    std::uint32_t total_degree() const;
    std::uint32_t degree_in(std::size_t symbol) const;

    const Exponents& leading_monomial() const;
    const Rational& leading_coefficient() const;

    ParamPoly& operator+=(const ParamPoly& rhs);
    ParamPoly& operator-=(const ParamPoly& rhs);
    ParamPoly& operator*=(const ParamPoly& rhs);
    ParamPoly& operator*=(const Rational& scalar);

    friend ParamPoly operator+(ParamPoly lhs, const ParamPoly& rhs) { return lhs += rhs; }
    friend ParamPoly operator-(ParamPoly lhs, const ParamPoly& rhs) { return lhs -= rhs; }
    friend ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs);
    friend ParamPoly operator*(ParamPoly lhs, const Rational& rhs) { return lhs *= rhs; }
    friend ParamPoly operator*(const Rational& lhs, ParamPoly rhs) { return rhs *= lhs; }
    ParamPoly operator-() const;

    ParamPoly pow(unsigned exponent) const;

    /// Quotient when `divisor` divides *this exactly, std::nullopt otherwise.
    std::optional<ParamPoly> divide_exact(const ParamPoly& divisor) const;

    /// Positive rational gcd of the coefficients: *this / content() has coprime
    /// integer coefficients. One for the zero polynomial.
    Rational content() const;

    /// Canonical text: descending grlex, explicit '*' and '^'.
    std::string str() const;

    friend bool operator==(const ParamPoly& lhs, const ParamPoly& rhs);

private:
    void add_term(const Exponents& e, const Rational& c);

    SymbolTablePtr symbols_;
    TermMap terms_;
};

/// Throws SymbolTableMismatch unless the tables agree.
void require_same_symbols(const SymbolTablePtr& a, const SymbolTablePtr& b);

} // namespace heunfact
