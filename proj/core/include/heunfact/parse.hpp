#pragma once

#include "heunfact/rational_function.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace heunfact {

/// Parses an expression over integers, the declared symbols, binary + - * /,
/// unary -, ^ with a non-negative integer exponent, and parentheses.
/// Implicit multiplication is rejected.
///
/// Throws SyntaxError (with position), UnknownSymbol, or DivisionByZero.
RationalFunction parse_coeff(std::string_view text, const SymbolTablePtr& symbols);

/// Identifiers of `text` in order of first appearance (no duplicates). Throws
/// SyntaxError on characters outside the expression alphabet.
std::vector<std::string> collect_identifiers(std::string_view text);

} // namespace heunfact
