#pragma once

#include "heunfact/rational_function.hpp"

#include <span>
#include <vector>

namespace heunfact {

using PolyMatrix = std::vector<std::vector<ParamPoly>>;

/// Bareiss fraction-free determinant. Every intermediate entry stays a
/// ParamPoly; pivots are the first nonzero entry at or below the diagonal.
ParamPoly determinant_bareiss(PolyMatrix m);

/// Unique solution of a * u = rhs by Cramer's rule over Bareiss determinants.
/// Each entry is det_i / det, reduced by exact trial division.
///
/// Throws SingularSystem when det a is the zero polynomial.
std::vector<RationalFunction> solve_linear_fraction_free(const PolyMatrix& a, std::span<const ParamPoly> rhs);

/// Same system with rational-function entries: every row is first multiplied
/// by the product of its distinct non-constant denominators.
std::vector<RationalFunction> solve_linear_fraction_free(
    const std::vector<std::vector<RationalFunction>>& a, std::span<const RationalFunction> rhs);

} // namespace heunfact
