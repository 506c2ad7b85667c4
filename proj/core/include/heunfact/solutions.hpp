#pragma once

#include "heunfact/errors.hpp"
#include "heunfact/factorization.hpp"

#include <functional>
#include <span>
#include <vector>

namespace heunfact {

/// (x - root)^power
struct PowerFactor {
    RationalFunction root;
    RationalFunction power;
};

/// y1 = prod (x - s)^mu_s over the roots of Lbar.
struct PowerProductSolution {
    std::vector<PowerFactor> factors;
};

/// Solution of Lbar y' + Mbar y = 0 via residues: mu_s = -Mbar(s) / Lbar'(s).
PowerProductSolution right_solution(const Factorization& f);

class NonZeroResidual : public Error {
public:
    explicit NonZeroResidual(XPoly residual);
    const XPoly& residual() const noexcept { return residual_; }

private:
    XPoly residual_;
};

/// Numerator of H[y]/y over prod (x - s)^2, with S = y'/y = sum mu_s / (x - s):
/// Q_top (S^2 + S') + Q_mid S + Q_low. Does not throw on a nonzero result.
XPoly residual_numerator(const FuchsOperator& op, const PowerProductSolution& y);

/// residual_numerator on f.pinned; throws NonZeroResidual unless it vanishes.
XPoly residual_rational(const Factorization& f, const PowerProductSolution& y);

struct Interval {
    double lo;
    double hi;
    bool contains(double x) const noexcept { return lo < x && x < hi; }
};

/// A factor (x - root)^power with numeric root and power.
struct NumericPowerFactor {
    double root;
    double power;
};

/// Branch-free real evaluation of prod |x - root|^power.
double eval_power_product(std::span<const NumericPowerFactor> factors, double x);

/// y2 = y1 * integral from basepoint of W / y1^2, where W = prod |x - s|^(-e_s)
/// over all finite singularities. For Lame families the integrand is
/// 1 / (Lbar sqrt(L Lbar)).
struct QuadratureSolution {
    std::vector<NumericPowerFactor> prefactor;
    std::vector<NumericPowerFactor> integrand;
    double basepoint = 0.0;
    Interval domain{0.0, 0.0};
};

/// Numeric form of right_solution(f). Throws SymbolicParameters when a root or
/// exponent depends on a symbol.
std::vector<NumericPowerFactor> numeric_right_solution(const Factorization& f);

/// Throws DomainError if the domain contains a singularity or omits basepoint,
/// SymbolicParameters for symbolic families.
QuadratureSolution second_solution(const Factorization& f, Interval domain, double basepoint);

/// Adaptive Simpson to the requested tolerance (depth limit 40).
double integrate_adaptive_simpson(const std::function<double(double)>& g, double a, double b, double tol);

/// y2(x0). Throws DomainError when x0 leaves the domain or tol <= 0.
double second_solution_eval(const QuadratureSolution& q, double x0, double tol);

/// Max over points of |Q_top y'' + Q_mid y' + Q_low y| / (|Q_top y''| + |Q_mid y'| + |Q_low y|)
/// for y = y1 evaluated in floating point. Zero for an empty list.
double ode_residual_numeric(const Factorization& f, std::span<const double> x_points);

/// Floating-point coefficients of an XPoly with constant coefficients, low degree first.
std::vector<double> numeric_coefficients(const XPoly& p);
double eval_numeric(std::span<const double> coeffs, double x);

} // namespace heunfact
