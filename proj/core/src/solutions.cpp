#include "heunfact/solutions.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace heunfact {

NonZeroResidual::NonZeroResidual(XPoly residual)
    : Error("nonzero residual: " + residual.str()), residual_(std::move(residual)) {}

PowerProductSolution right_solution(const Factorization& f) {
    const XPoly& lbar = f.right.l_poly;
    const XPoly dlbar = lbar.derivative();
    PowerProductSolution y;
    for (const auto& s : f.right.roots) {
        y.factors.push_back({s, rf_simplify(-f.right.m_poly.evaluate(s) / dlbar.evaluate(s))});
    }
    return y;
}

XPoly residual_numerator(const FuchsOperator& op, const PowerProductSolution& y) {
    const SymbolTablePtr& symbols = op.symbols();
    std::vector<RationalFunction> roots;
    for (const auto& f : y.factors) {
        roots.push_back(f.root);
    }
    const XPoly p = XPoly::from_roots(symbols, roots);
    // S = t / p with t = sum mu_s p / (x - s).
    XPoly t(symbols);
    for (const auto& f : y.factors) {
        t += p.divide_by_linear(f.root) * f.power;
    }
    const XPoly dp = p.derivative();
    const XPoly s2_plus_ds = t * t + t.derivative() * p - t * dp;
    return op.q_top() * s2_plus_ds + op.q_mid() * t * p + op.q_low() * p * p;
}

XPoly residual_rational(const Factorization& f, const PowerProductSolution& y) {
    XPoly r = residual_numerator(f.pinned, y);
    if (!r.is_zero()) {
        throw NonZeroResidual(std::move(r));
    }
    return r;
}

namespace {

double to_number(const RationalFunction& f, const char* what) {
    if (!f.is_constant()) {
        throw SymbolicParameters(std::string(what) + " depends on a symbol: " + f.str());
    }
    return f.constant_value().to_double();
}

} // namespace

std::vector<double> numeric_coefficients(const XPoly& p) {
    std::vector<double> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        out.push_back(to_number(c, "coefficient"));
    }
    return out;
}

double eval_numeric(std::span<const double> coeffs, double x) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double eval_power_product(std::span<const NumericPowerFactor> factors, double x) {
    double v = 1.0;
    for (const auto& f : factors) {
        v *= std::pow(std::fabs(x - f.root), f.power);
    }
    return v;
}

std::vector<NumericPowerFactor> numeric_right_solution(const Factorization& f) {
    std::vector<NumericPowerFactor> out;
    for (const auto& pf : right_solution(f).factors) {
        out.push_back({to_number(pf.root, "singularity"), to_number(pf.power, "exponent")});
    }
    return out;
}

QuadratureSolution second_solution(const Factorization& f, Interval domain, double basepoint) {
    const HeunParams& params = f.pinned.params();
    QuadratureSolution q;
    q.prefactor = numeric_right_solution(f);
    q.domain = domain;
    q.basepoint = basepoint;
    if (!(domain.lo < domain.hi) || !domain.contains(basepoint)) {
        throw DomainError("basepoint must lie inside a non-empty open domain");
    }
    for (std::size_t i = 0; i < params.singularities.size(); ++i) {
        const double s = to_number(params.singularities[i], "singularity");
        double power = -to_number(params.exponents[i], "exponent");
        for (const auto& pf : q.prefactor) {
            if (pf.root == s) {
                power -= 2.0 * pf.power;
            }
        }
        if (s >= domain.lo && s <= domain.hi) {
            throw DomainError("domain contains the singularity " + std::to_string(s));
        }
        q.integrand.push_back({s, power});
    }
    return q;
}

namespace {

struct SimpsonPanel {
    double a, m, b, fa, fm, fb, whole;
};

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& g, const SimpsonPanel& p, double tol, int depth) {
    const double lm = 0.5 * (p.a + p.m);
    const double rm = 0.5 * (p.m + p.b);
    const double flm = g(lm);
    const double frm = g(rm);
    const double left = simpson(p.a, p.m, p.fa, flm, p.fm);
    const double right = simpson(p.m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;
    if (std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    if (depth >= 40) {
        throw DomainError("adaptive Simpson exceeded depth 40");
    }
    return adaptive(g, {p.a, lm, p.m, p.fa, flm, p.fm, left}, tol / 2.0, depth + 1) +
           adaptive(g, {p.m, rm, p.b, p.fm, frm, p.fb, right}, tol / 2.0, depth + 1);
}

} // namespace

double integrate_adaptive_simpson(const std::function<double(double)>& g, double a, double b, double tol) {
    if (!(tol > 0.0)) {
        throw DomainError("quadrature tolerance must be positive");
    }
    if (a == b) {
        return 0.0;
    }
    const double m = 0.5 * (a + b);
    const double fa = g(a);
    const double fm = g(m);
    const double fb = g(b);
    return adaptive(g, {a, m, b, fa, fm, fb, simpson(a, b, fa, fm, fb)}, tol, 0);
}

double second_solution_eval(const QuadratureSolution& q, double x0, double tol) {
    if (!(tol > 0.0)) {
        throw DomainError("quadrature tolerance must be positive");
    }
    if (!q.domain.contains(x0)) {
        throw DomainError("evaluation point outside the solution domain");
    }
    const auto g = [&](double x) { return eval_power_product(q.integrand, x); };
    const double integral = integrate_adaptive_simpson(g, q.basepoint, x0, tol);
    return eval_power_product(q.prefactor, x0) * integral;
}

double ode_residual_numeric(const Factorization& f, std::span<const double> x_points) {
    if (x_points.empty()) {
        return 0.0;
    }
    const auto y = numeric_right_solution(f);
    const auto top = numeric_coefficients(f.pinned.q_top());
    const auto mid = numeric_coefficients(f.pinned.q_mid());
    const auto low = numeric_coefficients(f.pinned.q_low());
    std::vector<double> sing;
    for (const auto& s : f.pinned.params().singularities) {
        sing.push_back(to_number(s, "singularity"));
    }
    double worst = 0.0;
    for (const double x : x_points) {
        for (const double s : sing) {
            if (x == s) {
                throw DomainError("residual point coincides with a singularity");
            }
        }
        double s1 = 0.0;
        double ds1 = 0.0;
        for (const auto& pf : y) {
            s1 += pf.power / (x - pf.root);
            ds1 -= pf.power / ((x - pf.root) * (x - pf.root));
        }
        const double v = eval_power_product(y, x);
        const double d1 = v * s1;
        const double d2 = v * (s1 * s1 + ds1);
        const double t2 = eval_numeric(top, x) * d2;
        const double t1 = eval_numeric(mid, x) * d1;
        const double t0 = eval_numeric(low, x) * v;
        const double scale = std::fabs(t2) + std::fabs(t1) + std::fabs(t0);
        const double r = std::fabs(t2 + t1 + t0);
        worst = std::max(worst, scale > 0.0 ? r / scale : r);
    }
    return worst;
}

} // namespace heunfact
