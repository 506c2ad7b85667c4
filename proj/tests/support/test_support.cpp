#include "test_support.hpp"

#include "heunfact/parse.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>

namespace heunfact::testing {

SymbolTablePtr syms(std::vector<std::string> names) { return make_symbols(std::move(names)); }

RationalFunction rf(std::string_view text, const SymbolTablePtr& symbols) { return parse_coeff(text, symbols); }

XPoly xp(std::string_view text, const SymbolTablePtr& symbols) {
    std::vector<std::string> names{"x"};
    for (const auto& n : symbols->names()) {
        names.push_back(n);
    }
    return to_xpoly(parse_coeff(text, make_symbols(names)), "x", symbols);
}

FamilySpec lame(int k, const std::vector<std::string>& free_points) {
    ProblemFile p;
    p.k = k;
    p.singularities = free_points;
    p.lame = true;
    return make_family(p);
}

FamilySpec heun(int k, const std::vector<std::string>& free_points, const std::vector<std::string>& exponents) {
    ProblemFile p;
    p.k = k;
    p.singularities = free_points;
    p.exponents = exponents;
    return make_family(p);
}

std::pair<XPoly, XPoly> closed_form_connection(const FamilySpec& family, const SplittingMask& mask) {
    std::vector<RationalFunction> left;
    std::vector<RationalFunction> right;
    for (std::size_t i = 0; i < family.singularities.size(); ++i) {
        (mask.in_left(i) ? left : right).push_back(family.singularities[i]);
    }
    const XPoly l = XPoly::from_roots(family.symbols, left);
    const XPoly lbar = XPoly::from_roots(family.symbols, right);
    const RationalFunction one(family.symbols, Rational(1));
    XPoly m(family.symbols);
    XPoly mbar(family.symbols);
    for (std::size_t i = 0; i < family.singularities.size(); ++i) {
        const auto& s = family.singularities[i];
        const auto& e = family.exponents[i];
        if (mask.in_left(i)) {
            m += l.divide_by_linear(s) * e;
        } else {
            mbar += lbar.divide_by_linear(s) * (e - one);
        }
    }
    return {m, mbar};
}

namespace {

Rational random_rational(std::mt19937& rng, long lo, long hi, long max_den) {
    std::uniform_int_distribution<long> den_dist(1, max_den);
    const long den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(lo * den, hi * den);
    return Rational(num_dist(rng), den);
}

} // namespace

FamilySpec random_family(std::mt19937& rng, int k) {
    const SymbolTablePtr none = make_symbols({});
    std::vector<Rational> used{Rational(0), Rational(1)};
    std::vector<RationalFunction> points;
    while (points.size() < static_cast<std::size_t>(k)) {
        const Rational r = random_rational(rng, -10, 10, 4);
        if (std::find(used.begin(), used.end(), r) == used.end()) {
            used.push_back(r);
            points.emplace_back(none, r);
        }
    }
    FamilySpec f;
    f.k = k;
    f.symbols = none;
    f.singularities = HeunParams::standard_singularities(none, std::move(points));
    for (int i = 0; i < k + 2; ++i) {
        f.exponents.emplace_back(none, random_rational(rng, -3, 3, 4));
    }
    return f;
}

double reference_integral(const std::vector<NumericPowerFactor>& integrand, double a, double b) {
    auto g = [&](double t) { return eval_power_product(integrand, t); };
    const double sign = a <= b ? 1.0 : -1.0;
    return sign * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, std::min(a, b), std::max(a, b),
                                                                                 15, 1e-14);
}

namespace {

struct Coefficients {
    double top;
    double mid;
    double low;
};

Coefficients coefficients_at(const Factorization& f, double x) {
    return {eval_numeric(numeric_coefficients(f.pinned.q_top()), x),
            eval_numeric(numeric_coefficients(f.pinned.q_mid()), x),
            eval_numeric(numeric_coefficients(f.pinned.q_low()), x)};
}

double relative(const Coefficients& c, double y, double dy, double d2y) {
    const double t2 = c.top * d2y;
    const double t1 = c.mid * dy;
    const double t0 = c.low * y;
    return std::abs(t2 + t1 + t0) / (std::abs(t2) + std::abs(t1) + std::abs(t0));
}

} // namespace

double y2_residual_leibniz(const Factorization& f, const QuadratureSolution& q, double x, double y2) {
    double s1 = 0.0;
    double ds1 = 0.0;
    for (const auto& p : q.prefactor) {
        s1 += p.power / (x - p.root);
        ds1 -= p.power / ((x - p.root) * (x - p.root));
    }
    double log_dw = 0.0;
    for (const auto& p : q.integrand) {
        log_dw += p.power / (x - p.root);
    }
    const double y1 = eval_power_product(q.prefactor, x);
    const double dy1 = y1 * s1;
    const double d2y1 = y1 * (s1 * s1 + ds1);
    const double w = eval_power_product(q.integrand, x);
    const double dw = w * log_dw;
    const double integral = y2 / y1;
    const double dy2 = dy1 * integral + y1 * w;
    const double d2y2 = d2y1 * integral + 2.0 * dy1 * w + y1 * dw;
    return relative(coefficients_at(f, x), y2, dy2, d2y2);
}

double y2_residual_fd(const Factorization& f, const QuadratureSolution& q, double x, double h, double tol) {
    const double ym = second_solution_eval(q, x - h, tol);
    const double y0 = second_solution_eval(q, x, tol);
    const double yp = second_solution_eval(q, x + h, tol);
    return relative(coefficients_at(f, x), y0, (yp - ym) / (2 * h), (yp - 2 * y0 + ym) / (h * h));
}

} // namespace heunfact::testing
