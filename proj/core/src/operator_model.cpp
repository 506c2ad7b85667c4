#include "heunfact/operator_model.hpp"

#include "heunfact/errors.hpp"

#include <utility>

namespace heunfact {

RationalFunction HeunParams::fuchs_sum() const {
    RationalFunction sum(symbols, Rational(-1));
    for (const auto& e : exponents) {
        sum += e;
    }
    return sum;
}

bool HeunParams::is_lame() const {
    const RationalFunction half(symbols, Rational(1, 2));
    for (const auto& e : exponents) {
        if (!rf_equal(e, half)) {
            return false;
        }
    }
    return !exponents.empty();
}

std::vector<RationalFunction> HeunParams::standard_singularities(const SymbolTablePtr& symbols,
                                                                 std::vector<RationalFunction> free_points) {
    std::vector<RationalFunction> out{RationalFunction(symbols), RationalFunction(symbols, Rational(1))};
    for (auto& p : free_points) {
        out.push_back(std::move(p));
    }
    return out;
}

FuchsOperator::FuchsOperator(XPoly q_top, XPoly q_mid, std::optional<XPoly> q_low, HeunParams params)
    : q_top_(std::move(q_top)), q_mid_(std::move(q_mid)), q_low_(std::move(q_low)), params_(std::move(params)) {}

const XPoly& FuchsOperator::q_low() const {
    if (!q_low_) {
        throw MissingAccessory();
    }
    return *q_low_;
}

void check_distinct_singularities(const std::vector<RationalFunction>& singularities) {
    for (std::size_t i = 0; i < singularities.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (rf_equal(singularities[i], singularities[j])) {
                throw CoincidentSingularities("singularity " + std::to_string(i) + " (" +
                                              singularities[i].str() + ") coincides with singularity " +
                                              std::to_string(j));
            }
        }
    }
}

XPoly accessory_polynomial(const Accessory& accessory, int k, const SymbolTablePtr& symbols) {
    if (static_cast<int>(accessory.rho.size()) != k) {
        throw InvalidInput("accessory needs exactly k rho values");
    }
    std::vector<RationalFunction> coeffs(static_cast<std::size_t>(k) + 1, RationalFunction(symbols));
    coeffs[static_cast<std::size_t>(k)] = accessory.alpha_beta;
    for (int i = 1; i <= k; ++i) {
        coeffs[static_cast<std::size_t>(k - i)] = accessory.rho[static_cast<std::size_t>(i - 1)];
    }
    return XPoly(symbols, std::move(coeffs));
}

FuchsOperator build_heun(const HeunParams& params) {
    if (params.k < 1) {
        throw InvalidInput("k must be at least 1");
    }
    const auto n = static_cast<std::size_t>(params.k) + 2;
    if (params.singularities.size() != n || params.exponents.size() != n) {
        throw InvalidInput("expected k+2 singularities and exponents");
    }
    check_distinct_singularities(params.singularities);
    const XPoly q_top = XPoly::from_roots(params.symbols, params.singularities);
    XPoly q_mid(params.symbols);
    for (std::size_t i = 0; i < n; ++i) {
        q_mid += q_top.divide_by_linear(params.singularities[i]) * params.exponents[i];
    }
    std::optional<XPoly> q_low;
    if (params.accessory) {
        q_low = accessory_polynomial(*params.accessory, params.k, params.symbols);
    }
    return FuchsOperator(q_top, std::move(q_mid), std::move(q_low), params);
}

FuchsOperator build_lame(int k, const SymbolTablePtr& symbols, std::vector<RationalFunction> free_points,
                         std::optional<Accessory> accessory) {
    if (k < 1 || free_points.size() != static_cast<std::size_t>(k)) {
        throw InvalidInput("Lame operator needs k >= 1 and k free singularities");
    }
    HeunParams params;
    params.k = k;
    params.symbols = symbols;
    params.singularities = HeunParams::standard_singularities(symbols, std::move(free_points));
    params.exponents.assign(static_cast<std::size_t>(k) + 2, RationalFunction(symbols, Rational(1, 2)));
    params.accessory = std::move(accessory);
    FuchsOperator op = build_heun(params);
    if (!(op.q_mid() == op.q_top().derivative() * RationalFunction(symbols, Rational(1, 2)))) {
        throw ConsistencyFailure("Lame operator violates Q_mid = Q_top'/2");
    }
    return op;
}

std::vector<RationalFunction> exponents_from_residues(const XPoly& q_top, const XPoly& q_mid,
                                                      const std::vector<RationalFunction>& singularities) {
    const XPoly dtop = q_top.derivative();
    std::vector<RationalFunction> out;
    out.reserve(singularities.size());
    for (const auto& s : singularities) {
        out.push_back(rf_simplify(q_mid.evaluate(s) / dtop.evaluate(s)));
    }
    return out;
}

AccessoryDecomposition accessory_decompose(const XPoly& q_low, int k) {
    if (q_low.degree() > k) {
        throw DegreeOverflow("q_low has degree " + std::to_string(q_low.degree()) + " > k = " +
                             std::to_string(k));
    }
    AccessoryDecomposition out{{q_low.coeff(k).simplified(), {}}, std::nullopt};
    for (int i = 1; i <= k; ++i) {
        out.accessory.rho.push_back(q_low.coeff(k - i).simplified());
    }
    if (k == 1) {
        out.q = (-out.accessory.rho[0]).simplified();
    }
    return out;
}

FuchsOperator expand_factors(const Factor& left, const Factor& right) {
    const XPoly& l = left.l_poly;
    const XPoly& m = left.m_poly;
    const XPoly& lbar = right.l_poly;
    const XPoly& mbar = right.m_poly;
    XPoly q_top = l * lbar;
    XPoly q_mid = l * (lbar.derivative() + mbar) + m * lbar;
    XPoly q_low = l * mbar.derivative() + m * mbar;

    HeunParams params;
    params.symbols = l.symbols();
    params.k = q_top.degree() - 2;
    params.singularities = left.roots;
    params.singularities.insert(params.singularities.end(), right.roots.begin(), right.roots.end());
    if (static_cast<int>(params.singularities.size()) == q_top.degree()) {
        params.exponents = exponents_from_residues(q_top, q_mid, params.singularities);
    }
    if (params.k >= 1 && q_low.degree() <= params.k) {
        params.accessory = accessory_decompose(q_low, params.k).accessory;
    }
    return FuchsOperator(std::move(q_top), std::move(q_mid), std::move(q_low), std::move(params));
}

bool operator_equal(const FuchsOperator& a, const FuchsOperator& b) {
    if (!(a.q_top() == b.q_top()) || !(a.q_mid() == b.q_mid())) {
        return false;
    }
    if (a.has_q_low() != b.has_q_low()) {
        return false;
    }
    return !a.has_q_low() || a.q_low() == b.q_low();
}

FuchsOperator adjoint(const FuchsOperator& h) {
    const XPoly dtop = h.q_top().derivative();
    const SymbolTablePtr& symbols = h.symbols();
    XPoly q_mid = dtop * RationalFunction(symbols, Rational(2)) - h.q_mid();
    std::optional<XPoly> q_low;
    if (h.has_q_low()) {
        q_low = dtop.derivative() - h.q_mid().derivative() + h.q_low();
    }
    HeunParams params = h.params();
    if (params.singularities.size() == static_cast<std::size_t>(h.q_top().degree())) {
        params.exponents = exponents_from_residues(h.q_top(), q_mid, params.singularities);
    }
    params.accessory.reset();
    if (q_low && params.k >= 1 && q_low->degree() <= params.k) {
        params.accessory = accessory_decompose(*q_low, params.k).accessory;
    }
    return FuchsOperator(h.q_top(), std::move(q_mid), std::move(q_low), std::move(params));
}

} // namespace heunfact
