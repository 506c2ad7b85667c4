#include "heunfact/factorization.hpp"

#include "heunfact/errors.hpp"
#include "heunfact/linear_solve.hpp"

#include <bit>
#include <utility>

namespace heunfact {

SplittingMask::SplittingMask(int k, std::uint64_t bits) : k_(k), bits_(bits) {
    if (k < 1 || k > 60) {
        throw InvalidInput("mask needs 1 <= k <= 60");
    }
    if (bits >> size() != 0) {
        throw InvalidInput("mask has bits beyond k+2 singularities");
    }
}

SplittingMask SplittingMask::from_string(std::string_view bits) {
    if (bits.size() < 3) {
        throw InvalidInput("mask string needs at least 3 positions");
    }
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            value |= std::uint64_t{1} << i;
        } else if (bits[i] != '0') {
            throw InvalidInput("mask string must contain only 0 and 1");
        }
    }
    return SplittingMask(static_cast<int>(bits.size()) - 2, value);
}

int SplittingMask::popcount() const noexcept { return std::popcount(bits_); }

bool SplittingMask::is_proper() const noexcept {
    return bits_ != 0 && bits_ != (std::uint64_t{1} << size()) - 1;
}

SplittingMask SplittingMask::complement() const {
    return SplittingMask(k_, ~bits_ & ((std::uint64_t{1} << size()) - 1));
}

std::string SplittingMask::str() const {
    std::string out(size(), '0');
    for (std::size_t i = 0; i < size(); ++i) {
        if (in_left(i)) {
            out[i] = '1';
        }
    }
    return out;
}

std::vector<SplittingMask> enumerate_splittings(int k, bool include_trivial) {
    if (k < 1 || k > 20) {
        throw InvalidInput("enumerate_splittings needs 1 <= k <= 20");
    }
    const std::uint64_t count = std::uint64_t{1} << (k + 2);
    std::vector<SplittingMask> out;
    out.reserve(count);
    for (std::uint64_t bits = 0; bits < count; ++bits) {
        SplittingMask m(k, bits);
        if (include_trivial || m.is_proper()) {
            out.push_back(m);
        }
    }
    return out;
}

HeunParams FamilySpec::params() const {
    HeunParams p;
    p.k = k;
    p.symbols = symbols;
    p.singularities = singularities;
    p.exponents = exponents;
    return p;
}

FamilySpec lame_family(int k, const SymbolTablePtr& symbols, std::vector<RationalFunction> free_points) {
    if (free_points.size() != static_cast<std::size_t>(k)) {
        throw InvalidInput("Lame family needs k free singularities");
    }
    FamilySpec f;
    f.k = k;
    f.symbols = symbols;
    f.singularities = HeunParams::standard_singularities(symbols, std::move(free_points));
    f.exponents.assign(static_cast<std::size_t>(k) + 2, RationalFunction(symbols, Rational(1, 2)));
    return f;
}

std::string to_string(FactorizationStatus status) {
    switch (status) {
    case FactorizationStatus::Ok: return "ok";
    case FactorizationStatus::Singular: return "singular";
    case FactorizationStatus::TrivialIntegrable: return "trivial-integrable";
    case FactorizationStatus::NotFactorizable: return "not-factorizable";
    }
    return "unknown";
}

namespace {

XPoly from_unknowns(const SymbolTablePtr& symbols, const std::vector<RationalFunction>& u, std::size_t offset,
                    std::size_t count) {
    std::vector<RationalFunction> c(u.begin() + static_cast<std::ptrdiff_t>(offset),
                                    u.begin() + static_cast<std::ptrdiff_t>(offset + count));
    return XPoly(symbols, std::move(c));
}

/// Coefficient of x^(deg l - 1) of m: the exponent at infinity carried by l D + m.
RationalFunction infinity_coefficient(const Factor& factor) {
    return factor.m_poly.coeff(factor.l_poly.degree() - 1).simplified();
}

/// Fills the derived quantities of a factorization whose factors and pinned
/// operator are already set.
Factorization complete(SplittingMask mask, Factor left, Factor right, FuchsOperator pinned) {
    const int k = pinned.params().k;
    const AccessoryDecomposition acc = accessory_decompose(pinned.q_low(), k);
    const RationalFunction nu = infinity_coefficient(right);
    const RationalFunction other = (pinned.params().fuchs_sum() - nu).simplified();
    Factorization f{std::move(mask),
                    std::move(left),
                    std::move(right),
                    acc.accessory.alpha_beta,
                    acc.accessory.rho,
                    acc.q,
                    IndexPair{nu, other},
                    std::move(pinned)};
    if (!rf_equal(f.index_pair.at_right * f.index_pair.other, f.alpha_beta)) {
        throw ConsistencyFailure("exponents at infinity do not multiply to alpha*beta for mask " + f.mask.str());
    }
    return f;
}

} // namespace

Factorization solve_splitting(const FamilySpec& family, const SplittingMask& mask) {
    const SymbolTablePtr& symbols = family.symbols;
    const auto n = static_cast<std::size_t>(family.k) + 2;
    if (mask.k() != family.k) {
        throw MaskMismatch("mask k does not match the family");
    }
    if (family.singularities.size() != n || family.exponents.size() != n) {
        throw InvalidInput("family needs k+2 singularities and exponents");
    }
    check_distinct_singularities(family.singularities);

    std::vector<RationalFunction> left_roots;
    std::vector<RationalFunction> right_roots;
    for (std::size_t i = 0; i < n; ++i) {
        (mask.in_left(i) ? left_roots : right_roots).push_back(family.singularities[i]);
    }
    const XPoly l = XPoly::from_roots(symbols, left_roots);
    const XPoly lbar = XPoly::from_roots(symbols, right_roots);
    const FuchsOperator target = build_heun(family.params());

    // Unknowns: M coefficients x^0..x^(j-1), then Mbar coefficients x^0..x^(n-j-1).
    // Equations: coefficients x^0..x^(n-1) of L Mbar + M Lbar = Q_mid - L Lbar'.
    const std::size_t m_count = left_roots.size();
    const std::size_t mbar_count = right_roots.size();
    std::vector<std::vector<RationalFunction>> a(n, std::vector<RationalFunction>(n, RationalFunction(symbols)));
    for (std::size_t j = 0; j < m_count; ++j) {
        for (int i = 0; i <= lbar.degree(); ++i) {
            a[static_cast<std::size_t>(i) + j][j] = lbar.coeff(i);
        }
    }
    for (std::size_t j = 0; j < mbar_count; ++j) {
        for (int i = 0; i <= l.degree(); ++i) {
            a[static_cast<std::size_t>(i) + j][m_count + j] = l.coeff(i);
        }
    }
    const XPoly rhs_poly = target.q_mid() - l * lbar.derivative();
    if (rhs_poly.degree() >= static_cast<int>(n)) {
        throw ConsistencyFailure("Q_mid - L Lbar' exceeds degree k+1");
    }
    std::vector<RationalFunction> rhs;
    rhs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        rhs.push_back(rhs_poly.coeff(static_cast<int>(i)));
    }
    const std::vector<RationalFunction> u = solve_linear_fraction_free(a, rhs);

    Factor left{l, from_unknowns(symbols, u, 0, m_count), left_roots};
    Factor right{lbar, from_unknowns(symbols, u, m_count, mbar_count), right_roots};
    FuchsOperator expanded = expand_factors(left, right);
    if (!(expanded.q_top() == target.q_top()) || !(expanded.q_mid() == target.q_mid())) {
        throw ConsistencyFailure("round trip failed for mask " + mask.str());
    }
    if (expanded.q_low().degree() > family.k) {
        throw DegreeOverflow("pinned Q_low exceeds degree k for mask " + mask.str());
    }
    HeunParams pinned_params = family.params();
    pinned_params.accessory = accessory_decompose(expanded.q_low(), family.k).accessory;
    FuchsOperator pinned(target.q_top(), target.q_mid(), expanded.q_low(), std::move(pinned_params));
    return complete(mask, std::move(left), std::move(right), std::move(pinned));
}

std::vector<FactorizationOutcome> factorize_all(const FamilySpec& family, bool include_trivial) {
    std::vector<FactorizationOutcome> out;
    for (const SplittingMask& mask : enumerate_splittings(family.k, include_trivial)) {
        try {
            Factorization f = solve_splitting(family, mask);
            FactorizationStatus status = FactorizationStatus::Ok;
            if (!mask.is_proper()) {
                // All-clear: L = 1, M = 0, Mbar = Q_mid - Q_top', integrable iff Q_low = Mbar'.
                // All-set: Lbar = 1, Mbar = 0, M = Q_mid, requiring Q_low = 0.
                const XPoly expected = mask.value() == 0 ? f.right.m_poly.derivative() : XPoly(family.symbols);
                status = f.pinned.q_low() == expected ? FactorizationStatus::TrivialIntegrable
                                                      : FactorizationStatus::NotFactorizable;
            }
            out.push_back({mask, status, std::move(f), {}});
        } catch (const SingularSystem& e) {
            out.push_back({mask, FactorizationStatus::Singular, std::nullopt, e.what()});
        }
    }
    return out;
}

IndexPair infinity_indices(const Factorization& f, const FamilySpec& family) {
    const RationalFunction nu = infinity_coefficient(f.right);
    IndexPair pair{nu, (family.fuchs_sum() - nu).simplified()};
    if (!rf_equal(pair.at_right * pair.other, f.alpha_beta)) {
        throw ConsistencyFailure("exponents at infinity do not multiply to alpha*beta");
    }
    return pair;
}

Factorization adjoint_factorization(const Factorization& f) {
    Factor left{f.right.l_poly, f.right.l_poly.derivative() - f.right.m_poly, f.right.roots};
    Factor right{f.left.l_poly, f.left.l_poly.derivative() - f.left.m_poly, f.left.roots};
    FuchsOperator pinned = adjoint(f.pinned);
    const FuchsOperator expanded = expand_factors(left, right);
    if (!operator_equal(expanded, pinned)) {
        throw ConsistencyFailure("adjoint factorization does not expand to the adjoint operator");
    }
    return complete(f.mask.complement(), std::move(left), std::move(right), std::move(pinned));
}

bool lame_swap_check(const Factorization& f, const Factorization& g) {
    if (!(g.mask == f.mask.complement())) {
        throw MaskMismatch("masks " + f.mask.str() + " and " + g.mask.str() + " are not complementary");
    }
    if (!f.pinned.params().is_lame() || !g.pinned.params().is_lame()) {
        throw NotLame("swap symmetry needs all exponents equal to 1/2");
    }
    return g.left.m_poly == -f.right.m_poly && g.right.m_poly == -f.left.m_poly;
}

bool lame_antisymmetry_holds(const Factorization& f) {
    const XPoly& l = f.left.l_poly;
    const XPoly& lbar = f.right.l_poly;
    const XPoly lhs = l * f.right.m_poly + f.left.m_poly * lbar;
    const XPoly rhs = (l.derivative() * lbar - l * lbar.derivative()) *
                      RationalFunction(l.symbols(), Rational(1, 2));
    return lhs == rhs;
}

} // namespace heunfact
