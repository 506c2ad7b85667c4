#pragma once

#include "heunfact/xpoly.hpp"

#include <optional>
#include <vector>

namespace heunfact {

/// alpha*beta and rho_1..rho_k: q_low = alpha_beta x^k + sum rho_i x^(k-i).
struct Accessory {
    RationalFunction alpha_beta;
    std::vector<RationalFunction> rho;
};

/// Parameters of the k-Heun operator with finite singularities
/// [0, 1, a_1, ..., a_k] and exponents [gamma, delta, eps_1, ..., eps_k].
struct HeunParams {
    int k = 0;
    SymbolTablePtr symbols;
    std::vector<RationalFunction> singularities;
    std::vector<RationalFunction> exponents;
    std::optional<Accessory> accessory;

    /// gamma + delta + sum eps_i - 1, which equals alpha + beta.
    RationalFunction fuchs_sum() const;
    bool is_lame() const;

    /// Canonical [0, 1, a_1..a_k] list with the given free singularities.
    static std::vector<RationalFunction> standard_singularities(const SymbolTablePtr& symbols,
                                                                std::vector<RationalFunction> free_points);
};

/// Q_{k+2} D^2 + Q_{k+1} D + Q_k.
class FuchsOperator {
public:
    FuchsOperator(XPoly q_top, XPoly q_mid, std::optional<XPoly> q_low, HeunParams params);

    const XPoly& q_top() const noexcept { return q_top_; }
    const XPoly& q_mid() const noexcept { return q_mid_; }
    /// Throws MissingAccessory when the operator was built without accessory data.
    const XPoly& q_low() const;
    bool has_q_low() const noexcept { return q_low_.has_value(); }
    const HeunParams& params() const noexcept { return params_; }
    const SymbolTablePtr& symbols() const noexcept { return q_top_.symbols(); }

private:
    XPoly q_top_;
    XPoly q_mid_;
    std::optional<XPoly> q_low_;
    HeunParams params_;
};

/// First-order operator l_poly D + m_poly. `roots` lists the declared linear
/// factors of l_poly.
struct Factor {
    XPoly l_poly;
    XPoly m_poly;
    std::vector<RationalFunction> roots;
};

/// Throws CoincidentSingularities if two parameter-free singularities coincide.
void check_distinct_singularities(const std::vector<RationalFunction>& singularities);

FuchsOperator build_heun(const HeunParams& params);
FuchsOperator build_lame(int k, const SymbolTablePtr& symbols, std::vector<RationalFunction> free_points,
                         std::optional<Accessory> accessory = std::nullopt);

/// The three relations Q_top = L Lbar, Q_mid = L (Lbar' + Mbar) + M Lbar,
/// Q_low = L Mbar' + M Mbar.
FuchsOperator expand_factors(const Factor& left, const Factor& right);

bool operator_equal(const FuchsOperator& a, const FuchsOperator& b);

/// Lagrange adjoint: Q*_top = Q_top, Q*_mid = 2 Q_top' - Q_mid,
/// Q*_low = Q_top'' - Q_mid' + Q_low.
FuchsOperator adjoint(const FuchsOperator& h);

struct AccessoryDecomposition {
    Accessory accessory;
    /// k = 1 only: q = -rho_1 (numerator alpha*beta*x - q).
    std::optional<RationalFunction> q;
};

/// Reads alpha*beta (coefficient of x^k) and rho_i (coefficient of x^(k-i)).
/// Throws DegreeOverflow when deg q_low > k.
AccessoryDecomposition accessory_decompose(const XPoly& q_low, int k);

/// q_low built from accessory values.
XPoly accessory_polynomial(const Accessory& accessory, int k, const SymbolTablePtr& symbols);

/// Residue of q_mid / q_top at each declared singularity.
std::vector<RationalFunction> exponents_from_residues(const XPoly& q_top, const XPoly& q_mid,
                                                      const std::vector<RationalFunction>& singularities);

} // namespace heunfact
