#pragma once

#include "heunfact/operator_model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace heunfact {

/// Assignment of the k+2 finite singularities to L (bit set) or Lbar (bit clear).
/// Bit i corresponds to singularity i of the family ([0, 1, a_1, ...]).
class SplittingMask {
public:
    SplittingMask(int k, std::uint64_t bits);
    static SplittingMask from_string(std::string_view bits);

    int k() const noexcept { return k_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(k_) + 2; }
    std::uint64_t value() const noexcept { return bits_; }
    bool in_left(std::size_t i) const { return (bits_ >> i) & 1U; }
    int popcount() const noexcept;
    bool is_proper() const noexcept;
    SplittingMask complement() const;
    /// Index 0 first, e.g. "1100" for L = x(x-1) when k = 2.
    std::string str() const;

    friend bool operator==(const SplittingMask&, const SplittingMask&) = default;

private:
    int k_;
    std::uint64_t bits_;
};

/// Proper masks (2^(k+2) - 2 of them) in ascending bit-pattern order, plus the
/// all-clear and all-set extremes when include_trivial.
std::vector<SplittingMask> enumerate_splittings(int k, bool include_trivial);

/// Family to factorize: HeunParams without accessory data.
struct FamilySpec {
    int k = 0;
    SymbolTablePtr symbols;
    std::vector<RationalFunction> singularities;
    std::vector<RationalFunction> exponents;

    HeunParams params() const;
    bool is_lame() const { return params().is_lame(); }
    RationalFunction fuchs_sum() const { return params().fuchs_sum(); }
};

FamilySpec lame_family(int k, const SymbolTablePtr& symbols, std::vector<RationalFunction> free_points);

/// Exponents at infinity: (nu of the right-factor solution, the other one).
struct IndexPair {
    RationalFunction at_right;
    RationalFunction other;
};

struct Factorization {
    SplittingMask mask;
    Factor left;
    Factor right;
    RationalFunction alpha_beta;
    std::vector<RationalFunction> rho;
    std::optional<RationalFunction> q;
    IndexPair index_pair;
    FuchsOperator pinned;
};

/// Solves for M (deg L - 1) and Mbar (deg Lbar - 1) from the Q_mid relation,
/// then pins Q_low = L Mbar' + M Mbar. The extreme masks are accepted too.
///
/// Throws SingularSystem for degenerate parameters and ConsistencyFailure if
/// the round trip fails.
Factorization solve_splitting(const FamilySpec& family, const SplittingMask& mask);

enum class FactorizationStatus { Ok, Singular, TrivialIntegrable, NotFactorizable };

std::string to_string(FactorizationStatus status);

struct FactorizationOutcome {
    SplittingMask mask;
    FactorizationStatus status;
    std::optional<Factorization> factorization;
    std::string message;
};

/// One outcome per mask in enumeration order. Per-mask SingularSystem failures
/// are recorded, not thrown.
std::vector<FactorizationOutcome> factorize_all(const FamilySpec& family, bool include_trivial);

/// (coefficient of x^(deg Lbar - 1) in Mbar, fuchs_sum - that). Throws
/// ConsistencyFailure unless the product equals alpha_beta.
IndexPair infinity_indices(const Factorization& f, const FamilySpec& family);

/// Factorization (Lbar D + Lbar' - Mbar)(L D + L' - M) of the Lagrange adjoint.
Factorization adjoint_factorization(const Factorization& f);

/// g.M == -f.Mbar and g.Mbar == -f.M. Throws MaskMismatch unless the masks
/// are complementary and NotLame unless all exponents are 1/2.
bool lame_swap_check(const Factorization& f, const Factorization& g);

/// L Mbar + M Lbar == (L' Lbar - L Lbar') / 2.
bool lame_antisymmetry_holds(const Factorization& f);

} // namespace heunfact
