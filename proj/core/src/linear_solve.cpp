#include "heunfact/linear_solve.hpp"

#include "heunfact/errors.hpp"

#include <utility>

namespace heunfact {

namespace {

void require_square(const PolyMatrix& m) {
    for (const auto& row : m) {
        if (row.size() != m.size()) {
            throw InvalidInput("matrix is not square");
        }
    }
}

} // namespace

ParamPoly determinant_bareiss(PolyMatrix m) {
    require_square(m);
    const std::size_t n = m.size();
    if (n == 0) {
        return ParamPoly(make_symbols({}), Rational(1));
    }
    const SymbolTablePtr symbols = m[0][0].symbols();
    bool negate = false;
    ParamPoly previous(symbols, Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            return ParamPoly(symbols);
        }
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                ParamPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = t.divide_exact(previous);
                if (!q) {
                    throw ConsistencyFailure("Bareiss step is not exact");
                }
                m[i][j] = std::move(*q);
            }
            m[i][k] = ParamPoly(symbols);
        }
        previous = m[k][k];
    }
    ParamPoly det = m[n - 1][n - 1];
    return negate ? -det : det;
}

std::vector<RationalFunction> solve_linear_fraction_free(const PolyMatrix& a, std::span<const ParamPoly> rhs) {
    require_square(a);
    if (rhs.size() != a.size()) {
        throw InvalidInput("right-hand side length does not match the matrix");
    }
    const std::size_t n = a.size();
    std::vector<RationalFunction> solution;
    if (n == 0) {
        return solution;
    }
    const SymbolTablePtr symbols = a[0][0].symbols();
    for (const auto& row : a) {
        for (const auto& e : row) {
            require_same_symbols(symbols, e.symbols());
        }
    }
    for (const auto& r : rhs) {
        require_same_symbols(symbols, r.symbols());
    }
    const ParamPoly det = determinant_bareiss(a);
    if (det.is_zero()) {
        throw SingularSystem("determinant is identically zero");
    }
    solution.reserve(n);
    for (std::size_t col = 0; col < n; ++col) {
        PolyMatrix replaced = a;
        for (std::size_t row = 0; row < n; ++row) {
            replaced[row][col] = rhs[row];
        }
        solution.push_back(rf_simplify(RationalFunction(determinant_bareiss(std::move(replaced)), det)));
    }
    return solution;
}

std::vector<RationalFunction> solve_linear_fraction_free(
    const std::vector<std::vector<RationalFunction>>& a, std::span<const RationalFunction> rhs) {
    if (rhs.size() != a.size()) {
        throw InvalidInput("right-hand side length does not match the matrix");
    }
    PolyMatrix m;
    std::vector<ParamPoly> r;
    m.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<ParamPoly> dens;
        auto note = [&](const RationalFunction& f) {
            if (f.den().is_constant()) {
                return;
            }
            for (const auto& d : dens) {
                if (d == f.den()) {
                    return;
                }
            }
            dens.push_back(f.den());
        };
        for (const auto& e : a[i]) {
            note(e);
        }
        note(rhs[i]);
        ParamPoly scale(rhs[i].symbols(), Rational(1));
        for (const auto& d : dens) {
            scale *= d;
        }
        auto clear = [&](const RationalFunction& f) {
            auto q = (f.num() * scale).divide_exact(f.den());
            if (!q) {
                throw ConsistencyFailure("denominator clearing is not exact");
            }
            return std::move(*q);
        };
        std::vector<ParamPoly> row;
        row.reserve(a[i].size());
        for (const auto& e : a[i]) {
            row.push_back(clear(e));
        }
        m.push_back(std::move(row));
        r.push_back(clear(rhs[i]));
    }
    return solve_linear_fraction_free(m, r);
}

} // namespace heunfact
