#include "heunfact/xpoly.hpp"

#include "heunfact/errors.hpp"

#include <algorithm>
#include <utility>

namespace heunfact {

XPoly::XPoly(SymbolTablePtr symbols) : symbols_(std::move(symbols)) {}

XPoly::XPoly(SymbolTablePtr symbols, std::vector<RationalFunction> coeffs)
    : symbols_(std::move(symbols)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        require_same_symbols(symbols_, c.symbols());
    }
    trim();
}

XPoly XPoly::x(SymbolTablePtr symbols) {
    std::vector<RationalFunction> c{RationalFunction(symbols), RationalFunction(symbols, Rational(1))};
    return XPoly(std::move(symbols), std::move(c));
}

XPoly XPoly::constant(const RationalFunction& c) { return XPoly(c.symbols(), {c}); }

XPoly XPoly::linear_factor(const RationalFunction& root) {
    return XPoly(root.symbols(), {-root, RationalFunction(root.symbols(), Rational(1))});
}

XPoly XPoly::from_roots(SymbolTablePtr symbols, std::span<const RationalFunction> roots) {
    XPoly out = constant(RationalFunction(symbols, Rational(1)));
    for (const auto& r : roots) {
        out = out * linear_factor(r);
    }
    return out;
}

void XPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

bool XPoly::is_monic() const {
    return !coeffs_.empty() && rf_equal(coeffs_.back(), RationalFunction(symbols_, Rational(1)));
}

RationalFunction XPoly::coeff(int i) const {
    if (i < 0 || i > degree()) {
        return RationalFunction(symbols_);
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

RationalFunction XPoly::leading_coefficient() const {
    return coeffs_.empty() ? RationalFunction(symbols_) : coeffs_.back();
}

XPoly& XPoly::operator+=(const XPoly& rhs) {
    require_same_symbols(symbols_, rhs.symbols_);
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), RationalFunction(symbols_));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& rhs) { return *this += -rhs; }

XPoly operator*(const XPoly& lhs, const XPoly& rhs) {
    require_same_symbols(lhs.symbols_, rhs.symbols_);
    if (lhs.is_zero() || rhs.is_zero()) {
        return XPoly(lhs.symbols_);
    }
    std::vector<RationalFunction> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1,
                                      RationalFunction(lhs.symbols_));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (!rhs.coeffs_[j].is_zero()) {
                out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
            }
        }
    }
    return XPoly(lhs.symbols_, std::move(out));
}

XPoly operator*(const XPoly& lhs, const RationalFunction& rhs) {
    require_same_symbols(lhs.symbols_, rhs.symbols());
    std::vector<RationalFunction> out;
    out.reserve(lhs.coeffs_.size());
    for (const auto& c : lhs.coeffs_) {
        out.push_back(c * rhs);
    }
    return XPoly(lhs.symbols_, std::move(out));
}

XPoly XPoly::operator-() const {
    XPoly out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

XPoly XPoly::derivative() const {
    std::vector<RationalFunction> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
    }
    return XPoly(symbols_, std::move(out));
}

RationalFunction XPoly::evaluate(const RationalFunction& at) const {
    require_same_symbols(symbols_, at.symbols());
    RationalFunction acc(symbols_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

XPoly XPoly::divide_by_linear(const RationalFunction& root) const {
    if (coeffs_.empty()) {
        return *this;
    }
    // Synthetic division from the top coefficient down.
    std::vector<RationalFunction> q(coeffs_.size() - 1, RationalFunction(symbols_));
    RationalFunction carry(symbols_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const RationalFunction value = coeffs_[i] + carry * root;
        if (i == 0) {
            if (!value.is_zero()) {
                throw ConsistencyFailure("divide_by_linear: not a root");
            }
        } else {
            q[i - 1] = value;
        }
        carry = value;
    }
    return XPoly(symbols_, std::move(q));
}

XPoly XPoly::simplified() const {
    std::vector<RationalFunction> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        out.push_back(c.simplified());
    }
    return XPoly(symbols_, std::move(out));
}

std::string XPoly::str(std::string_view var) const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const RationalFunction c = coeffs_[i].simplified();
        if (c.is_zero()) {
            continue;
        }
        std::string power;
        if (i == 1) {
            power = std::string(var);
        } else if (i > 1) {
            power = std::string(var) + "^" + std::to_string(i);
        }
        std::string text = c.str();
        bool negative = false;
        const bool single = c.is_polynomial() && c.num().term_count() == 1;
        if (single && c.num().leading_coefficient().sign() < 0) {
            negative = true;
            text = (-c).str();
        } else if (power.empty() && !out.empty() && text.front() == '-') {
            negative = true;
            text.erase(0, 1);
        }
        std::string term;
        if (power.empty()) {
            term = text;
        } else if (text == "1") {
            term = power;
        } else if (single) {
            term = text + "*" + power;
        } else {
            term = "(" + text + ")*" + power;
        }
        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
    }
    return out;
}

bool operator==(const XPoly& lhs, const XPoly& rhs) {
    require_same_symbols(lhs.symbols_, rhs.symbols_);
    if (lhs.coeffs_.size() != rhs.coeffs_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (!rf_equal(lhs.coeffs_[i], rhs.coeffs_[i])) {
            return false;
        }
    }
    return true;
}

XPoly to_xpoly(const RationalFunction& f, std::string_view var, const SymbolTablePtr& target) {
    const auto xi = f.symbols()->index_of(var);
    if (!xi) {
        return XPoly::constant(rebase(f, target));
    }
    if (f.den().degree_in(*xi) != 0) {
        throw InvalidInput("denominator depends on " + std::string(var));
    }
    const RationalFunction den = rebase(RationalFunction(f.den()), target);
    std::vector<ParamPoly> parts(f.num().degree_in(*xi) + 1, ParamPoly(f.symbols()));
    for (const auto& [e, c] : f.num().terms()) {
        Exponents stripped = e;
        stripped[*xi] = 0;
        parts[e[*xi]] += ParamPoly::monomial(f.symbols(), std::move(stripped), c);
    }
    std::vector<RationalFunction> coeffs;
    coeffs.reserve(parts.size());
    for (auto& p : parts) {
        coeffs.push_back(rebase(RationalFunction(std::move(p)), target) / den);
    }
    return XPoly(target, std::move(coeffs));
}

} // namespace heunfact
