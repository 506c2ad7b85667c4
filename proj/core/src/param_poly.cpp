#include "heunfact/param_poly.hpp"

#include "heunfact/errors.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace heunfact {

SymbolTable::SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (names_[i] == names_[j]) {
                throw InvalidInput("duplicate symbol '" + names_[i] + "'");
            }
        }
    }
}

std::optional<std::size_t> SymbolTable::index_of(std::string_view name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - names_.begin());
}

SymbolTablePtr make_symbols(std::vector<std::string> names) {
    return std::make_shared<const SymbolTable>(std::move(names));
}

bool same_symbols(const SymbolTablePtr& a, const SymbolTablePtr& b) {
    if (a == b) {
        return true;
    }
    if (!a || !b) {
        return false;
    }
    return *a == *b;
}

void require_same_symbols(const SymbolTablePtr& a, const SymbolTablePtr& b) {
    if (!same_symbols(a, b)) {
        throw SymbolTableMismatch();
    }
}

namespace {

std::uint64_t degree_of(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

} // namespace

bool GrlexDescending::operator()(const Exponents& lhs, const Exponents& rhs) const {
    const auto dl = degree_of(lhs);
    const auto dr = degree_of(rhs);
    if (dl != dr) {
        return dl > dr;
    }
    return std::lexicographical_compare(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
}

ParamPoly::ParamPoly(SymbolTablePtr symbols) : symbols_(std::move(symbols)) {
    if (!symbols_) {
        symbols_ = make_symbols({});
    }
}

ParamPoly::ParamPoly(SymbolTablePtr symbols, const Rational& constant) : ParamPoly(std::move(symbols)) {
    if (!constant.is_zero()) {
        terms_.emplace(Exponents(symbols_->size(), 0), constant);
    }
}

ParamPoly ParamPoly::variable(SymbolTablePtr symbols, std::size_t index) {
    Exponents e(symbols->size(), 0);
    e.at(index) = 1;
    return monomial(std::move(symbols), std::move(e), Rational(1));
}

ParamPoly ParamPoly::monomial(SymbolTablePtr symbols, Exponents exponents, const Rational& coeff) {
    ParamPoly p(std::move(symbols));
    if (exponents.size() != p.symbols_->size()) {
        throw SymbolTableMismatch();
    }
    if (!coeff.is_zero()) {
        p.terms_.emplace(std::move(exponents), coeff);
    }
    return p;
}

bool ParamPoly::is_constant() const {
    if (terms_.empty()) {
        return true;
    }
    return terms_.size() == 1 && degree_of(terms_.begin()->first) == 0;
}

Rational ParamPoly::constant_value() const {
    const auto it = terms_.find(Exponents(symbols_->size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t ParamPoly::total_degree() const {
    return terms_.empty() ? 0 : static_cast<std::uint32_t>(degree_of(terms_.begin()->first));
}

std::uint32_t ParamPoly::degree_in(std::size_t symbol) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, e.at(symbol));
    }
    return d;
}

const Exponents& ParamPoly::leading_monomial() const {
    if (terms_.empty()) {
        throw DomainError("leading monomial of the zero polynomial");
    }
    return terms_.begin()->first;
}

const Rational& ParamPoly::leading_coefficient() const {
    if (terms_.empty()) {
        throw DomainError("leading coefficient of the zero polynomial");
    }
    return terms_.begin()->second;
}

void ParamPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& rhs) {
    require_same_symbols(symbols_, rhs.symbols_);
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, c);
    }
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& rhs) {
    require_same_symbols(symbols_, rhs.symbols_);
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, -c);
    }
    return *this;
}

ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs) {
    require_same_symbols(lhs.symbols_, rhs.symbols_);
    ParamPoly out(lhs.symbols_);
    const std::size_t n = lhs.symbols_->size();
    Exponents e(n);
    for (const auto& [el, cl] : lhs.terms_) {
        for (const auto& [er, cr] : rhs.terms_) {
            for (std::size_t i = 0; i < n; ++i) {
                e[i] = el[i] + er[i];
            }
            out.add_term(e, cl * cr);
        }
    }
    return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly out = *this;
    for (auto& [e, c] : out.terms_) {
        c = -c;
    }
    return out;
}

ParamPoly ParamPoly::pow(unsigned exponent) const {
    ParamPoly result(symbols_, Rational(1));
    ParamPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& divisor) const {
    require_same_symbols(symbols_, divisor.symbols_);
    if (divisor.is_zero()) {
        throw DivisionByZero("polynomial division by zero");
    }
    ParamPoly quotient(symbols_);
    if (is_zero()) {
        return quotient;
    }
    if (divisor.is_constant()) {
        return *this * (Rational(1) / divisor.constant_value());
    }
    const std::size_t n = symbols_->size();
    const Exponents& dlm = divisor.leading_monomial();
    const Rational& dlc = divisor.leading_coefficient();
    ParamPoly remainder = *this;
    Exponents qe(n);
    while (!remainder.is_zero()) {
        const Exponents& rlm = remainder.leading_monomial();
        for (std::size_t i = 0; i < n; ++i) {
            if (rlm[i] < dlm[i]) {
                return std::nullopt;
            }
            qe[i] = rlm[i] - dlm[i];
        }
        const ParamPoly t = monomial(symbols_, qe, remainder.leading_coefficient() / dlc);
        quotient += t;
        remainder -= t * divisor;
    }
    return quotient;
}

Rational ParamPoly::content() const {
    if (terms_.empty()) {
        return Rational(1);
    }
    Rational g(0);
    for (const auto& [e, c] : terms_) {
        g = rational_gcd(g, c);
    }
    return g;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational magnitude = c.abs();
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += symbols_->name(i);
            if (e[i] > 1) {
                mono += '^' + std::to_string(e[i]);
            }
        }
        if (mono.empty()) {
            out += magnitude.str();
        } else if (magnitude.is_one()) {
            out += mono;
        } else {
            out += magnitude.str() + '*' + mono;
        }
    }
    return out;
}

bool operator==(const ParamPoly& lhs, const ParamPoly& rhs) {
    require_same_symbols(lhs.symbols_, rhs.symbols_);
    return lhs.terms_ == rhs.terms_;
}

} // namespace heunfact
