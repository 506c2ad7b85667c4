#include "heunfact/rational_function.hpp"

#include "heunfact/errors.hpp"

#include <utility>

namespace heunfact {

RationalFunction::RationalFunction(SymbolTablePtr symbols)
    : num_(symbols), den_(symbols, Rational(1)) {}

RationalFunction::RationalFunction(SymbolTablePtr symbols, const Rational& constant)
    : num_(symbols, constant), den_(symbols, Rational(1)) {}

RationalFunction::RationalFunction(ParamPoly num)
    : num_(std::move(num)), den_(num_.symbols(), Rational(1)) {}

RationalFunction::RationalFunction(ParamPoly num, ParamPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    require_same_symbols(num_.symbols(), den_.symbols());
    if (den_.is_zero()) {
        throw DivisionByZero("rational function with zero denominator");
    }
    normalize();
}

RationalFunction RationalFunction::variable(SymbolTablePtr symbols, std::size_t index) {
    return RationalFunction(ParamPoly::variable(std::move(symbols), index));
}

Rational RationalFunction::constant_value() const {
    return num_.constant_value() / den_.constant_value();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = ParamPoly(num_.symbols(), Rational(1));
        return;
    }
    if (den_.is_constant()) {
        const Rational d = den_.constant_value();
        if (!d.is_one()) {
            num_ *= Rational(1) / d;
            den_ = ParamPoly(num_.symbols(), Rational(1));
        }
        return;
    }
    if (auto q = num_.divide_exact(den_)) {
        num_ = std::move(*q);
        den_ = ParamPoly(num_.symbols(), Rational(1));
    }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    require_same_symbols(symbols(), rhs.symbols());
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
    return *this += -rhs;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    require_same_symbols(symbols(), rhs.symbols());
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
    require_same_symbols(symbols(), rhs.symbols());
    if (rhs.is_zero()) {
        throw DivisionByZero("division by a zero rational function");
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

RationalFunction operator*(RationalFunction lhs, const Rational& rhs) {
    lhs.num_ *= rhs;
    lhs.normalize();
    return lhs;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction RationalFunction::pow(unsigned exponent) const {
    RationalFunction out(symbols());
    out.num_ = num_.pow(exponent);
    out.den_ = den_.pow(exponent);
    out.normalize();
    return out;
}

bool rf_equal(const RationalFunction& f, const RationalFunction& g) {
    require_same_symbols(f.symbols(), g.symbols());
    return f.num() * g.den() == g.num() * f.den();
}

bool operator==(const RationalFunction& lhs, const RationalFunction& rhs) { return rf_equal(lhs, rhs); }

RationalFunction rf_simplify(const RationalFunction& f) {
    if (f.is_zero() || f.den().is_constant()) {
        return RationalFunction(f.num() * (Rational(1) / f.den().constant_value()));
    }
    if (auto q = f.num().divide_exact(f.den())) {
        return RationalFunction(std::move(*q));
    }
    const Rational cn = f.num().content();
    Rational cd = f.den().content();
    if (f.den().leading_coefficient().sign() < 0) {
        cd = -cd;
    }
    ParamPoly num = f.num() * (Rational(1) / cn);
    ParamPoly den = f.den() * (Rational(1) / cd);
    num *= cn / cd;
    return RationalFunction(std::move(num), std::move(den));
}

RationalFunction RationalFunction::simplified() const { return rf_simplify(*this); }

std::string RationalFunction::str() const {
    const RationalFunction s = simplified();
    if (s.den_.is_constant()) {
        return s.num_.str();
    }
    std::string num = s.num_.str();
    if (s.num_.term_count() > 1) {
        num = "(" + num + ")";
    }
    std::string den = s.den_.str();
    const bool bare_den = s.den_.term_count() == 1 && s.den_.leading_coefficient().is_one() &&
                          den.find('*') == std::string::npos;
    if (!bare_den) {
        den = "(" + den + ")";
    }
    return num + "/" + den;
}

RationalFunction substitute(const ParamPoly& p, std::span<const RationalFunction> values) {
    if (values.size() != p.symbols()->size()) {
        throw SymbolTableMismatch();
    }
    if (values.empty()) {
        return RationalFunction(make_symbols({}), p.constant_value());
    }
    const SymbolTablePtr& target = values.front().symbols();
    for (const auto& v : values) {
        require_same_symbols(target, v.symbols());
    }
    RationalFunction out(target);
    for (const auto& [e, c] : p.terms()) {
        RationalFunction term(target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) {
                term *= values[i].pow(e[i]);
            }
        }
        out += term;
    }
    return out;
}

RationalFunction substitute(const RationalFunction& f, std::span<const RationalFunction> values) {
    return substitute(f.num(), values) / substitute(f.den(), values);
}

RationalFunction rebase(const RationalFunction& f, const SymbolTablePtr& target) {
    if (same_symbols(f.symbols(), target)) {
        return f;
    }
    const SymbolTable& source = *f.symbols();
    if (source.size() == 0) {
        return RationalFunction(ParamPoly(target, f.num().constant_value()),
                                ParamPoly(target, f.den().constant_value()));
    }
    std::vector<bool> used(source.size(), false);
    for (const ParamPoly* p : {&f.num(), &f.den()}) {
        for (const auto& [e, c] : p->terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                used[i] = used[i] || e[i] != 0;
            }
        }
    }
    std::vector<RationalFunction> values;
    values.reserve(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        const auto j = target->index_of(source.name(i));
        if (j) {
            values.push_back(RationalFunction::variable(target, *j));
        } else if (!used[i]) {
            values.emplace_back(target);
        } else {
            throw UnknownSymbol(source.name(i), 0);
        }
    }
    return substitute(f, values);
}

} // namespace heunfact
