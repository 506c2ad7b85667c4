#include "support/test_support.hpp"

#include "heunfact/errors.hpp"
#include "heunfact/linear_solve.hpp"
#include "heunfact/parse.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace heunfact;
using heunfact::testing::rf;
using heunfact::testing::syms;
using heunfact::testing::xp;

namespace {

const SymbolTablePtr ab = syms({"a", "b"});

ParamPoly poly(std::string_view text, const SymbolTablePtr& s = ab) {
    const auto f = rf(text, s);
    EXPECT_TRUE(f.is_polynomial());
    return f.num() * (Rational(1) / f.den().constant_value());
}

ParamPoly random_poly(std::mt19937& rng, const SymbolTablePtr& s) {
    std::uniform_int_distribution<int> terms(0, 4);
    std::uniform_int_distribution<std::uint32_t> exp(0, 3);
    std::uniform_int_distribution<long> coef(-9, 9);
    ParamPoly p(s);
    for (int t = terms(rng); t > 0; --t) {
        Exponents e(s->size());
        for (auto& x : e) {
            x = exp(rng);
        }
        p += ParamPoly::monomial(s, e, Rational(coef(rng), 1 + std::abs(coef(rng))));
    }
    return p;
}

} // namespace

TEST(Rational, ArithmeticAndPrinting) {
    EXPECT_EQ(Rational(2, 4).str(), "1/2");
    EXPECT_EQ((Rational(1, 2) + Rational(1, 3)).str(), "5/6");
    EXPECT_EQ(Rational(-6, 3).str(), "-2");
    EXPECT_TRUE(Rational(4, 2).is_integer());
    EXPECT_EQ(Rational(-3, 4).abs(), Rational(3, 4));
    EXPECT_EQ(Rational(2, 3).pow(3), Rational(8, 27));
    EXPECT_LT(Rational(-1, 2), Rational(1, 3));
    EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
    EXPECT_THROW(Rational(1, 0), DivisionByZero);
    EXPECT_EQ(Rational::from_integer_string("123456789012345678901234567890").str(),
              "123456789012345678901234567890");
    EXPECT_EQ(rational_gcd(Rational(3, 4), Rational(9, 8)), Rational(3, 8));
}

TEST(ParamPoly, ArithmeticExamples) {
    EXPECT_EQ(poly("a") * poly("b"), poly("a*b"));
    EXPECT_EQ(poly("1+a") * poly("1-a"), poly("1 - a^2"));
    EXPECT_EQ(poly("a+b+a*b") + poly("-a*b"), poly("a+b"));
    EXPECT_EQ(poly("a-b") - poly("a-b"), ParamPoly(ab));
    EXPECT_EQ(poly("a+1").pow(3), poly("a^3 + 3*a^2 + 3*a + 1"));
}

TEST(ParamPoly, CanonicalPrinting) {
    EXPECT_EQ(poly("b + a").str(), "a + b");
    EXPECT_EQ(poly("-1/2*a + b").str(), "-1/2*a + b");
    EXPECT_EQ(poly("1 + a*b + a^2").str(), "a^2 + a*b + 1");
    EXPECT_EQ(ParamPoly(ab).str(), "0");
    EXPECT_EQ(poly("-a").str(), "-a");
}

TEST(ParamPoly, DivideExactAndContent) {
    const auto q = (poly("a^2 - b^2")).divide_exact(poly("a - b"));
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, poly("a + b"));
    EXPECT_FALSE(poly("a + b").divide_exact(poly("a - b")).has_value());
    EXPECT_EQ(poly("2*a + 4*b").content(), Rational(2));
    EXPECT_EQ(poly("1/2*a + 1/3").content(), Rational(1, 6));
}

TEST(ParamPoly, RingAxiomsOnRandomPolynomials) {
    std::mt19937 rng(20261018);
    const auto s = syms({"a", "b", "c"});
    for (int i = 0; i < 200; ++i) {
        const auto p = random_poly(rng, s);
        const auto q = random_poly(rng, s);
        const auto r = random_poly(rng, s);
        EXPECT_EQ(p * (q + r), p * q + p * r);
        EXPECT_EQ(p * q, q * p);
        EXPECT_EQ((p + q) - q, p);
        if (!q.is_zero()) {
            const auto back = (p * q).divide_exact(q);
            ASSERT_TRUE(back.has_value());
            EXPECT_EQ(*back, p);
        }
        EXPECT_EQ(poly(p.str(), s), p);
    }
}

TEST(ParamPoly, MixedTablesAreRejected) {
    EXPECT_THROW(poly("a") + poly("a", syms({"a"})), SymbolTableMismatch);
}

TEST(Parse, SpecExamples) {
    EXPECT_TRUE(rf_equal(rf("-(a+b)/4", ab), RationalFunction(poly("-a-b"), ParamPoly(ab, Rational(4)))));
    EXPECT_TRUE(rf("0", ab).is_zero());
    const auto s = syms({"a", "b", "e1", "e2"});
    EXPECT_TRUE(rf_equal(rf("(1-e2)*a + (1-e1)*b", s), rf("a - e2*a + b - e1*b", s)));
}

TEST(Parse, Errors) {
    try {
        rf("2a", ab);
        FAIL() << "implicit multiplication accepted";
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.position(), 1U);
    }
    EXPECT_THROW(rf("a + c", ab), UnknownSymbol);
    EXPECT_THROW(rf("a/(b-b)", ab), DivisionByZero);
    EXPECT_THROW(rf("a^b", ab), SyntaxError);
    EXPECT_THROW(rf("a^2^2", ab), SyntaxError);
    EXPECT_THROW(rf("(a + b", ab), SyntaxError);
    EXPECT_THROW(rf("", ab), SyntaxError);
    EXPECT_THROW(rf("a $ b", ab), SyntaxError);
}

TEST(Parse, PrecedenceAndUnaryMinus) {
    EXPECT_EQ(rf("-a^2", ab).str(), "-a^2");
    EXPECT_EQ(rf("2*-a", ab).str(), "-2*a");
    EXPECT_EQ(rf("a - b - 1", ab).str(), "a - b - 1");
    EXPECT_EQ(rf("1/2/2", ab).str(), "1/4");
    EXPECT_EQ(rf("(a+b)^0", ab).str(), "1");
}

TEST(Parse, CollectIdentifiers) {
    EXPECT_EQ(collect_identifiers("gamma*a + b - a + eps1"),
              (std::vector<std::string>{"gamma", "a", "b", "eps1"}));
}

TEST(RationalFunction, EqualityExamples) {
    EXPECT_TRUE(rf_equal(rf("(a+b)/2", ab), rf("(2*a+2*b)/4", ab)));
    EXPECT_FALSE(rf_equal(rf("a/b", ab), rf("b/a", ab)));
    EXPECT_TRUE(rf_equal(rf("(a^2-b^2)/(a-b)", ab), rf("a+b", ab)));
}

TEST(RationalFunction, SimplifyExamples) {
    EXPECT_EQ(rf_simplify(rf("(2*a+2*b)/4", ab)).str(), "1/2*a + 1/2*b");
    const auto reduced = rf_simplify(rf("(a^2-b^2)/(a-b)", ab));
    EXPECT_TRUE(reduced.is_polynomial());
    EXPECT_EQ(reduced.str(), "a + b");
    const auto kept = rf_simplify(rf("(a+b)/(a-b)", ab));
    EXPECT_TRUE(rf_equal(kept, rf("(a+b)/(a-b)", ab)));
    EXPECT_EQ(kept.str(), "(a + b)/(a - b)");
}

TEST(RationalFunction, SubstituteAndRebase) {
    const auto none = syms({});
    std::vector<RationalFunction> values{RationalFunction(none, Rational(2)), RationalFunction(none, Rational(3))};
    EXPECT_EQ(substitute(rf("a*b + 1/a", ab), values).constant_value(), Rational(13, 2));
    const auto wider = syms({"b", "c", "a"});
    EXPECT_TRUE(rf_equal(rebase(rf("a - b", ab), wider), rf("a - b", wider)));
    EXPECT_THROW(rebase(rf("a", ab), syms({"b"})), UnknownSymbol);
    EXPECT_TRUE(rebase(rf("b", syms({"a", "b"})), syms({"b"})).str() == "b");
}

TEST(XPoly, MultiplicationExamples) {
    EXPECT_EQ(xp("x^2 - x", ab) * xp("x - a", ab), xp("x^3 - (a+1)*x^2 + a*x", ab));
    EXPECT_TRUE((xp("x", ab) * xp("0", ab)).is_zero());
    EXPECT_EQ(xp("x^2 - x", ab) * xp("x^2 - (a+b)*x + a*b", ab),
              xp("x^4 - (1+a+b)*x^3 + (a+b+a*b)*x^2 - a*b*x", ab));
}

TEST(XPoly, DerivativeExamples) {
    EXPECT_EQ(xpoly_derivative(xp("x^4 - (1+a+b)*x^3 + (a+b+a*b)*x^2 - a*b*x", ab)),
              xp("4*x^3 - 3*(1+a+b)*x^2 + 2*(a+b+a*b)*x - a*b", ab));
    EXPECT_TRUE(xpoly_derivative(xp("a + 7", ab)).is_zero());
    EXPECT_EQ(xpoly_derivative(xp("(x-a)*(x-b)", ab)), xp("2*x - (a+b)", ab));
}

TEST(XPoly, EvaluateExamples) {
    EXPECT_TRUE(rf_equal(xpoly_eval(xp("x^2 - x", ab), rf("a", ab)), rf("a^2 - a", ab)));
    const auto q4 = xp("x*(x-1)*(x-a)*(x-b)", ab);
    EXPECT_TRUE(xpoly_eval(q4, rf("b", ab)).is_zero());
    EXPECT_TRUE(xpoly_eval(q4, rf("a", ab)).is_zero());
    EXPECT_EQ(q4.divide_by_linear(rf("a", ab)), xp("x*(x-1)*(x-b)", ab));
    EXPECT_THROW(q4.divide_by_linear(rf("2", ab)), ConsistencyFailure);
}

TEST(XPoly, Printing) {
    EXPECT_EQ(xp("x^2 - (a+b)*x + a*b", ab).str(), "x^2 + (-a - b)*x + a*b");
    EXPECT_EQ(xp("x - (a+1)/2", ab).str(), "x - 1/2*a - 1/2");
    EXPECT_EQ(xp("-x + 1/2", ab).str(), "-x + 1/2");
    EXPECT_EQ(xp("0", ab).str(), "0");
    EXPECT_EQ(xp("-3/2*x^2 - a*x", ab).str(), "-3/2*x^2 - a*x");
}

TEST(XPoly, RoundTripThroughPrinting) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> c(-5, 5);
    for (int i = 0; i < 100; ++i) {
        std::vector<RationalFunction> coeffs;
        for (int d = 0; d < 4; ++d) {
            coeffs.push_back(rf(std::to_string(c(rng)) + "*a + " + std::to_string(c(rng)) + "/" +
                                    std::to_string(1 + std::abs(c(rng))) + "*b - " + std::to_string(c(rng)),
                                ab));
        }
        const XPoly p(ab, coeffs);
        EXPECT_EQ(xp(p.str(), ab), p) << p.str();
    }
}

TEST(LinearSolve, SpecExamples) {
    const auto a = poly("a");
    const PolyMatrix m{{poly("2"), poly("0")}, {poly("0"), a}};
    const std::vector<ParamPoly> rhs{poly("4"), poly("a^2")};
    const auto u = solve_linear_fraction_free(m, rhs);
    ASSERT_EQ(u.size(), 2U);
    EXPECT_TRUE(rf_equal(u[0], rf("2", ab)));
    EXPECT_TRUE(rf_equal(u[1], rf("a", ab)));
    EXPECT_TRUE(u[1].is_polynomial());

    const PolyMatrix singular{{a, a}, {poly("1"), poly("1")}};
    const std::vector<ParamPoly> ones{poly("1"), poly("1")};
    EXPECT_THROW(solve_linear_fraction_free(singular, ones), SingularSystem);
}

TEST(LinearSolve, LameKOneSystem) {
    // Coefficients of Q2 - L Lbar' for L = x^2 - x, Lbar = x - a, unknowns (B, A, Abar)
    // where M = A x + B and Mbar = Abar.
    const auto s = syms({"a"});
    auto p = [&](std::string_view t) { return poly(t, s); };
    const PolyMatrix m{{p("-a"), p("0"), p("0")}, {p("1"), p("-a"), p("-1")}, {p("0"), p("1"), p("1")}};
    const std::vector<ParamPoly> rhs{p("a/2"), p("-(a+1) + 1"), p("3/2 - 1")};
    const auto u = solve_linear_fraction_free(m, rhs);
    EXPECT_TRUE(rf_equal(u[0], rf("-1/2", s)));
    EXPECT_TRUE(rf_equal(u[1], rf("1", s)));
    EXPECT_TRUE(rf_equal(u[2], rf("-1/2", s)));
}

TEST(LinearSolve, DeterminantMatchesCofactorExpansion) {
    const auto s = syms({"a", "b"});
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        PolyMatrix m(3, std::vector<ParamPoly>(3, ParamPoly(s)));
        for (auto& row : m) {
            for (auto& e : row) {
                e = random_poly(rng, s);
            }
        }
        const auto cof = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        EXPECT_EQ(determinant_bareiss(m), cof);
    }
}

TEST(LinearSolve, RationalFunctionEntries) {
    const std::vector<std::vector<RationalFunction>> m{{rf("1/a", ab), rf("1", ab)}, {rf("0", ab), rf("b/(a+1)", ab)}};
    const std::vector<RationalFunction> rhs{rf("1 + b", ab), rf("b^2/(a+1)", ab)};
    const auto u = solve_linear_fraction_free(m, rhs);
    EXPECT_TRUE(rf_equal(u[0], rf("a", ab)));
    EXPECT_TRUE(rf_equal(u[1], rf("b", ab)));
}
