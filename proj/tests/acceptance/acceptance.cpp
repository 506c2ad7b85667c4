#include "support/test_support.hpp"

#include "heunfact/errors.hpp"
#include "heunfact/golden.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace heunfact;

namespace {

const std::filesystem::path golden_dir{HEUNFACT_TEST_GOLDEN_DIR};

/// Factorizations collected by criteria 1-3 and 6 for the adjoint suite.
std::vector<Factorization> audited;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

GoldenTable load_table(int id) {
    std::ifstream in(golden_path(golden_dir, id));
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_golden(buffer.str());
}

void check_tables(Outcome& out, std::initializer_list<int> ids) {
    for (const int id : ids) {
        const GoldenTable table = load_table(id);
        const TableComparison cmp = reproduce_table(table);
        out.require(cmp.ok(), "table " + std::to_string(id) + ": " + std::to_string(cmp.matches()) + "/" +
                                  std::to_string(cmp.expected.size()) + " rows match");
        const FamilySpec family = make_family(table.problem);
        for (const auto& row : table.rows) {
            audited.push_back(solve_splitting(family, SplittingMask::from_string(row.front())));
        }
    }
}

Outcome table_one() {
    Outcome out;
    check_tables(out, {1});
    return out;
}

Outcome tables_two_to_four() {
    Outcome out;
    check_tables(out, {2, 3, 4});
    std::map<std::string, int> counts;
    for (const auto& o : factorize_all(heunfact::testing::lame(2, {"a", "b"}), false)) {
        ++counts[o.factorization->alpha_beta.str()];
    }
    out.require(counts == std::map<std::string, int>{{"-2", 6}, {"-3/4", 4}, {"-15/4", 4}},
                "alpha*beta multiset differs");
    return out;
}

Outcome tables_five_to_seven() {
    Outcome out;
    check_tables(out, {5, 6, 7});
    return out;
}

Outcome specialization() {
    Outcome out;
    const auto heun = heunfact::testing::heun(2, {"a", "b"}, {"gamma", "delta", "eps1", "eps2"});
    const auto lame = heunfact::testing::lame(2, {"a", "b"});
    std::vector<RationalFunction> at_half{RationalFunction::variable(lame.symbols, 0),
                                          RationalFunction::variable(lame.symbols, 1)};
    for (int i = 0; i < 4; ++i) {
        at_half.emplace_back(lame.symbols, Rational(1, 2));
    }
    auto specialize = [&](const RationalFunction& f) { return substitute(f, at_half); };
    auto spec_poly = [&](const XPoly& p) {
        std::vector<RationalFunction> c;
        for (const auto& e : p.coeffs()) {
            c.push_back(specialize(e));
        }
        return XPoly(lame.symbols, std::move(c));
    };
    for (const auto& mask : enumerate_splittings(2, false)) {
        const auto h = solve_splitting(heun, mask);
        const auto l = solve_splitting(lame, mask);
        bool same = spec_poly(h.left.m_poly) == l.left.m_poly && spec_poly(h.right.m_poly) == l.right.m_poly &&
                    rf_equal(specialize(h.alpha_beta), l.alpha_beta) &&
                    rf_equal(specialize(h.index_pair.at_right), l.index_pair.at_right) &&
                    rf_equal(specialize(h.index_pair.other), l.index_pair.other);
        for (std::size_t i = 0; i < 2; ++i) {
            same = same && rf_equal(specialize(h.rho[i]), l.rho[i]);
        }
        out.require(same, "mask " + mask.str() + " does not specialize");
    }
    return out;
}

Outcome counting() {
    Outcome out;
    const std::size_t expected[] = {6, 14, 30, 62, 126};
    for (int k = 1; k <= 5; ++k) {
        const auto n = enumerate_splittings(k, false).size();
        out.require(n == expected[k - 1], "k=" + std::to_string(k) + " gives " + std::to_string(n));
    }
    return out;
}

Outcome property_suite() {
    Outcome out;
    std::mt19937 rng(20091014);
    std::uniform_int_distribution<int> kdist(1, 4);
    for (int trial = 0; trial < 50; ++trial) {
        const FamilySpec family = heunfact::testing::random_family(rng, kdist(rng));
        for (const auto& o : factorize_all(family, false)) {
            const std::string where = "family " + std::to_string(trial) + " mask " + o.mask.str();
            if (!o.factorization) {
                out.require(false, where + ": " + o.message);
                continue;
            }
            const Factorization& f = *o.factorization;
            out.require(operator_equal(expand_factors(f.left, f.right), f.pinned), where + ": round trip");
            out.require(f.pinned.q_low().degree() <= family.k, where + ": deg q_low");
            out.require(rf_equal(f.index_pair.at_right + f.index_pair.other, family.fuchs_sum()) &&
                            rf_equal(f.index_pair.at_right * f.index_pair.other, f.alpha_beta),
                        where + ": Fuchs relation");
            out.require(residual_numerator(f.pinned, right_solution(f)).is_zero(), where + ": residual");
            audited.push_back(f);
        }
    }
    return out;
}

Outcome lame_symmetry() {
    Outcome out;
    const std::vector<std::vector<std::string>> points{{"a"},
                                                       {"a", "b"},
                                                       {"a", "b", "c"},
                                                       {"a", "b", "c", "d"},
                                                       {"-3"},
                                                       {"1/2", "7"},
                                                       {"-2", "5/3", "9"},
                                                       {"-10", "-1/4", "3/2", "8"}};
    for (const auto& pts : points) {
        const FamilySpec family = heunfact::testing::lame(static_cast<int>(pts.size()), pts);
        std::map<std::uint64_t, Factorization> by_bits;
        for (const auto& o : factorize_all(family, false)) {
            by_bits.emplace(o.mask.value(), *o.factorization);
        }
        for (const auto& [bits, f] : by_bits) {
            const std::string where = "k=" + std::to_string(family.k) + " mask " + f.mask.str();
            out.require(lame_antisymmetry_holds(f), where + ": antisymmetry");
            out.require(lame_swap_check(f, by_bits.at(f.mask.complement().value())), where + ": swap");
        }
    }
    return out;
}

Outcome adjoint_suite() {
    Outcome out;
    for (const auto& f : audited) {
        const std::string where = "mask " + f.mask.str();
        const Factorization g = adjoint_factorization(f);
        out.require(operator_equal(expand_factors(g.left, g.right), adjoint(f.pinned)), where + ": coherence");
        const Factorization back = adjoint_factorization(g);
        out.require(back.mask == f.mask && back.left.m_poly == f.left.m_poly && back.right.m_poly == f.right.m_poly &&
                        operator_equal(back.pinned, f.pinned),
                    where + ": involution");
    }
    out.require(audited.size() > 28, "no factorizations collected from criteria 1-3 and 6");
    return out;
}

Outcome numeric_solutions() {
    Outcome out;
    const FamilySpec family = heunfact::testing::lame(1, {"2"});
    std::vector<double> pts;
    for (int i = 0; i < 20; ++i) {
        pts.push_back(-0.9 + 0.2 * i + 0.013);
    }
    const std::vector<double> interior{1.1, 1.3, 1.5, 1.7, 1.9};
    for (const auto& mask : enumerate_splittings(1, false)) {
        const Factorization f = solve_splitting(family, mask);
        const double r1 = ode_residual_numeric(f, pts);
        out.require(r1 < 1e-10, "mask " + mask.str() + ": y1 residual " + std::to_string(r1));
        const QuadratureSolution q = second_solution(f, Interval{1.05, 1.95}, 1.5);
        for (const double x : interior) {
            const double y2 = second_solution_eval(q, x, 1e-12);
            const double r2 = heunfact::testing::y2_residual_leibniz(f, q, x, y2);
            out.require(r2 < 1e-6, "mask " + mask.str() + ": y2 residual " + std::to_string(r2));
            const double ref =
                eval_power_product(q.prefactor, x) * heunfact::testing::reference_integral(q.integrand, 1.5, x);
            out.require(std::abs(y2 - ref) <= 1e-8 * (1 + std::abs(ref)),
                        "mask " + mask.str() + ": y2 differs from reference quadrature");
        }
    }
    return out;
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Table 1 reproduction", 1.0, table_one},
        {2, "Tables 2-4 reproduction and alpha*beta multiset", 2.0, tables_two_to_four},
        {3, "Tables 5-7 reproduction", 10.0, tables_five_to_seven},
        {4, "Specialization gamma=delta=eps=1/2", 10.0, specialization},
        {5, "Splitting counts for k=1..5", 1.0, counting},
        {6, "Property suite on 50 random families", 60.0, property_suite},
        {7, "Lame symmetry for k<=4", 60.0, lame_symmetry},
        {8, "Adjoint suite", 60.0, adjoint_suite},
        {9, "Numeric solution check", 5.0, numeric_solutions},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.ok = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (outcome.ok && seconds > c.budget_seconds) {
            outcome.ok = false;
            outcome.detail = "over the time budget";
        }
        failures += outcome.ok ? 0 : 1;
        std::printf("%s criterion %d: %s (%.2f s / %.0f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", c.id, c.name,
                    seconds, c.budget_seconds, outcome.ok ? "" : " -- ", outcome.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
