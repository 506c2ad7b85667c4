#include "heunfact/factorization.hpp"
#include "heunfact/linear_solve.hpp"
#include "heunfact/parse.hpp"
#include "heunfact/report.hpp"

#include <benchmark/benchmark.h>

#include <string>

namespace {

using namespace heunfact;

FamilySpec family_for(int k, bool lame) {
    ProblemFile p;
    p.k = k;
    for (int i = 0; i < k; ++i) {
        p.singularities.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    p.lame = lame;
    if (!lame) {
        p.exponents = {"gamma", "delta"};
        for (int i = 0; i < k; ++i) {
            p.exponents.push_back("eps" + std::to_string(i + 1));
        }
    }
    return make_family(p);
}

void BM_FactorizeAllLame(benchmark::State& state) {
    const FamilySpec family = family_for(static_cast<int>(state.range(0)), true);
    for (auto _ : state) {
        benchmark::DoNotOptimize(factorize_all(family, false));
    }
}
BENCHMARK(BM_FactorizeAllLame)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_FactorizeAllHeun(benchmark::State& state) {
    const FamilySpec family = family_for(static_cast<int>(state.range(0)), false);
    for (auto _ : state) {
        benchmark::DoNotOptimize(factorize_all(family, false));
    }
}
BENCHMARK(BM_FactorizeAllHeun)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_BareissSymbolic(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const SymbolTablePtr symbols = make_symbols({"a", "b", "c"});
    PolyMatrix m(n, std::vector<ParamPoly>(n, ParamPoly(symbols)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::string text = std::to_string(i + 1) + "*a^" + std::to_string((i + j) % 3) + " - " +
                                     std::to_string(j + 2) + "*b*c + " + std::to_string((i * j) % 5);
            m[i][j] = parse_coeff(text, symbols).num();
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(determinant_bareiss(m));
    }
}
BENCHMARK(BM_BareissSymbolic)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_ParseCoefficient(benchmark::State& state) {
    const SymbolTablePtr symbols = make_symbols({"a", "b", "gamma", "delta"});
    const std::string text = "(a*b*gamma - 3/4*(a + b)^2 + delta)/(a - b) - 1/4*(a + b + 4*a*b)";
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_coeff(text, symbols));
    }
}
BENCHMARK(BM_ParseCoefficient);

} // namespace

BENCHMARK_MAIN();
