#include <benchmark/benchmark.h>

#include <random>

#include "weylstab/cli.hpp"
#include "weylstab/hilbert.hpp"
#include "weylstab/stab.hpp"

using namespace weylstab;

namespace {

AlgebraDescriptor algebra(std::uint32_t p, std::uint32_t d, std::uint32_t level = 0) {
    return AlgebraDescriptor{d, level, p, CoefficientKind::LocalField};
}

charvar::ModulePresentation cyclic(std::uint32_t p, std::initializer_list<const char*> rels) {
    charvar::ModulePresentation P{algebra(p, 1), 1, {}};
    for (const auto* r : rels)
        P.relations.push_back({cli::parse_expression(r, P.algebra)});
    return P;
}

} // namespace

static void BM_WeylProduct(benchmark::State& state) {
    auto a = algebra(5, 2);
    auto k = std::to_string(state.range(0));
    auto f = cli::parse_expression("(d1 + d2 + x1)^" + k, a);
    auto g = cli::parse_expression("(x1 + x2 + d2)^" + k, a);
    for (auto _ : state)
        benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_WeylProduct)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_GroebnerField(benchmark::State& state) {
    // cyclic-n style system over F_32003
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto ctx = cpoly::field_context(32003, n);
    std::vector<cpoly::Poly> gens;
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<gb::Term<cpoly::Field>> terms;
        for (std::size_t i = 0; i < n; ++i) {
            gb::Exponents e(n, 0);
            for (std::size_t j = 0; j < k; ++j)
                e[(i + j) % n] = 1;
            terms.push_back({gb::Monomial{0, e}, 1});
        }
        gens.push_back(ctx.normalize(terms));
    }
    gb::Exponents all(n, 1);
    gens.push_back(ctx.normalize({{gb::Monomial{0, all}, 1}, {gb::Monomial{0, gb::Exponents(n, 0)}, 32002}}));
    for (auto _ : state)
        benchmark::DoNotOptimize(cpoly::gb_field(ctx, {1, gens}));
}
BENCHMARK(BM_GroebnerField)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_StrongGroebnerLocal(benchmark::State& state) {
    auto ctx = cpoly::local_context(3, 3);
    std::mt19937 rng(1);
    std::vector<cpoly::LocalPoly> gens;
    for (int k = 0; k < state.range(0); ++k) {
        std::vector<gb::Term<cpoly::Local>> terms;
        for (int t = 0; t < 3; ++t) {
            gb::Exponents e(3, 0);
            for (int s = 0; s < 3; ++s)
                ++e[rng() % 3];
            terms.push_back({gb::Monomial{0, e}, Rational(static_cast<long>(rng() % 27) - 13)});
        }
        gens.push_back(ctx.normalize(terms));
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(cpoly::strong_gb_local(ctx, {1, gens}));
}
BENCHMARK(BM_StrongGroebnerLocal)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_HilbertNumerator(benchmark::State& state) {
    std::mt19937 rng(2);
    const std::size_t n = 6;
    hilbert::MonomialIdeal M;
    for (int k = 0; k < state.range(0); ++k) {
        gb::Exponents e(n, 0);
        for (int s = 0; s < 5; ++s)
            ++e[rng() % n];
        M.push_back(e);
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(hilbert::hilbert_polynomial(M, n));
}
BENCHMARK(BM_HilbertNumerator)->RangeMultiplier(2)->Range(8, 64);

static void BM_Scan(benchmark::State& state) {
    auto P = cyclic(5, {"x1^2*d1 - p*d1^2 + x1"});
    const bool parallel = state.range(0) != 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(stab::scan(P, 0, 6, {}, parallel));
}
BENCHMARK(BM_Scan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
