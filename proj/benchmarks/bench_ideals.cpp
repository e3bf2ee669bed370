// Ideal arithmetic hot paths. Seeds are fixed so numbers stay comparable
// between runs and machines.

#include <benchmark/benchmark.h>

#include <cmi/ideal.hpp>
#include <cmi/polarization.hpp>
#include <cmi/random_gen.hpp>
#include <cmi/simplicial.hpp>

using namespace cmi;

static void BM_IdealIntersection(benchmark::State& state) {
    auto size = static_cast<std::size_t>(state.range(0));
    MonomialIdeal a = random_lq_ideal(6, 3, size, 11).ideal;
    MonomialIdeal b = random_lq_ideal(6, 3, size, 12).ideal;
    for (auto _ : state) {
        MonomialIdeal meet = ideal_intersection(a, b);
        benchmark::DoNotOptimize(meet);
    }
}
BENCHMARK(BM_IdealIntersection)->Arg(4)->Arg(8)->Arg(16);

static void BM_IdealSum(benchmark::State& state) {
    auto size = static_cast<std::size_t>(state.range(0));
    MonomialIdeal a = random_lq_ideal(6, 3, size, 21).ideal;
    MonomialIdeal b = random_lq_ideal(6, 3, size, 22).ideal;
    for (auto _ : state) {
        MonomialIdeal sum = ideal_sum(a, b);
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_IdealSum)->Arg(8)->Arg(16);

static void BM_AlexanderDual(benchmark::State& state) {
    SimplicialComplex c = random_pure_complex(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        MonomialIdeal dual = alexander_dual_ideal(c);
        benchmark::DoNotOptimize(dual);
    }
}
BENCHMARK(BM_AlexanderDual)->DenseRange(6, 12, 2);

static void BM_Polarize(benchmark::State& state) {
    MonomialIdeal ideal = random_lq_ideal(5, 4, 12, 23).ideal;
    for (auto _ : state) {
        MonomialIdeal flat = polarize_ideal(ideal);
        benchmark::DoNotOptimize(flat);
    }
}
BENCHMARK(BM_Polarize);

BENCHMARK_MAIN();
