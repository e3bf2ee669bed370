// Search and oracle benchmarks: in practice these dominate wall time, so
// regressions here matter more than in the arithmetic layer.

#include <benchmark/benchmark.h>

#include <cmi/cert_search.hpp>
#include <cmi/corpus.hpp>
#include <cmi/linear_quotients.hpp>
#include <cmi/oracle.hpp>
#include <cmi/random_gen.hpp>
#include <cmi/shelling.hpp>

using namespace cmi;

static void BM_FindLQ(benchmark::State& state) {
    auto size = static_cast<std::size_t>(state.range(0));
    MonomialIdeal ideal = random_lq_ideal(6, 2, size, 31).ideal;
    for (auto _ : state) {
        LQResult res = find_lq_order(ideal);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_FindLQ)->Arg(4)->Arg(6)->Arg(8);

static void BM_FindShelling(benchmark::State& state) {
    SimplicialComplex c = random_pure_complex(static_cast<int>(state.range(0)), 47);
    for (auto _ : state) {
        ShellingResult res = find_shelling(c);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_FindShelling)->DenseRange(5, 9, 2);

static void BM_FindCertificate(benchmark::State& state) {
    auto size = static_cast<std::size_t>(state.range(0));
    MonomialIdeal ideal = random_constructible(5, 2, size, 53).ideal;
    for (auto _ : state) {
        CertSearchResult res = find_certificate(ideal);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_FindCertificate)->Arg(3)->Arg(5);

// 17 generators of degree 5 in 8 variables, linear resolution: a realistic
// upper-Koszul workload with nontrivial candidate multidegrees.
static void BM_BettiOracle(benchmark::State& state) {
    CorpusEntry entry = corpus_load("dunce_hat_dual");
    const MonomialIdeal& ideal = *entry.ideal;
    for (auto _ : state) {
        BettiTable t = betti_table(ideal);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_BettiOracle);

static void BM_BettiFromLQ(benchmark::State& state) {
    LQSample sample = random_lq_ideal(7, 3, 20, 61);
    for (auto _ : state) {
        BettiTable t = betti_from_lq(sample.ideal, sample.order);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_BettiFromLQ);
