#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "ranktau/ranktau.hpp"

namespace {

using namespace ranktau;

ScoreVector shuffled_doubles(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    ScoreVector v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

ScoreVector tied_integers(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, 4);
    ScoreVector v(n);
    for (auto& x : v) x = double(dist(rng));
    return v;
}

void BM_SymmetricWeightedTau(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const ScoreVector r = shuffled_doubles(n, 1);
    const ScoreVector s = shuffled_doubles(n, 2);
    const auto w = WeightScheme::hyperbolic(Combiner::Additive);
    for (auto _ : state) {
        benchmark::DoNotOptimize(symmetric_weighted_tau(r, s, w));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_SymmetricWeightedTau)->RangeMultiplier(4)->Range(1 << 12, 1 << 22)->Complexity();

void BM_SymmetricWeightedTauTied(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const ScoreVector r = tied_integers(n, 1);
    const ScoreVector s = tied_integers(n, 2);
    const auto w = WeightScheme::hyperbolic(Combiner::Additive);
    for (auto _ : state) {
        benchmark::DoNotOptimize(symmetric_weighted_tau(r, s, w));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_SymmetricWeightedTauTied)->RangeMultiplier(4)->Range(1 << 12, 1 << 20)->Complexity();

void BM_WeightedExchangeCount(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const ScoreVector keys = shuffled_doubles(n, 3);
    RankAssignment ranks(n);
    std::iota(ranks.begin(), ranks.end(), 0);
    const auto w = WeightScheme::hyperbolic(Combiner::Additive);
    std::vector<std::size_t> items(n);
    for (auto _ : state) {
        std::iota(items.begin(), items.end(), 0);
        benchmark::DoNotOptimize(weighted_exchange_count(items, keys, ranks, w));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_WeightedExchangeCount)->RangeMultiplier(4)->Range(1 << 12, 1 << 22)->Complexity();

void BM_KendallTauB(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const ScoreVector r = tied_integers(n, 4);
    const ScoreVector s = tied_integers(n, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kendall_tau_b(r, s));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_KendallTauB)->RangeMultiplier(4)->Range(1 << 12, 1 << 22)->Complexity();

void BM_ApCorrelation(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const ScoreVector r = shuffled_doubles(n, 6);
    const ScoreVector s = shuffled_doubles(n, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ap_correlation(r, s));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_ApCorrelation)->RangeMultiplier(4)->Range(1 << 12, 1 << 22)->Complexity();

void BM_OracleBreakdown(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const ScoreVector r = tied_integers(n, 8);
    const ScoreVector s = tied_integers(n, 9);
    const RankAssignment ranks = lex_rank(r, s);
    const auto w = WeightScheme::hyperbolic(Combiner::Additive);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::breakdown(r, s, ranks, w));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_OracleBreakdown)->RangeMultiplier(2)->Range(1 << 8, 1 << 11)->Complexity();

}  // namespace

BENCHMARK_MAIN();
