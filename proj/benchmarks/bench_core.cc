#include <qdivisor/qdivisor.hpp>

#include <benchmark/benchmark.h>

static void BM_Factorize(benchmark::State& st) {
    const auto n = static_cast<std::uint64_t>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(qdivisor::factorize(n));
}
BENCHMARK(BM_Factorize)->Arg(720720)->Arg(999983)->Arg(963761198400);

static void BM_Polynomial(benchmark::State& st) {
    const auto divs = qdivisor::divisors(static_cast<std::uint64_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(qdivisor::polynomial(divs));
    st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_Polynomial)->RangeMultiplier(10)->Range(100, 1'000'000)->Complexity();

// Sparse sweep over interval endpoints versus the dense vector above.
static void BM_LargestCoefficient(benchmark::State& st) {
    const auto divs = qdivisor::divisors(static_cast<std::uint64_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(qdivisor::largest_coefficient(divs));
}
BENCHMARK(BM_LargestCoefficient)->Arg(720720)->Arg(963761198400);

static void BM_ErdosNicolasF(benchmark::State& st) {
    const auto divs = qdivisor::divisors(static_cast<std::uint64_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(qdivisor::erdos_nicolas_F(divs));
}
BENCHMARK(BM_ErdosNicolasF)->Arg(720720)->Arg(963761198400);

static void BM_ScanF(benchmark::State& st) {
    const auto end = static_cast<std::uint64_t>(st.range(0));
    for (auto _ : st) {
        std::uint64_t sum = 0;
        for (std::uint64_t n = 1; n <= end; ++n) sum += qdivisor::erdos_nicolas_F(n).value;
        benchmark::DoNotOptimize(sum);
    }
    st.SetItemsProcessed(static_cast<int64_t>(st.iterations()) * st.range(0));
}
BENCHMARK(BM_ScanF)->Arg(10'000)->Unit(benchmark::kMillisecond);

static void BM_ExpandProduct(benchmark::State& st) {
    const auto order = static_cast<std::uint32_t>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(qdivisor::expand_product(order));
}
BENCHMARK(BM_ExpandProduct)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
