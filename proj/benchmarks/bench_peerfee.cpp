#include <benchmark/benchmark.h>

#include <filesystem>
#include <memory>

#include "peerfee/demand.hpp"
#include "peerfee/economics.hpp"
#include "peerfee/topology.hpp"

namespace {

using namespace peerfee;

const std::filesystem::path kCounties = std::filesystem::path(PEERFEE_BENCH_DATA_DIR) / "us_counties.csv";

const CountyTable& counties() {
  static const CountyTable t = load_counties(kCounties);
  return t;
}

std::shared_ptr<const IxpCatalog> catalog() {
  static const auto c = std::make_shared<const IxpCatalog>(IxpCatalog::us_default());
  return c;
}

void BM_LoadCounties(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(load_counties(kCounties));
}
BENCHMARK(BM_LoadCounties)->Unit(benchmark::kMillisecond);

void BM_NestedSummaries(benchmark::State& state) {
  const CountyTable& t = counties();
  for (auto _ : state) benchmark::DoNotOptimize(nested_distance_summaries(catalog(), t));
}
BENCHMARK(BM_NestedSummaries)->Unit(benchmark::kMillisecond);

void BM_DistanceSummaryPrefix(benchmark::State& state) {
  const CountyTable& t = counties();
  const PeeringSet s = PeeringSet::prefix(catalog(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(distance_summary(s, t));
}
BENCHMARK(BM_DistanceSummaryPrefix)->DenseRange(1, 12, 11)->Unit(benchmark::kMicrosecond);

void BM_BruteForceHot(benchmark::State& state) {
  std::vector<County> rows;
  const CountyTable& t = counties();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (std::size_t i = 0; i < n; ++i) rows.push_back(t[i * t.size() / n]);
  const CountyTable sub(std::move(rows));
  const PeeringSet s = PeeringSet::prefix(catalog(), 6);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_ed(s, sub, Routing::hot));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BruteForceHot)->RangeMultiplier(2)->Range(50, 400)->Complexity(benchmark::oNSquared);

void BM_TransitFeeGrid(benchmark::State& state) {
  const DistanceSummary full = distance_summary(PeeringSet::full(catalog()), counties());
  for (auto _ : state) {
    double acc = 0.0;
    for (int i = 0; i <= 100; ++i) {
      acc += fee_tp_isp(TrafficProfile::from_ratios(2.0, 1.0), LocalizationPolicy(i / 100.0),
                        CostParams{}, full)
                 .fee;
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_TransitFeeGrid);

}  // namespace

BENCHMARK_MAIN();
