#include <benchmark/benchmark.h>

#include "hnerve/complex.hpp"
#include "hnerve/homology.hpp"
#include "hnerve/invariants.hpp"
#include "hnerve/monomial.hpp"
#include "hnerve/nerve.hpp"
#include "hnerve/random.hpp"

using namespace hnerve;

namespace {

const SimplicialComplex& example() {
  static const auto c =
      build_complex({{"A", "B", "C", "D"}, {"B", "C", "D", "E"}, {"D", "E", "F", "G"}, {"D", "F", "G", "H"}}).complex;
  return c;
}

const std::vector<SimplicialComplex>& corpus() {
  static const auto c = random_corpus(7, 64);
  return c;
}

void BM_ExampleTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nerve_table(example()));
}
BENCHMARK(BM_ExampleTable);

void BM_DepthViaNerves(benchmark::State& state) {
  for (auto _ : state)
    for (const auto& c : corpus()) benchmark::DoNotOptimize(depth_via_nerves(c));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus().size()));
}
BENCHMARK(BM_DepthViaNerves)->Unit(benchmark::kMillisecond);

void BM_DepthViaReisner(benchmark::State& state) {
  for (auto _ : state)
    for (const auto& c : corpus()) benchmark::DoNotOptimize(depth_via_reisner(c));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus().size()));
}
BENCHMARK(BM_DepthViaReisner)->Unit(benchmark::kMillisecond);

// Betti numbers of the full simplex boundary on n vertices.
void BM_SphereHomology(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<std::string>> raw;
  for (std::size_t skip = 0; skip < n; ++skip) {
    std::vector<std::string> facet;
    for (std::size_t v = 0; v < n; ++v)
      if (v != skip) facet.push_back("v" + std::to_string(v));
    raw.push_back(facet);
  }
  const auto sphere = build_complex(raw).complex;
  Config config;
  config.field = state.range(1) ? Field::prime(2) : Field::rationals();
  for (auto _ : state) benchmark::DoNotOptimize(betti_profile(sphere, config));
}
BENCHMARK(BM_SphereHomology)->ArgsProduct({{8, 10, 12}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Regularity(benchmark::State& state) {
  Rng rng(11);
  std::vector<MonomialIdeal> ideals;
  for (int k = 0; k < 32; ++k) ideals.push_back(random_nonsquarefree_ideal(rng));
  for (auto _ : state)
    for (const auto& i : ideals) benchmark::DoNotOptimize(regularity(i));
}
BENCHMARK(BM_Regularity)->Unit(benchmark::kMillisecond);

void BM_Subdivision(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(barycentric_subdivision(example()));
}
BENCHMARK(BM_Subdivision)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
