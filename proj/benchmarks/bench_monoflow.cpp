#include <benchmark/benchmark.h>

#include <random>

#include "monoflow/enumerate.hpp"
#include "monoflow/flow.hpp"
#include "monoflow/graph.hpp"
#include "monoflow/index.hpp"
#include "monoflow/orientation.hpp"
#include "monoflow/planar.hpp"

using namespace monoflow;

namespace {

void BM_PetersenTenTwo(benchmark::State& state) {
  const SignedGraph g = named::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(decide_pq_flow(g, 10, 2));
}
BENCHMARK(BM_PetersenTenTwo)->Unit(benchmark::kMillisecond);

void BM_PetersenRefuteNineHalves(benchmark::State& state) {
  const SignedGraph g = named::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(decide_pq_flow(g, 18, 4));
}
BENCHMARK(BM_PetersenRefuteNineHalves)->Unit(benchmark::kMillisecond);

void BM_IndexComplete(benchmark::State& state) {
  const SignedGraph g = named::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(circular_flow_index(g));
}
BENCHMARK(BM_IndexComplete)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_IndexT2K4(benchmark::State& state) {
  const SignedGraph g = t2_construction(named::complete(4));
  for (auto _ : state) benchmark::DoNotOptimize(circular_flow_index(g));
}
BENCHMARK(BM_IndexT2K4)->Unit(benchmark::kMillisecond);

void BM_HoffmanMaxFlowVsCuts(benchmark::State& state) {
  std::mt19937 rng(7);
  const int n = static_cast<int>(state.range(0));
  SignedGraph g(n);
  for (int i = 0; i < 2 * n; ++i) {
    int u = static_cast<int>(rng() % n);
    int w = static_cast<int>((u + 1 + rng() % (n - 1)) % n);
    g.add_edge(u, w, i % 3 == 0 ? Sign::Negative : Sign::Positive);
  }
  const Orientation d = Orientation::reference(g);
  NegativePartition pi;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!g.is_positive(e)) pi.low_set.push_back(e);
  }
  const bool cuts = state.range(1) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cuts ? hoffman_feasible_by_cuts(g, d, pi, Rational(5)) : hoffman_feasible(g, d, pi, Rational(5)));
  }
}
BENCHMARK(BM_HoffmanMaxFlowVsCuts)->ArgsProduct({{6, 10, 14}, {0, 1}});

void BM_CanonicalFormCycle(benchmark::State& state) {
  const SignedGraph g = named::cycle(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormCycle)->DenseRange(4, 10, 2);

void BM_EnumerateSigned(benchmark::State& state) {
  EnumerationBounds b;
  b.max_vertices = static_cast<int>(state.range(0));
  b.max_edges = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(connected_signed_multigraphs(b));
}
BENCHMARK(BM_EnumerateSigned)->Args({4, 6})->Args({5, 6})->Unit(benchmark::kMillisecond);

void BM_EulerianCertificate(benchmark::State& state) {
  const SignedGraph g = named::complete(5);
  for (auto _ : state) benchmark::DoNotOptimize(find_eulerian_certificate(g, EulerianForm::BoundaryOrientation, 1));
}
BENCHMARK(BM_EulerianCertificate);

void BM_DualityWheel(benchmark::State& state) {
  const PlaneGraph w = plane::wheel(static_cast<int>(state.range(0)), {0});
  for (auto _ : state) benchmark::DoNotOptimize(check_duality(w.graph, w.embedding));
}
BENCHMARK(BM_DualityWheel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_HomGrid(benchmark::State& state) {
  const PlaneGraph g = plane::grid(3, 3, {4});
  for (auto _ : state) benchmark::DoNotOptimize(hom_to_negative_cycle(g.graph, 2));
}
BENCHMARK(BM_HomGrid);

void BM_FoldGrid(benchmark::State& state) {
  const PlaneGraph g = plane::grid(2, 3, {2, 9});
  for (auto _ : state) benchmark::DoNotOptimize(fold_to_saturation(g.graph, g.embedding));
}
BENCHMARK(BM_FoldGrid);

}  // namespace

BENCHMARK_MAIN();
