#include <benchmark/benchmark.h>

#include "cosmo/closed_forms.hpp"
#include "cosmo/exact_geometry.hpp"
#include "cosmo/malliavin_stein.hpp"
#include "cosmo/rng.hpp"
#include "cosmo/simulation.hpp"

namespace {

using namespace cosmo;

void BM_SampleSparse(benchmark::State& state) {
  const Node n = static_cast<Node>(state.range(0));
  const double p = 0.05;
  std::uint64_t rep = 0;
  for (auto _ : state) {
    const Graph g = sample_sparse(n, p, CounterRng::for_stream(1, rep++));
    benchmark::DoNotOptimize(g.arc_count());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * arc_slots(n) * p));
}
BENCHMARK(BM_SampleSparse)->Arg(128)->Arg(512)->Arg(2048);

void BM_SampleDense(benchmark::State& state) {
  const Node n = static_cast<Node>(state.range(0));
  std::uint64_t rep = 0;
  for (auto _ : state) {
    const Graph g = sample_dense(n, 0.05, CounterRng::for_stream(1, rep++));
    benchmark::DoNotOptimize(g.arc_count());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * arc_slots(n)));
}
BENCHMARK(BM_SampleDense)->Arg(128)->Arg(512);

void BM_ComputeStats(benchmark::State& state) {
  const Node n = static_cast<Node>(state.range(0));
  const Graph g = sample_sparse(n, 0.05, CounterRng::for_stream(2, 0));
  for (auto _ : state) {
    const GraphStats s = compute_stats(g);
    benchmark::DoNotOptimize(evaluate_functional(s, Functional::cosmo_edges));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.arc_count()));
}
BENCHMARK(BM_ComputeStats)->Arg(512)->Arg(4096);

void BM_LargeReplication(benchmark::State& state) {
  std::uint64_t rep = 0;
  for (auto _ : state) {
    const Graph g = sample_sparse(100000, 1e-3, CounterRng::for_stream(3, rep++));
    benchmark::DoNotOptimize(evaluate_functional(compute_stats(g), Functional::tri_edges));
  }
}
BENCHMARK(BM_LargeReplication)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_OracleEdgeSet(benchmark::State& state) {
  const Graph g = state.range(0) == 0 ? Graph::complete(4) : Graph::from_mask(5, 0b1011011011);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_edge_set(g).size());
}
BENCHMARK(BM_OracleEdgeSet)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_IsPolytopeEdge(benchmark::State& state) {
  const auto vertices = cosmo_vertices(Graph::complete(4));
  for (auto _ : state) benchmark::DoNotOptimize(is_polytope_edge(vertices, 0, 5));
}
BENCHMARK(BM_IsPolytopeEdge);

void BM_BTerms(benchmark::State& state) {
  const Node n = static_cast<Node>(state.range(0));
  const GraphFunctional f = cosmo_edge_functional();
  for (auto _ : state) benchmark::DoNotOptimize(b_terms(f, n, Rational(1, 2)).b1);
}
BENCHMARK(BM_BTerms)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_RunExperiment(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.n = 512;
  cfg.p = ProbabilityRule::literal(0.05);
  cfg.replications = 1000;
  cfg.master_seed = 4;
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(cfg).mean);
}
BENCHMARK(BM_RunExperiment)->Unit(benchmark::kMillisecond);

void BM_VarianceIntervalExact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(variance_interval_cosmo(512, Rational(1, 20)).upper);
}
BENCHMARK(BM_VarianceIntervalExact)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
