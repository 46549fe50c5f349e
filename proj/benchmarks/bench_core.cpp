#include <benchmark/benchmark.h>

#include "oneshot/bounds.hpp"
#include "oneshot/game.hpp"
#include "oneshot/kssets.hpp"
#include "oneshot/strategy.hpp"

using namespace oneshot;

static void BM_IndependenceCk55(benchmark::State& state) {
  ClosureResult closed = completion_closure(builtin_vectors("ck31"));
  for (auto _ : state) {
    IndependenceResult r = independence_number(closed.scenario.orthogonality);
    benchmark::DoNotOptimize(r.size);
  }
}
BENCHMARK(BM_IndependenceCk55);

static void BM_ColourabilityKsChannel(benchmark::State& state) {
  Scenario s = load_builtin("peres24");
  auto [channel, encoding] = channel_from_scenario(s.hypergraph, s.dotted);
  Hypergraph h = channel_hypergraph(channel);
  for (auto _ : state) {
    ColourabilityResult r = ks_colourable(h);
    benchmark::DoNotOptimize(r.colourable);
  }
}
BENCHMARK(BM_ColourabilityKsChannel);

static void BM_CompletionClosure(benchmark::State& state) {
  VectorSet v = builtin_vectors("ck31");
  for (auto _ : state) {
    ClosureResult r = completion_closure(v);
    benchmark::DoNotOptimize(r.stages.size());
  }
}
BENCHMARK(BM_CompletionClosure);

static void BM_PolytopeVerticesPeres(benchmark::State& state) {
  Scenario s = load_builtin("peres24");
  for (auto _ : state) {
    auto verts = polytope_vertices(s.hypergraph);
    benchmark::DoNotOptimize(verts.size());
  }
}
BENCHMARK(BM_PolytopeVerticesPeres);

static void BM_BetaLinearizedPeres(benchmark::State& state) {
  Scenario s = load_builtin("peres24");
  Encoding enc;
  for (std::size_t i = 0; i < s.dotted.size(); ++i) {
    enc.messages.push_back("m" + std::to_string(i));
    enc.classes.push_back(s.hypergraph.names(s.hypergraph.edge(s.dotted[i])));
  }
  MessageEnsemble p = MessageEnsemble::uniform(6);
  for (auto _ : state) {
    BetaBound b = beta(s.hypergraph, enc, p, BoundMethod::LinearizedLp, 1'000'000,
                       static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(b.value);
  }
}
BENCHMARK(BM_BetaLinearizedPeres)->Arg(1)->Arg(2);

static void BM_CubittBox(benchmark::State& state) {
  Scenario s = load_builtin("peres24");
  for (auto _ : state) {
    auto [strat, wiring] = cubitt_strategy(s);
    CorrelationBox box = box_from_strategy(strat);
    benchmark::DoNotOptimize(box.p.size());
  }
}
BENCHMARK(BM_CubittBox);

static void BM_ClassicalMaxKsChannel(benchmark::State& state) {
  Scenario s = load_builtin("peres24");
  auto [channel, encoding] = channel_from_scenario(s.hypergraph, s.dotted);
  MessageEnsemble p = MessageEnsemble::uniform(6);
  for (auto _ : state) {
    ClassicalBound b = classical_max(channel, encoding.messages, p);
    benchmark::DoNotOptimize(b.value);
  }
}
BENCHMARK(BM_ClassicalMaxKsChannel);

BENCHMARK_MAIN();
