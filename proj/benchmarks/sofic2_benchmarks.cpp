#include <benchmark/benchmark.h>

#include <string>

#include "sofic2/decisions.hpp"
#include "sofic2/presentation.hpp"
#include "sofic2/reductions.hpp"
#include "sofic2/structure.hpp"

using namespace sofic2;

namespace {

LabeledGraph chain(unsigned k) {
  LabeledGraph g;
  auto q = [](unsigned i) { return "q" + std::to_string(i); };
  g.add_edge(q(0), q(0), Symbol("0"));
  for (unsigned i = 0; i < k; ++i) {
    g.add_edge(q(i), q(i + 1), Symbol("1"));
    g.add_edge(q(i), q(i + 1), Symbol("2"));
  }
  g.add_edge(q(k), q(k), Symbol("3"));
  return g;
}

// n terms 0^* b_i (c_i d_i)^* sharing the loop on 0.
CombRep comb(std::size_t n) {
  std::vector<CombTerm> terms;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string s = std::to_string(i);
    terms.push_back(CombTerm::interleaved({word_of("0"), {Symbol("b" + s)}, {Symbol("c" + s), Symbol("d" + s)}}));
  }
  return CombRep(std::move(terms));
}

// Path graph on n vertices and its hom gadget.
StructureGraph path_gadget(std::size_t n) {
  SimpleGraph g;
  for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
  for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return hom_gadget(g);
}

void BM_BuildStructureChain(benchmark::State& state) {
  const LabeledGraph g = chain(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_structure(g));
}
BENCHMARK(BM_BuildStructureChain)->RangeMultiplier(4)->Range(4, 1024);

void BM_OracleStructureChain(benchmark::State& state) {
  const LabeledGraph g = chain(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_structure(g, 1'000'000));
}
BENCHMARK(BM_OracleStructureChain)->DenseRange(4, 16, 4);

void BM_FromCombRep(benchmark::State& state) {
  const CombRep r = comb(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(from_comb_rep(r));
}
BENCHMARK(BM_FromCombRep)->RangeMultiplier(2)->Range(2, 64);

void BM_SynthesizeRoundTrip(benchmark::State& state) {
  const StructureGraph s = build_structure(from_comb_rep(comb(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(build_structure(synthesize(s)));
}
BENCHMARK(BM_SynthesizeRoundTrip)->RangeMultiplier(2)->Range(2, 32);

void BM_DecideConjugacy(benchmark::State& state) {
  const StructureGraph s = build_structure(from_comb_rep(comb(static_cast<std::size_t>(state.range(0)))));
  const StructureGraph t = build_structure(synthesize(s));
  for (auto _ : state) benchmark::DoNotOptimize(decide(Mode::Conjugacy, s, t));
}
BENCHMARK(BM_DecideConjugacy)->RangeMultiplier(2)->Range(2, 32);

void BM_DecideBlockMapPaths(benchmark::State& state) {
  const StructureGraph x = path_gadget(static_cast<std::size_t>(state.range(0)));
  const StructureGraph y = path_gadget(2);
  for (auto _ : state) benchmark::DoNotOptimize(decide(Mode::BlockMap, x, y));
}
BENCHMARK(BM_DecideBlockMapPaths)->DenseRange(2, 10, 2);

}  // namespace

BENCHMARK_MAIN();
