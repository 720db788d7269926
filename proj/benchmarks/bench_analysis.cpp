#include <cgc/sign.hpp>

#include "fixtures.hpp"

#include <benchmark/benchmark.h>

using namespace cgc;

namespace {

void BM_Analyze(benchmark::State& state) {
  const auto& p = fixtures::programs().at(static_cast<std::size_t>(state.range(0)));
  const auto prog = whilelang::parse(p.source);
  auto vs = whilelang::assigned_vars(*prog);
  for (const auto& v : whilelang::free_vars(*prog)) vs.insert(v);
  const auto init = sign::uniform_env({vs.begin(), vs.end()}, sign::Sign::Any);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sign::analyze(prog, init));
  }
  state.SetLabel(p.name);
}
BENCHMARK(BM_Analyze)->DenseRange(0, static_cast<int>(fixtures::programs().size()) - 1);

void BM_Reachable(benchmark::State& state) {
  const auto prog = whilelang::parse("i := 3; j := 0; while 0 < i do (j := i; while 0 < j do j := j - 1; i := i - 1)");
  const IntWindow w(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(whilelang::reachable({{{"i", 0}, {"j", 0}}, prog}, w, 10000));
  }
}
BENCHMARK(BM_Reachable)->Arg(2)->Arg(8);

void BM_Parse(benchmark::State& state) {
  const std::string src = fixtures::programs().at(5).source;
  for (auto _ : state) {
    benchmark::DoNotOptimize(whilelang::parse(src));
  }
}
BENCHMARK(BM_Parse);

} // namespace

BENCHMARK_MAIN();
