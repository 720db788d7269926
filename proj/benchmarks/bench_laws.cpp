#include <cgc/gradual.hpp>
#include <cgc/parity.hpp>
#include <cgc/sign.hpp>

#include <benchmark/benchmark.h>

using namespace cgc;

namespace {

void BM_ParityLaws(benchmark::State& state) {
  const IntWindow w(static_cast<int>(state.range(0)));
  const auto gc = parity::parity_gc(w);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_correspondence(gc).passed());
    benchmark::DoNotOptimize(check_expansive(gc).passed());
    benchmark::DoNotOptimize(check_reductive(gc).passed());
  }
}
BENCHMARK(BM_ParityLaws)->Arg(8)->Arg(64)->Arg(512);

void BM_SignBestAbstraction(benchmark::State& state) {
  const IntWindow w(static_cast<int>(state.range(0)));
  const IntWindow wide = sign::result_window(w);
  const auto g = sign::sign_gc(w);
  const auto gw = sign::sign_gc(wide);
  const auto pp = product_gc(g, g);
  const auto f = sign::aop_fn(whilelang::AOp::Mul, pp.concrete, w, wide);
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_abstraction(f, pp.gc, gw));
  }
}
BENCHMARK(BM_SignBestAbstraction)->Arg(4)->Arg(8);

void BM_SignSoundness(benchmark::State& state) {
  const IntWindow w(8);
  const IntWindow wide = sign::result_window(w);
  const auto g = sign::sign_gc(w);
  const auto gw = sign::sign_gc(wide);
  const auto pp = product_gc(g, g);
  const auto f = sign::aop_fn(whilelang::AOp::Div, pp.concrete, w, wide);
  const auto fs = sign::aop_sharp_fn(whilelang::AOp::Div, pp.abstract);
  const auto v = kAllVariants[state.range(0)];
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_soundness(f, fs, pp.gc, gw, v).passed());
  }
  state.SetLabel(std::string(to_string(v)));
}
BENCHMARK(BM_SignSoundness)->DenseRange(0, 3);

void BM_GradualLaws(benchmark::State& state) {
  const gradual::GradualGC g(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_correspondence(g.gc()).passed());
  }
}
BENCHMARK(BM_GradualLaws)->Arg(2)->Arg(3);

void BM_GradualGuarantee(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gradual::check_gg(static_cast<int>(state.range(0)), 2).passed());
  }
}
BENCHMARK(BM_GradualGuarantee)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

} // namespace
