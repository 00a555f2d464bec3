#include <benchmark/benchmark.h>

#include "edsbound/constants.hpp"
#include "edsbound/eds.hpp"
#include "edsbound/heights.hpp"

using namespace edsbound;

namespace {

AnalysisInput ref_input() {
  AnalysisInput in;
  in.curve = WeierstrassCurve::create(Rat(0), Rat(0), Rat(1), Rat(-1), Rat(0));
  in.point = CurvePoint::affine(Rat(0), Rat(0));
  in.conductor = 37;
  in.asserted_minimal = true;
  return in;
}

void BM_Sequence(benchmark::State& state) {
  auto in = ref_input();
  auto n = unsigned(state.range(0));
  for (auto _ : state) {
    auto terms = generate_sequence(in.curve, in.point, n);
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(BM_Sequence)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_Enclosure(benchmark::State& state) {
  auto in = ref_input();
  Real c_e = compute_c_e(in.curve, 128);
  for (auto _ : state) {
    auto enc = canonical_height_enclosure(in.curve, in.point, 1e-3, c_e, 128);
    benchmark::DoNotOptimize(enc);
  }
}
BENCHMARK(BM_Enclosure)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
  auto in = ref_input();
  Real c_e = compute_c_e(in.curve, 128);
  auto enc = canonical_height_enclosure(in.curve, in.point, 1e-3, c_e, 128);
  for (auto _ : state) {
    auto rep = analyze(in, enc, 128);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_Analyze)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
