#include <benchmark/benchmark.h>

#include "ammann/delzant.hpp"
#include "ammann/quasilattice.hpp"
#include "ammann/symmetry.hpp"
#include "ammann/tiling.hpp"

namespace ammann {
namespace {

void BM_GoldenMulInverse(benchmark::State& state) {
  const Golden x(Rational(17, 3), Rational(-5, 11));
  const Golden y(Rational(2, 7), Rational(9, 4));
  for (auto _ : state) {
    Golden z = x * y + x;
    benchmark::DoNotOptimize(z.inverse());
  }
}
BENCHMARK(BM_GoldenMulInverse);

void BM_GoldenSign(benchmark::State& state) {
  // Close to zero: 55 - 34 phi.
  const Golden x(Rational(55), Rational(-34));
  for (auto _ : state) benchmark::DoNotOptimize(x.sign());
}
BENCHMARK(BM_GoldenSign);

void BM_GenerateGroup(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generate_group());
}
BENCHMARK(BM_GenerateGroup)->Unit(benchmark::kMillisecond);

void BM_Canonicalize(benchmark::State& state) {
  Rhombohedron t = canonical_tile(TileType::Prolate);
  t.anchor = Quasilattice::R().combine({1, -2, 0, 3, 1, -1});
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(t));
}
BENCHMARK(BM_Canonicalize)->Unit(benchmark::kMicrosecond);

void BM_GeneratePatch(benchmark::State& state) {
  const GVec3 shift{{Golden(Rational(1, 70)), Golden(Rational(1, 110)), Golden(Rational(1, 130))}};
  const PatchConfig cfg = PatchConfig::make(Rational(static_cast<long>(state.range(0))), shift);
  std::size_t tiles = 0;
  for (auto _ : state) tiles = generate_patch(cfg).tiles.size();
  state.counters["tiles"] = static_cast<double>(tiles);
}
BENCHMARK(BM_GeneratePatch)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Delzant(benchmark::State& state) {
  const Rhombohedron t = canonical_tile(state.range(0) ? TileType::Prolate : TileType::Oblate);
  for (auto _ : state) benchmark::DoNotOptimize(delzant(t));
}
BENCHMARK(BM_Delzant)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_TransportCheck(benchmark::State& state) {
  Rhombohedron t = canonical_tile(TileType::Oblate);
  t.anchor = Quasilattice::R().combine({0, 1, 1, -2, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(transport_check(t));
}
BENCHMARK(BM_TransportCheck)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace ammann

BENCHMARK_MAIN();
