#include <benchmark/benchmark.h>

#include "hitforge/elliptic.hpp"
#include "hitforge/kron.hpp"
#include "hitforge/pb_gate.hpp"
#include "hitforge/recurrence.hpp"
#include "hitforge/torus.hpp"

using namespace hitforge;

namespace {

CoverSpec anchor_cover() { return make_cover(parse_poly("y^2 - x1 - x2 - 1")); }
BasePoint anchor_base() { return make_base_point({Rat(2), Rat(3)}); }

void BM_OrbitScan(benchmark::State& st) {
  const auto covers = std::vector<CoverSpec>{anchor_cover()};
  const auto base = anchor_base();
  const auto l = static_cast<std::uint64_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(orbit_scan(covers, base, l, FiberMode::NoRationalPoint));
}
BENCHMARK(BM_OrbitScan)->Arg(7)->Arg(101)->Arg(1009);

void BM_FindProgression(benchmark::State& st) {
  const auto covers = std::vector<CoverSpec>{anchor_cover()};
  const auto base = anchor_base();
  for (auto _ : st) benchmark::DoNotOptimize(find_progression(covers, base, {}));
}
BENCHMARK(BM_FindProgression);

void BM_PowerFreeProgression(benchmark::State& st) {
  const auto spec = rec_from_quadratic(4, 5, 2, 4, 1, 2);
  for (auto _ : st) benchmark::DoNotOptimize(find_power_free_progression(spec, {}));
}
BENCHMARK(BM_PowerFreeProgression);

void BM_CountPoints(benchmark::State& st) {
  const auto E = make_curve(0, -2);
  const auto l = static_cast<std::uint64_t>(st.range(0));
  const auto Ered = std::get<CurveFl>(ec_reduce(E, l));
  for (auto _ : st) benchmark::DoNotOptimize(ec_count_points(Ered));
}
BENCHMARK(BM_CountPoints)->Arg(101)->Arg(10007);

void BM_Frobenius(benchmark::State& st) {
  const auto E = make_curve(0, -2);
  for (auto _ : st) benchmark::DoNotOptimize(ec_frobenius(E, 1009));
}
BENCHMARK(BM_Frobenius);

void BM_EllProgression(benchmark::State& st) {
  const auto E = make_curve(0, -2);
  const auto P = rational_point(3, 5);
  const std::vector<FiberSpec> fibers{make_fiber(parse_poly("T^2 - X"))};
  for (auto _ : st) benchmark::DoNotOptimize(ec_find_progression(E, P, fibers, {}));
}
BENCHMARK(BM_EllProgression);

void BM_PBCheck(benchmark::State& st) {
  const auto c = make_cover(parse_poly(st.range(0) == 2 ? "y^2 - x1 - x2 - 1" : "y^3 - x1 - x2 - 1"));
  for (auto _ : st) benchmark::DoNotOptimize(pb_check(c));
}
BENCHMARK(BM_PBCheck)->Arg(2)->Arg(3);

void BM_KronScan(benchmark::State& st) {
  const auto c = anchor_cover();
  for (auto _ : st) benchmark::DoNotOptimize(kron_scan(c, 2, static_cast<unsigned>(st.range(0))));
}
BENCHMARK(BM_KronScan)->Arg(10)->Arg(30);

}  // namespace
