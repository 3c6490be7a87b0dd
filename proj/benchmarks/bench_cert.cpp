#include <benchmark/benchmark.h>

#include "hitforge/cert_verify.hpp"
#include "hitforge/certificate.hpp"

using namespace hitforge;

namespace {

struct Fixture {
  std::vector<CoverSpec> covers{make_cover(parse_poly("y^2 - x1 - x2 - 1"))};
  BasePoint base = make_base_point({Rat(2), Rat(3)});
  std::string bytes;

  Fixture() {
    ProgressionConfig cfg;
    cfg.min_prime = 7;
    const auto r = find_progression(covers, base, cfg);
    const auto& f = std::get<ProgressionFound>(r);
    bytes = save(make_envelope(f.cert, f.trace));
  }
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

void BM_Save(benchmark::State& st) {
  const Envelope env = load(fixture().bytes);
  for (auto _ : st) benchmark::DoNotOptimize(save(env));
}
BENCHMARK(BM_Save);

void BM_Load(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(load(fixture().bytes));
}
BENCHMARK(BM_Load);

void BM_VerifyEnvelope(benchmark::State& st) {
  const auto& fx = fixture();
  const Envelope env = load(fx.bytes);
  VerifyInputs in;
  in.covers = fx.covers;
  in.base = fx.base;
  for (auto _ : st) benchmark::DoNotOptimize(verify_envelope(env, in));
}
BENCHMARK(BM_VerifyEnvelope);

}  // namespace
