#include <benchmark/benchmark.h>

#include <random>

#include "sl12/certificate.hpp"

namespace {

using namespace sl12;

std::pair<Natural, unsigned> split(unsigned q) { return *split_prime_power(q); }

void BM_ExtMul(benchmark::State& state) {
  const auto [p, m] = split(static_cast<unsigned>(state.range(0)));
  const auto spec = canonical_field(p, m);
  const ExtField& E = *spec.ext;
  std::mt19937_64 rng(1);
  ExtElem a, b;
  for (auto& c : a.c) c = FqElem{static_cast<std::uint32_t>(rng() % spec.base->order())};
  for (auto& c : b.c) c = FqElem{static_cast<std::uint32_t>(rng() % spec.base->order())};
  for (auto _ : state) {
    a = E.mul(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_ExtMul)->Arg(3)->Arg(49);

void BM_ZPowQ(benchmark::State& state) {
  const auto [p, m] = split(static_cast<unsigned>(state.range(0)));
  const Certificate c = generate(p, m);
  const BaseField F = *make_field(c.p, c.m, c.h, c.g).base;
  for (auto _ : state) benchmark::DoNotOptimize(mat::pow(F, c.z, c.Q));
}
BENCHMARK(BM_ZPowQ)->Arg(3)->Arg(49)->Unit(benchmark::kMicrosecond);

void BM_FactorizeGroupOrder(benchmark::State& state) {
  const Natural n = power(static_cast<unsigned>(state.range(0)), 11) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_FactorizeGroupOrder)->Arg(27)->Arg(49)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_Generate(benchmark::State& state) {
  const auto [p, m] = split(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(generate(p, m));
}
BENCHMARK(BM_Generate)->Arg(3)->Arg(16)->Arg(49)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  const auto [p, m] = split(static_cast<unsigned>(state.range(0)));
  const std::string text = encode(generate(p, m));
  for (auto _ : state) benchmark::DoNotOptimize(verify_json(text));
}
BENCHMARK(BM_Verify)->Arg(3)->Arg(49)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
