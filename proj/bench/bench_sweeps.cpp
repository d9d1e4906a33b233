#include <benchmark/benchmark.h>

#include "lucaspi/lucas_lehmer.hpp"
#include "lucaspi/numerics.hpp"
#include "lucaspi/pi_formulas.hpp"
#include "lucaspi/radicals.hpp"
#include "lucaspi/verify.hpp"

namespace {

using lucaspi::Execution;

constexpr int kBits = 199;  // 50 digits

Execution mode(const benchmark::State& state) {
  return state.range(0) ? Execution::parallel : Execution::serial;
}

void BM_PositiveZeros(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lucaspi::positive_zeros(n, kBits, mode(state)));
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (n - 1)));
}
BENCHMARK(BM_PositiveZeros)->ArgsProduct({{0, 1}, {12, 16}})->Unit(benchmark::kMillisecond);

void BM_IdentitySuite(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lucaspi::identity_suite(n, 200, kBits, 20240607, mode(state)));
  }
}
BENCHMARK(BM_IdentitySuite)->ArgsProduct({{0, 1}, {8, 12}})->Unit(benchmark::kMillisecond);

void BM_ConvergenceTable(benchmark::State& state) {
  lucaspi::TableSpec spec;
  spec.method = lucaspi::Method::gray;
  spec.m = 3;
  spec.h = 5;
  spec.n_first = 8;
  spec.n_last = 60;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lucaspi::convergence_table(spec, kBits, mode(state)));
  }
}
BENCHMARK(BM_ConvergenceTable)->ArgsProduct({{0, 1}, {0}})->Unit(benchmark::kMillisecond);

void BM_VerifySuite(benchmark::State& state) {
  const auto suite = static_cast<lucaspi::Suite>(state.range(1));
  lucaspi::VerifyOptions options;
  options.precision_bits = kBits;
  options.exec = mode(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lucaspi::run_verify(suite, options));
  }
  state.SetLabel(std::string(lucaspi::suite_name(suite)));
}
BENCHMARK(BM_VerifySuite)
    ->ArgsProduct({{0, 1},
                   {static_cast<int>(lucaspi::Suite::ordering),
                    static_cast<int>(lucaspi::Suite::exact_pi)}})
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
