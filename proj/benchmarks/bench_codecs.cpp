#include <benchmark/benchmark.h>

#include "gmmrans/flash_codec.hpp"
#include "gmmrans/gsm_codec.hpp"
#include "gmmrans/table_codec.hpp"
#include "gmmrans/workload.hpp"

using namespace gmmrans;

namespace {

Workload fixture(int n, int k, std::uint32_t symbols) {
  WorkloadSpec spec;
  spec.symbol_count = symbols;
  spec.components = k;
  spec.alphabet_size = n;
  spec.precision_bits = 16;
  spec.kind = ApproximatorKind::Logistic;
  spec.seed = 1;
  return generate_workload(spec);
}

void BM_NormalCdf(benchmark::State& state) {
  const auto kind = static_cast<ApproximatorKind>(state.range(0));
  double x = -6.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(std_normal_cdf(x, kind));
    x += 1e-4;
    if (x > 6.0) x = -6.0;
  }
}
BENCHMARK(BM_NormalCdf)->DenseRange(0, 3)->ArgNames({"kind"});

void BM_QuantizedBoundary(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Workload w = fixture(256, k, 64);
  const SymbolAlphabet alphabet = SymbolAlphabet::centered(256, 16);
  std::size_t i = 0;
  std::uint32_t j = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(quantized_boundary(
        w.params[i], alphabet, j, ApproximatorKind::Logistic));
    i = (i + 1) % w.params.size();
    j = 1 + (j % 255);
  }
}
BENCHMARK(BM_QuantizedBoundary)->DenseRange(1, 4)->ArgNames({"K"});

void BM_FlashEncode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Workload w = fixture(n, 3, 50'000);
  const SymbolAlphabet alphabet = SymbolAlphabet::centered(n, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        flash_encode(w.symbols, w.params, alphabet, ApproximatorKind::Logistic));
  }
  state.SetItemsProcessed(state.iterations() * 50'000);
}
BENCHMARK(BM_FlashEncode)->Arg(64)->Arg(256)->Arg(1024)->Arg(4096)
    ->Unit(benchmark::kMillisecond)->ArgNames({"N"});

void BM_FlashDecode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Workload w = fixture(n, 3, 50'000);
  const SymbolAlphabet alphabet = SymbolAlphabet::centered(n, 16);
  const EncodedStream s =
      flash_encode(w.symbols, w.params, alphabet, ApproximatorKind::Logistic);
  for (auto _ : state) {
    benchmark::DoNotOptimize(flash_decode(s));
  }
  state.SetItemsProcessed(state.iterations() * 50'000);
}
BENCHMARK(BM_FlashDecode)->Arg(64)->Arg(256)->Arg(1024)->Arg(4096)
    ->Unit(benchmark::kMillisecond)->ArgNames({"N"});

void BM_TableEncode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Workload w = fixture(n, 3, 5'000);
  const SymbolAlphabet alphabet = SymbolAlphabet::centered(n, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        table_encode(w.symbols, w.params, alphabet, ApproximatorKind::Logistic));
  }
  state.SetItemsProcessed(state.iterations() * 5'000);
}
BENCHMARK(BM_TableEncode)->Arg(64)->Arg(256)->Arg(1024)
    ->Unit(benchmark::kMillisecond)->ArgNames({"N"});

void BM_TableDecode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Workload w = fixture(n, 3, 5'000);
  const SymbolAlphabet alphabet = SymbolAlphabet::centered(n, 16);
  const EncodedStream s =
      table_encode(w.symbols, w.params, alphabet, ApproximatorKind::Logistic);
  for (auto _ : state) {
    benchmark::DoNotOptimize(table_decode(s));
  }
  state.SetItemsProcessed(state.iterations() * 5'000);
}
BENCHMARK(BM_TableDecode)->Arg(64)->Arg(256)->Arg(1024)
    ->Unit(benchmark::kMillisecond)->ArgNames({"N"});

void BM_GsmEncode(benchmark::State& state) {
  const ScaleTable table = gsm_init(16);
  WorkloadSpec spec;
  spec.symbol_count = 50'000;
  spec.seed = 1;
  const GsmWorkload w = generate_gsm_workload(spec, table);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsm_encode(w.symbols, w.means, w.sigmas, table));
  }
  state.SetItemsProcessed(state.iterations() * 50'000);
}
BENCHMARK(BM_GsmEncode)->Unit(benchmark::kMillisecond);

void BM_GsmDecode(benchmark::State& state) {
  const ScaleTable table = gsm_init(16);
  WorkloadSpec spec;
  spec.symbol_count = 50'000;
  spec.seed = 1;
  const GsmWorkload w = generate_gsm_workload(spec, table);
  const EncodedStream s = gsm_encode(w.symbols, w.means, w.sigmas, table);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsm_decode(s, table));
  }
  state.SetItemsProcessed(state.iterations() * 50'000);
}
BENCHMARK(BM_GsmDecode)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
