#include "pd/checks.hpp"
#include "pd/mat.hpp"
#include "pd/power.hpp"

#include <benchmark/benchmark.h>

using namespace pd;

namespace {

void BM_PowerConstruction(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto k = static_cast<std::size_t>(st.range(1));
  Obj v = plain_space(n);
  for (auto _ : st) {
    clear_power_cache();
    benchmark::DoNotOptimize(power(v, Flavor::sym, k));
  }
}
BENCHMARK(BM_PowerConstruction)->Args({3, 3})->Args({4, 3})->Args({4, 4})->Unit(benchmark::kMillisecond);

void BM_Inverse(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  Mat m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, Rat(long((r * 7 + c * 3) % 5) - 2 + (r == c ? 9 : 0)));
  for (auto _ : st) benchmark::DoNotOptimize(inverse(m));
}
BENCHMARK(BM_Inverse)->Arg(8)->Arg(16)->Arg(32);

void BM_KeyLemma(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  Subject s = make_subject(Model::plain, n, 0, Flavor::alt);
  for (auto _ : st) {
    clear_power_cache();
    benchmark::DoNotOptimize(check_key_lemma(s, 1, n));
  }
}
BENCHMARK(BM_KeyLemma)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DualityTheorem(benchmark::State& st) {
  const auto g = static_cast<std::size_t>(st.range(0));
  Subject s = make_subject(Model::super, 0, g, Flavor::sym);
  for (auto _ : st) {
    clear_power_cache();
    for (int part = 1; part <= 4; ++part) benchmark::DoNotOptimize(check_theorem(s, g, 1, part));
  }
}
BENCHMARK(BM_DualityTheorem)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
