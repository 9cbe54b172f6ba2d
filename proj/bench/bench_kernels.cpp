// Serial reference vs OpenMP kernels. Run with --benchmark_filter=... as usual;
// set OMP_NUM_THREADS to vary the parallel side.

#include <benchmark/benchmark.h>

#include "hecke/affine_weyl.hpp"
#include "hecke/distinction.hpp"
#include "hecke/tensor_ops.hpp"

namespace {

using namespace hecke;

void BM_enumerate_serial(benchmark::State& st) {
  const int e = static_cast<int>(st.range(0)), L = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_by_length_serial(e, L));
}
void BM_enumerate_parallel(benchmark::State& st) {
  const int e = static_cast<int>(st.range(0)), L = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_by_length(e, L));
}
BENCHMARK(BM_enumerate_serial)->Args({3, 40})->Args({4, 14})->Args({5, 10})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_parallel)->Args({3, 40})->Args({4, 14})->Args({5, 10})->Unit(benchmark::kMillisecond);

void BM_integral_serial(benchmark::State& st) {
  const int e = static_cast<int>(st.range(0)), L = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(distinction_integral_serial(e, 1, Rational(2), L));
}
void BM_integral_parallel(benchmark::State& st) {
  const int e = static_cast<int>(st.range(0)), L = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(distinction_integral(e, 1, Rational(2), L));
}
BENCHMARK(BM_integral_serial)->Args({3, 40})->Args({5, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_integral_parallel)->Args({3, 40})->Args({5, 8})->Unit(benchmark::kMillisecond);

TensorVector sample_tensor(int e, int d) {
  TensorVector v(e, d, 1u << 20);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(static_cast<long>(i % 11) - 5, 1 + static_cast<long>(i % 3));
  return v;
}

void BM_apply_serial(benchmark::State& st) {
  const int e = static_cast<int>(st.range(0)), d = static_cast<int>(st.range(1));
  const auto v = sample_tensor(e, d);
  const auto op = gamma_operator(e) * t_operator(1, e);
  for (auto _ : st) benchmark::DoNotOptimize(apply_serial(op, v));
}
void BM_apply_parallel(benchmark::State& st) {
  const int e = static_cast<int>(st.range(0)), d = static_cast<int>(st.range(1));
  const auto v = sample_tensor(e, d);
  const auto op = gamma_operator(e) * t_operator(1, e);
  for (auto _ : st) benchmark::DoNotOptimize(apply(op, v));
}
BENCHMARK(BM_apply_serial)->Args({5, 4})->Args({7, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_apply_parallel)->Args({5, 4})->Args({7, 5})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
