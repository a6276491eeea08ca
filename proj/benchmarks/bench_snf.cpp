#include <benchmark/benchmark.h>

#include <random>

#include "pencil/gf.hpp"
#include "pencil/smith.hpp"

namespace {

pencil::Matrix random_matrix(const pencil::Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  pencil::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = pencil::Elem{static_cast<std::uint16_t>(rng() % f.q())};
  return m;
}

// Args: q, n, k.
void BM_PencilSnf(benchmark::State& state) {
  const pencil::Field f = pencil::Field::parse(std::to_string(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1)), k = static_cast<std::size_t>(state.range(2));
  std::mt19937_64 rng(1);
  std::vector<pencil::Matrix> pool;
  for (int i = 0; i < 64; ++i) pool.push_back(random_matrix(f, n, k, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(pencil::pencil_invariant_factors(f, pool[i++ % pool.size()]));
}
BENCHMARK(BM_PencilSnf)->Args({2, 3, 2})->Args({2, 4, 4})->Args({3, 5, 4})->Args({16, 4, 4})->Args({2, 8, 8});

void BM_DetDivisors(benchmark::State& state) {
  const pencil::Field f(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  const pencil::PolyMatrix a = pencil::pencil_matrix(f, random_matrix(f, n, n, rng));
  for (auto _ : state)
    for (std::size_t i = 1; i <= n; ++i) benchmark::DoNotOptimize(pencil::det_divisor(f, a, i));
}
BENCHMARK(BM_DetDivisors)->DenseRange(2, 5);

void BM_MaxInvariantSubspace(benchmark::State& state) {
  const pencil::Field f(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  const pencil::Matrix b = random_matrix(f, n + 1, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(pencil::max_invariant_subspace(f, b));
}
BENCHMARK(BM_MaxInvariantSubspace)->RangeMultiplier(2)->Range(2, 16);

}  // namespace
