// Microbenchmarks for the exact-arithmetic kernels: Smith normal form,
// modular kernels, the isotypic decomposition, the Hodge-row pipeline, and
// the faithfulness certificate against its brute-force oracle.
#include <benchmark/benchmark.h>

#include <cstdint>

#include "fermatci/cover.hpp"
#include "fermatci/faithful.hpp"
#include "fermatci/group.hpp"
#include "fermatci/hodge.hpp"
#include "fermatci/involution.hpp"
#include "fermatci/linalg.hpp"

namespace {

using namespace fermatci;

/// Deterministic dense test matrix with entries in [-10, 10].
IntMatrix dense_matrix(std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  std::uint64_t x = 0x9e3779b97f4a7c15ull;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      x = x * 6364136223846793005ull + 1442695040888963407ull;
      m(i, j) = static_cast<long>(x % 21) - 10;
    }
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix m = dense_matrix(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(6)->Arg(8);

void BM_KernelMod(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix m = dense_matrix(n, n + 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_mod(m, 12));
}
BENCHMARK(BM_KernelMod)->Arg(6)->Arg(10);

void BM_SeparatingKernel(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const auto chars = separating_characters(n, 12);
  for (auto _ : state) benchmark::DoNotOptimize(joint_kernel_is_diagonal(chars));
}
BENCHMARK(BM_SeparatingKernel)->Arg(6)->Arg(10);

void BM_PrimitiveDecomposition(benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(primitive_decomposition(5, 2, 4, workers));
}
BENCHMARK(BM_PrimitiveDecomposition)->Arg(1)->Arg(2)->Arg(4);

void BM_HodgeMiddleRow(benchmark::State& state) {
  const MultiDegree md = make_multidegree({3, 4}, 7);
  for (auto _ : state) benchmark::DoNotOptimize(hodge_middle_row(md));
}
BENCHMARK(BM_HodgeMiddleRow);

void BM_StraightPolygonScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(straight_polygon_scan(7, 5, 3));
}
BENCHMARK(BM_StraightPolygonScan);

void BM_FaithfulCertificate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(faithfulness_certificate(5, 2, 3));
}
BENCHMARK(BM_FaithfulCertificate);

void BM_FaithfulBruteForce(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_faithful(5, 2, 3));
}
BENCHMARK(BM_FaithfulBruteForce);

void BM_InvolutionScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(involution_scan(6, 6));
}
BENCHMARK(BM_InvolutionScan);

}  // namespace

BENCHMARK_MAIN();
