#include <benchmark/benchmark.h>

#include <map>
#include <vector>

#include "boolfun/dense_function.hpp"
#include "boolfun/rng.hpp"
#include "boolfun/sparse_function.hpp"
#include "boolfun/wht.hpp"

namespace {

using namespace boolfun;

DenseFunction random_dense(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> values(domain_size(n));
  for (double& v : values) v = rng.next_uniform(-1.0, 1.0);
  return DenseFunction::unchecked(n, std::move(values));
}

// The transform contract is n 2^n work; the complexity fit below
// reports how close the measured trend comes to N log N over the
// table size N = 2^n.
void BM_WhtForward(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DenseFunction f = random_dense(n, 1);
  for (auto _ : state) {
    DenseFunction fhat = wht_forward(f);
    benchmark::DoNotOptimize(fhat.values().data());
  }
  state.SetComplexityN(static_cast<std::int64_t>(f.size()));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(f.size()));
}
BENCHMARK(BM_WhtForward)->DenseRange(10, 22, 2)->Complexity(benchmark::oNLogN);

void BM_WhtInplace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> scratch = random_dense(n, 2).values();
  for (auto _ : state) {
    wht_inplace(scratch);
    benchmark::DoNotOptimize(scratch.data());
  }
  state.SetComplexityN(static_cast<std::int64_t>(scratch.size()));
}
BENCHMARK(BM_WhtInplace)->DenseRange(10, 22, 2)->Complexity(benchmark::oNLogN);

void BM_ConvolveFast(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DenseFunction f = random_dense(n, 3);
  const DenseFunction g = random_dense(n, 4);
  for (auto _ : state) {
    DenseFunction conv = convolve_fast(f, g);
    benchmark::DoNotOptimize(conv.values().data());
  }
  state.SetComplexityN(static_cast<std::int64_t>(f.size()));
}
BENCHMARK(BM_ConvolveFast)->DenseRange(6, 14, 2)->Complexity(benchmark::oNLogN);

void BM_ConvolveNaive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DenseFunction f = random_dense(n, 5);
  const DenseFunction g = random_dense(n, 6);
  for (auto _ : state) {
    DenseFunction conv = convolve_naive(f, g);
    benchmark::DoNotOptimize(conv.values().data());
  }
  state.SetComplexityN(static_cast<std::int64_t>(f.size()));
}
BENCHMARK(BM_ConvolveNaive)->DenseRange(6, 14, 2)->Complexity(benchmark::oNSquared);

void BM_SparseToDense(benchmark::State& state) {
  const int n = 14;
  const auto k = static_cast<std::int64_t>(state.range(0));
  Rng rng(7);
  const SparseFunction f = [&] {
    std::map<GroupPoint, double> terms;
    while (terms.size() < static_cast<std::size_t>(k)) {
      terms[rng.next_below(domain_size(n))] = rng.next_uniform(-2.0, 2.0);
    }
    return SparseFunction(n, terms);
  }();
  for (auto _ : state) {
    DenseFunction dense = to_dense(f);
    benchmark::DoNotOptimize(dense.values().data());
  }
}
BENCHMARK(BM_SparseToDense)->RangeMultiplier(4)->Range(1, 256);

}  // namespace

BENCHMARK_MAIN();
