// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <numeric>

#include "schur/kernels.hpp"
#include "schur/random.hpp"

using namespace schur;

namespace {

struct Fixture {
  PermGroup g;
  UnitaryRep rep;
  CMatrix k;
  CVector u;
  std::vector<std::size_t> idx;
  std::vector<cplx> tensor;

  explicit Fixture(int n) : g(PermGroup::symmetric(n)), rep(UnitaryRep::builtin("natural_permutation", g)) {
    Rng rng(99);
    k = random_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n), rng);
    u = random_unit(rep.dim(), rng);
    idx.resize(g.order());
    std::iota(idx.begin(), idx.end(), 0);
    if (n <= 6) {
      tensor.resize(kernels::function_count(n) * rep.dim());
      for (auto& z : tensor) z = random_complex(rng);
    }
  }
};

const Fixture& fixture(int n) {
  static const Fixture f4(4), f5(5), f6(6), f7(7);
  switch (n) {
    case 4: return f4;
    case 5: return f5;
    case 6: return f6;
    default: return f7;
  }
}

template <kernels::Exec E>
void BM_gmf(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::gmf_sum(E, f.k, f.rep, f.idx, kernels::IndexForm::row_image));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(f.g.order()));
}

template <kernels::Exec E>
void BM_symmetrize(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::symmetrize(E, f.rep, f.u, f.k));
}

template <kernels::Exec E>
void BM_apply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& f = fixture(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::apply(E, f.rep, n, f.tensor));
}

}  // namespace

BENCHMARK(BM_gmf<kernels::Exec::serial>)->DenseRange(5, 7)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_gmf<kernels::Exec::parallel>)->DenseRange(5, 7)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_symmetrize<kernels::Exec::serial>)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_symmetrize<kernels::Exec::parallel>)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_apply<kernels::Exec::serial>)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_apply<kernels::Exec::parallel>)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
