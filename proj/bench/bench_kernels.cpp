// Serial reference kernels against their OpenMP counterparts on the ideals
// produced by the construction.

#include <benchmark/benchmark.h>

#include "idealpow/construction.hpp"
#include "idealpow/kernels.hpp"

namespace {

using idealpow::Backend;
using idealpow::Monomial;

const idealpow::MonomialIdeal& ideal_for(int nvars, int depth) {
  static const auto n2d6 = idealpow::construct(2, 6).ideal;
  static const auto n3d3 = idealpow::construct(3, 3).ideal;
  static const auto n3d4 = idealpow::construct(3, 4).ideal;
  if (nvars == 2) return n2d6;
  return depth == 3 ? n3d3 : n3d4;
}

// Raw products of I^(k-1) * I, before minimalization.
std::vector<Monomial> raw_products(const idealpow::MonomialIdeal& ideal, int k) {
  const auto lower = idealpow::power(ideal, k - 1, Backend::serial);
  return idealpow::kernels::pairwise_products_serial(lower.generators(), ideal.generators());
}

void BM_Minimalize(benchmark::State& state, Backend backend) {
  const auto& ideal = ideal_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto input = raw_products(ideal, static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto out = backend == Backend::openmp ? idealpow::kernels::minimal_elements_omp(input)
                                          : idealpow::kernels::minimal_elements_serial(input);
    benchmark::DoNotOptimize(out);
  }
  state.counters["candidates"] = static_cast<double>(input.size());
}

void BM_Products(benchmark::State& state, Backend backend) {
  const auto& ideal = ideal_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto lower = idealpow::power(ideal, static_cast<int>(state.range(1)) - 1, Backend::serial);
  for (auto _ : state) {
    auto out = backend == Backend::openmp
                   ? idealpow::kernels::pairwise_products_omp(lower.generators(), ideal.generators())
                   : idealpow::kernels::pairwise_products_serial(lower.generators(), ideal.generators());
    benchmark::DoNotOptimize(out);
  }
}

void BM_Power(benchmark::State& state, Backend backend) {
  const auto& ideal = ideal_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto out = idealpow::power(ideal, static_cast<int>(state.range(1)), backend);
    benchmark::DoNotOptimize(out);
  }
}

void shapes(benchmark::internal::Benchmark* b) { b->Args({2, 6})->Args({3, 3})->Args({3, 4}); }

}  // namespace

BENCHMARK_CAPTURE(BM_Minimalize, serial, Backend::serial)->Apply(shapes);
BENCHMARK_CAPTURE(BM_Minimalize, openmp, Backend::openmp)->Apply(shapes);
BENCHMARK_CAPTURE(BM_Products, serial, Backend::serial)->Apply(shapes);
BENCHMARK_CAPTURE(BM_Products, openmp, Backend::openmp)->Apply(shapes);
BENCHMARK_CAPTURE(BM_Power, serial, Backend::serial)->Apply(shapes);
BENCHMARK_CAPTURE(BM_Power, openmp, Backend::openmp)->Apply(shapes);

BENCHMARK_MAIN();
