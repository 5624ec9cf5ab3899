// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <vector>

#include "dosc/corpus.hpp"
#include "dosc/kernels.hpp"
#include "dosc/parallel.hpp"
#include "dosc/transforms.hpp"

namespace {

using namespace dosc;

struct Setup {
  std::vector<double> y, x;
  std::vector<cplx> v;
  std::vector<std::size_t> cuts;
  explicit Setup(int n) {
    const SampledFn f = standard_corpus()[0].sample(n);
    const Grid G = default_frequency_grid(f.grid());
    for (std::size_t j = 0; j < f.size(); ++j) {
      y.push_back(f.grid().points()[j]);
      v.push_back(f[j] * f.grid().weights()[j]);
    }
    x = G.points();
    for (int c = 1; c <= 8; ++c) cuts.push_back(y.size() * c / 8);
  }
};

template <bool Parallel>
void BM_bessel_prefix(benchmark::State& st) {
  const Setup s(static_cast<int>(st.range(0)));
  std::vector<cplx> out(s.cuts.size() * s.x.size());
  const Order o(0.0);
  for (auto _ : st) {
    if constexpr (Parallel)
      kernels::bessel_prefix_parallel(kernels::Bessel::normalized, o, s.y, s.v, s.x, s.cuts, out);
    else
      kernels::bessel_prefix_serial(kernels::Bessel::normalized, o, s.y, s.v, s.x, s.cuts, out);
    benchmark::DoNotOptimize(out.data());
  }
  st.counters["threads"] = Parallel ? num_threads() : 1;
}

template <bool Parallel>
void BM_fourier(benchmark::State& st) {
  const Setup s(static_cast<int>(st.range(0)));
  std::vector<cplx> out(s.x.size());
  for (auto _ : st) {
    if constexpr (Parallel) kernels::fourier_parallel(-1.0, s.y, s.v, s.x, out);
    else kernels::fourier_serial(-1.0, s.y, s.v, s.x, out);
    benchmark::DoNotOptimize(out.data());
  }
  st.counters["threads"] = Parallel ? num_threads() : 1;
}

template <bool Parallel>
void BM_dunkl_direct(benchmark::State& st) {
  const Setup s(static_cast<int>(st.range(0)));
  std::vector<cplx> out(s.x.size());
  const Order o(0.5);
  for (auto _ : st) {
    if constexpr (Parallel) kernels::dunkl_direct_parallel(o, s.y, s.v, s.x, out);
    else kernels::dunkl_direct_serial(o, s.y, s.v, s.x, out);
    benchmark::DoNotOptimize(out.data());
  }
  st.counters["threads"] = Parallel ? num_threads() : 1;
}

BENCHMARK(BM_bessel_prefix<false>)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bessel_prefix<true>)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fourier<false>)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fourier<true>)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dunkl_direct<false>)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dunkl_direct<true>)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
