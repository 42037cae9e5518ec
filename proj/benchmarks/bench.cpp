#include <benchmark/benchmark.h>

#include <complex>

#include "annuli/elliptic.hpp"
#include "annuli/hamiltonian.hpp"
#include "annuli/params.hpp"
#include "annuli/period.hpp"
#include "annuli/surface.hpp"

using namespace annuli;

namespace {

const SpectralParams& sp_ref() {
  static SpectralParams sp = derive_spectral(-2.0, -0.5);
  return sp;
}

const WeierstrassData& data_ref() {
  static WeierstrassData d = build_data(sp_ref(), 1.0);
  return d;
}

void BM_weierstrass_eval(benchmark::State& state) {
  const RectLattice& lat = sp_ref().lattice;
  cplx z(0.37, 0.91);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lat.eval(z));
    z += cplx(1e-9, 0);
  }
}
BENCHMARK(BM_weierstrass_eval);

void BM_compute_lattice(benchmark::State& state) {
  LatticeInvariants inv{7.3, 1.1};
  for (auto _ : state) benchmark::DoNotOptimize(compute_lattice(inv));
}
BENCHMARK(BM_compute_lattice);

void BM_per(benchmark::State& state) {
  double r1 = -2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(per(r1, -0.5));
    r1 -= 1e-9;
  }
}
BENCHMARK(BM_per);

void BM_extract_ab(benchmark::State& state) {
  const WeierstrassData& d = data_ref();
  double a, b, u = 0.8;
  for (auto _ : state) {
    extract_ab(d, u, a, b);
    benchmark::DoNotOptimize(a);
    u += 1e-9;
  }
}
BENCHMARK(BM_extract_ab);

void BM_find_tau(benchmark::State& state) {
  SpectralParams sp = derive_spectral(-1.2, -1.0);
  for (auto _ : state) benchmark::DoNotOptimize(find_tau(sp));
}
BENCHMARK(BM_find_tau);

void BM_chart_row(benchmark::State& state) {
  const WeierstrassData& d = data_ref();
  for (auto _ : state)
    benchmark::DoNotOptimize(build_chart(d, 1.2, 1, 3, 128, {}, 1));
}
BENCHMARK(BM_chart_row);

}  // namespace

BENCHMARK_MAIN();
