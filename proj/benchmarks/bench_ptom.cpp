#include <benchmark/benchmark.h>

#include <numbers>

#include "ptom/analytic.hpp"
#include "ptom/numeric.hpp"
#include "ptom/spectrum.hpp"

namespace {

using namespace ptom;

SystemParams caption(double gamma, double G) {
  return SystemParams::from_kappa_units(gamma, G, kDefaultOmega1 / kDefaultKappa);
}

const CoherentInit kInit =
    CoherentInit::from_polar(2.0, std::numbers::pi / 6, 2.0, std::numbers::pi / 3);

void BM_ClosedFormDisplacement200(benchmark::State& state) {
  const auto p = caption(0.6, 1.2);
  const double t_end = 10.0 / p.kappa();
  for (auto _ : state) {
    double acc = 0.0;
    for (int k = 0; k < 200; ++k) acc += analytic::displacement(p, kInit, t_end * k / 199.0);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ClosedFormDisplacement200);

void BM_Rk4FirstMoments(benchmark::State& state) {
  const auto p = caption(0.6, 1.2);
  const numeric::TimeGrid grid{10.0 / p.kappa(), numeric::default_dt(p), 200};
  for (auto _ : state) {
    benchmark::DoNotOptimize(numeric::integrate_first_moments(p, kInit, grid));
  }
}
BENCHMARK(BM_Rk4FirstMoments)->Unit(benchmark::kMillisecond);

void BM_ClosedFormNumbers200(benchmark::State& state) {
  const auto p = caption(0.6, 0.798);
  const double t_end = 10.0 / p.kappa();
  for (auto _ : state) {
    double acc = 0.0;
    for (int k = 0; k < 200; ++k) {
      acc += analytic::numbers_unequal_gain(p, kInit, t_end * k / 199.0).n_b();
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ClosedFormNumbers200);

void BM_Rk4SecondMoments(benchmark::State& state) {
  const auto p = caption(0.6, 0.798);
  const numeric::TimeGrid grid{10.0 / p.kappa(), numeric::default_dt(p), 200};
  for (auto _ : state) {
    benchmark::DoNotOptimize(numeric::integrate_second_moments(p, kInit, grid));
  }
}
BENCHMARK(BM_Rk4SecondMoments)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  double G = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_normalized(0.6, G));
    G = G > 3.0 ? 0.0 : G + 1e-3;
  }
}
BENCHMARK(BM_Classify);

void BM_ClosedFormEigenvalues(benchmark::State& state) {
  const auto p = caption(1.8, 2.1);
  for (auto _ : state) benchmark::DoNotOptimize(drift_eigenvalues(p));
}
BENCHMARK(BM_ClosedFormEigenvalues);

void BM_DenseEigenvalues(benchmark::State& state) {
  const auto p = caption(1.8, 2.1);
  for (auto _ : state) benchmark::DoNotOptimize(dense_drift_eigenvalues(p));
}
BENCHMARK(BM_DenseEigenvalues);

void BM_PhaseDiagram201(benchmark::State& state) {
  const AxisRange axis{0.0, 2.0, 201};
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(phase_diagram(axis, axis, kDefaultClassifyTol, threads));
  }
}
BENCHMARK(BM_PhaseDiagram201)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
