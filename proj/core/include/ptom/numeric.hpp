#pragma once

// Independent ground truth for the closed forms: the self-consistent
// linearization working point, and fixed-step RK4 integration of the
// first-moment equations
//   d<a>/dt = -(i Delta + kappa) <a> + i G <b>
//   d<b>/dt = -(i omega_m - gamma) <b> + i G <a>
// and of the second moments n_a = <a^dag a>, n_b = <b^dag b>,
// c = <a^dag b>, including the +2 gamma noise source of the gain bath.
// Delta = omega_m = omega1 throughout.
//
// Integration runs in kappa-normalized time; sample times are reported in
// seconds.

#include <limits>
#include <stdexcept>
#include <vector>

#include "ptom/model.hpp"

namespace ptom::numeric {

/// Any moment magnitude beyond this halts integration (unstable regimes).
inline constexpr double kOverflowGuard = 1e12;

class StepSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output samples at t_k = t_end k/(samples-1); RK4 steps of at most dt
/// between consecutive samples.
struct TimeGrid {
  double t_end = 0.0;  // s
  double dt = 0.0;     // s
  int samples = 2;
};

/// 1e-3 / max(kappa, gamma, G, omega1).
double default_dt(const SystemParams& p);

/// Throws StepSizeError unless 0 < dt <= 0.01 min(1/kappa, 1/omega1), and
/// InvalidParameter on a malformed grid.
void check_grid(const SystemParams& p, const TimeGrid& grid);

struct FirstMomentSample {
  double t;
  cplx a;
  cplx b;
};

template <class Sample>
struct Trajectory {
  std::vector<Sample> samples;
  /// Set when the overflow guard stopped the run; samples end before it.
  bool truncated = false;
  double blowup_time = std::numeric_limits<double>::quiet_NaN();
};

using FirstMomentSeries = Trajectory<FirstMomentSample>;
using SecondMomentSeries = Trajectory<MomentState>;

FirstMomentSeries integrate_first_moments(const SystemParams& p,
                                          const CoherentInit& init,
                                          const TimeGrid& grid);

/// Integrates first and second moments together from the coherent-state
/// values n_a = |alpha|^2, n_b = |beta|^2, c = alpha^* beta.
SecondMomentSeries integrate_second_moments(const SystemParams& p,
                                            const CoherentInit& init,
                                            const TimeGrid& grid);

/// Time derivative of every field of `state` (t is ignored), SI units.
MomentState moment_rates(const SystemParams& p, const MomentState& state);

/// n_st = |first moment|^2 from `first`, n_sp = n - n_st with n from
/// `second`. Throws GridMismatch unless both share their sample times.
std::vector<NumberSplit> stimulated_spontaneous_split(
    const FirstMomentSeries& first, const SecondMomentSeries& second);

struct WorkingPoint {
  cplx alpha_s;
  cplx beta_s;
  double delta_eff;  // Delta_c - g (beta_s + beta_s^*), rad/s
  cplx G_eff;        // g alpha_s, rad/s
  int iterations;
  double residual;   // defect of the steady-state equations, relative
};

/// Fixed-point iteration of
///   alpha = Omega_L / (i Delta(beta) + kappa),
///   beta = i g |alpha|^2 / (i omega_m - gamma),
/// from alpha = Omega_L / (i Delta_c + kappa). The step is halved whenever
/// the residual grows. Throws NonConvergence after max_iter iterations.
WorkingPoint solve_working_point(const DriveParams& drive, double kappa,
                                 double gamma, int max_iter = 1000,
                                 double tol = 1e-12);

}  // namespace ptom::numeric
