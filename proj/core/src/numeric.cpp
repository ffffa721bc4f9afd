#include "ptom/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Core>

#include "ptom/format.hpp"
#include "ptom/rk4.hpp"

namespace ptom::numeric {

namespace {

constexpr cplx kI{0.0, 1.0};

using FirstState = Eigen::Matrix<cplx, 2, 1>;
// (a, b, n_a, n_b, c); n_a and n_b stay real.
using FullState = Eigen::Matrix<cplx, 5, 1>;

// Rates divided by kappa.
struct Normalized {
  double kappa;
  double gamma;
  double G;
  double omega1;

  explicit Normalized(const SystemParams& p)
      : kappa(p.kappa()),
        gamma(p.gamma() / p.kappa()),
        G(p.coupling() / p.kappa()),
        omega1(p.omega1() / p.kappa()) {}
};

FirstState first_rhs(const Normalized& n, const FirstState& y) {
  FirstState d;
  d(0) = -(kI * n.omega1 + 1.0) * y(0) + kI * n.G * y(1);
  d(1) = -(kI * n.omega1 - n.gamma) * y(1) + kI * n.G * y(0);
  return d;
}

FullState full_rhs(const Normalized& n, const FullState& y) {
  FullState d;
  d(0) = -(kI * n.omega1 + 1.0) * y(0) + kI * n.G * y(1);
  d(1) = -(kI * n.omega1 - n.gamma) * y(1) + kI * n.G * y(0);
  const double na = y(2).real();
  const double nb = y(3).real();
  const cplx c = y(4);
  // i G (c - c^*) = -2 G Im c
  const double exchange = -2.0 * n.G * c.imag();
  d(2) = -2.0 * na + exchange;
  d(3) = 2.0 * n.gamma * nb - exchange + 2.0 * n.gamma;
  d(4) = (n.gamma - 1.0) * c + kI * n.G * (na - nb);
  return d;
}

template <class State>
bool overflowed(const State& y) {
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (!(std::abs(y(i)) <= kOverflowGuard)) return true;
  }
  return false;
}

// Drives `step` over the grid in normalized time, calling `record(t_seconds,
// state)` at every sample. Returns the blow-up time (s) or NaN.
template <class State, class Step, class Record>
double run_grid(const SystemParams& p, const TimeGrid& grid, State y,
                Step&& step, Record&& record) {
  const double kappa = p.kappa();
  const double interval = grid.t_end / static_cast<double>(grid.samples - 1);
  const int steps = std::max(
      1, static_cast<int>(std::ceil(interval / grid.dt * (1.0 - 1e-12))));
  const double h = interval * kappa / static_cast<double>(steps);

  record(0.0, y);
  for (int k = 1; k < grid.samples; ++k) {
    for (int s = 0; s < steps; ++s) {
      y = step(y, h);
      if (overflowed(y)) {
        const double tau = (static_cast<double>(k - 1) * steps + s + 1) * h;
        return tau / kappa;
      }
    }
    const double t = k == grid.samples - 1
                         ? grid.t_end
                         : grid.t_end * static_cast<double>(k) /
                               static_cast<double>(grid.samples - 1);
    record(t, y);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

double default_dt(const SystemParams& p) {
  return 1e-3 / std::max({p.kappa(), p.gamma(), p.coupling(), p.omega1()});
}

void check_grid(const SystemParams& p, const TimeGrid& grid) {
  if (!(std::isfinite(grid.t_end) && grid.t_end > 0.0)) {
    throw InvalidParameter("t_end must be finite and > 0");
  }
  if (grid.samples < 2) throw InvalidParameter("samples must be >= 2");
  const double limit = 0.01 / std::max(p.kappa(), p.omega1());
  if (!(grid.dt > 0.0 && grid.dt <= limit * (1.0 + 1e-12))) {
    throw StepSizeError("dt must lie in (0, 0.01 min(1/kappa, 1/omega1)] = (0, " +
                        format_number(limit) + "] s; got " +
                        format_number(grid.dt));
  }
}

FirstMomentSeries integrate_first_moments(const SystemParams& p,
                                          const CoherentInit& init,
                                          const TimeGrid& grid) {
  check_grid(p, grid);
  init.validate();
  const Normalized n(p);
  FirstMomentSeries out;
  out.samples.reserve(static_cast<std::size_t>(grid.samples));

  FirstState y0;
  y0 << init.alpha, init.beta;
  out.blowup_time = run_grid(
      p, grid, y0,
      [&n](const FirstState& y, double h) {
        return rk4_step(y, h, [&n](const FirstState& s) { return first_rhs(n, s); });
      },
      [&out](double t, const FirstState& y) {
        out.samples.push_back({t, y(0), y(1)});
      });
  out.truncated = !std::isnan(out.blowup_time);
  return out;
}

SecondMomentSeries integrate_second_moments(const SystemParams& p,
                                            const CoherentInit& init,
                                            const TimeGrid& grid) {
  check_grid(p, grid);
  init.validate();
  const Normalized n(p);
  SecondMomentSeries out;
  out.samples.reserve(static_cast<std::size_t>(grid.samples));

  FullState y0;
  y0 << init.alpha, init.beta, std::norm(init.alpha), std::norm(init.beta),
      std::conj(init.alpha) * init.beta;
  out.blowup_time = run_grid(
      p, grid, y0,
      [&n](const FullState& y, double h) {
        return rk4_step(y, h, [&n](const FullState& s) { return full_rhs(n, s); });
      },
      [&out](double t, const FullState& y) {
        out.samples.push_back(
            MomentState{t, y(0), y(1), y(2).real(), y(3).real(), y(4)});
      });
  out.truncated = !std::isnan(out.blowup_time);
  return out;
}

MomentState moment_rates(const SystemParams& p, const MomentState& state) {
  const Normalized n(p);
  FullState y;
  y << state.a_mean, state.b_mean, state.n_a, state.n_b, state.ab_corr;
  const FullState d = full_rhs(n, y) * n.kappa;
  return MomentState{state.t, d(0), d(1), d(2).real(), d(3).real(), d(4)};
}

std::vector<NumberSplit> stimulated_spontaneous_split(
    const FirstMomentSeries& first, const SecondMomentSeries& second) {
  if (first.samples.size() != second.samples.size()) {
    throw GridMismatch("series lengths differ: " +
                       std::to_string(first.samples.size()) + " vs " +
                       std::to_string(second.samples.size()));
  }
  std::vector<NumberSplit> out;
  out.reserve(first.samples.size());
  for (std::size_t i = 0; i < first.samples.size(); ++i) {
    const auto& f = first.samples[i];
    const auto& s = second.samples[i];
    if (f.t != s.t) {
      throw GridMismatch("sample " + std::to_string(i) + " times differ");
    }
    const double na_st = std::norm(f.a);
    const double nb_st = std::norm(f.b);
    out.push_back({f.t, na_st, nb_st, s.n_a - na_st, s.n_b - nb_st});
  }
  return out;
}

WorkingPoint solve_working_point(const DriveParams& drive, double kappa,
                                 double gamma, int max_iter, double tol) {
  if (!(std::isfinite(kappa) && kappa > 0.0)) {
    throw InvalidParameter("kappa must be finite and > 0");
  }
  if (!(std::isfinite(gamma) && gamma >= 0.0)) {
    throw InvalidParameter("gamma must be finite and >= 0");
  }
  if (max_iter < 1) throw InvalidParameter("max_iter must be >= 1");
  const cplx mech_denominator{-gamma, drive.omega_m()};  // i omega_m - gamma
  if (std::abs(mech_denominator) == 0.0) {
    throw InvalidParameter("i omega_m - gamma must be nonzero");
  }

  const double g = drive.g_single();
  const double amp = drive.drive_amp();
  const double delta_c = drive.detuning();

  auto effective_detuning = [&](cplx beta) {
    return delta_c - g * 2.0 * beta.real();
  };
  auto alpha_of = [&](cplx beta) {
    return amp / (kI * effective_detuning(beta) + kappa);
  };
  auto beta_of = [&](cplx alpha) {
    return kI * g * std::norm(alpha) / mech_denominator;
  };

  cplx alpha = amp / (kI * delta_c + kappa);
  cplx beta = beta_of(alpha);
  double weight = 1.0;
  double last_residual = std::numeric_limits<double>::infinity();

  for (int it = 1; it <= max_iter; ++it) {
    const cplx alpha_target = alpha_of(beta);
    const cplx alpha_next = alpha + weight * (alpha_target - alpha);
    const cplx beta_next = beta_of(alpha_next);
    const double scale = std::max({1.0, std::abs(alpha_next), std::abs(beta_next)});
    const double residual =
        std::max(std::abs(alpha_next - alpha), std::abs(beta_next - beta)) / scale;
    if (residual > last_residual) weight *= 0.5;
    last_residual = residual;
    alpha = alpha_next;
    beta = beta_next;

    if (residual <= tol) {
      const double defect =
          std::max(std::abs(alpha - alpha_of(beta)), std::abs(beta - beta_of(alpha))) /
          std::max({1.0, std::abs(alpha), std::abs(beta)});
      return WorkingPoint{alpha, beta, effective_detuning(beta), g * alpha, it,
                          defect};
    }
  }
  throw NonConvergence("working point did not converge in " +
                       std::to_string(max_iter) +
                       " iterations (strong-drive or bistable regime); last "
                       "residual " + format_number(last_residual));
}

}  // namespace ptom::numeric
