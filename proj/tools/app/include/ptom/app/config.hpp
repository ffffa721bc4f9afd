#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ptom/model.hpp"
#include "ptom/numeric.hpp"
#include "ptom/spectrum.hpp"

namespace ptom::app {

enum class Command { Classify, Sweep, Evolve, Steady, Figure, WorkPoint };
enum class OutputFormat { Csv, Json };
enum class SteadySweep { None, G, Gamma };

std::string to_string(Command c);
std::string to_string(OutputFormat f);
std::string to_string(SteadySweep s);

/// One CLI invocation. Rates are in units of kappa, times in units of
/// 1/kappa; kappa_hz fixes the absolute scale.
struct RunConfig {
  Command command = Command::Classify;

  double gamma = 0.6;
  double G = 1.2;
  std::optional<double> omega1;  // default: 2 pi 23.4 MHz / kappa_hz
  double kappa_hz = kDefaultKappa;
  double mass = kDefaultMass;

  double alpha_mag = 2.0;
  double alpha_phase = 3.14159265358979323846 / 6.0;
  double beta_mag = 2.0;
  double beta_phase = 3.14159265358979323846 / 3.0;

  double t_end = 10.0;
  std::optional<double> dt;  // default: numeric::default_dt
  int samples = 201;
  double tol = kDefaultClassifyTol;

  std::string out;  // empty: stdout
  OutputFormat format = OutputFormat::Csv;
  int precision = 12;

  // sweep
  AxisRange gamma_range{0.0, 2.0, 201};
  AxisRange G_range{0.0, 2.0, 201};
  unsigned threads = 0;

  // steady
  SteadySweep steady_sweep = SteadySweep::None;
  double sweep_from = 0.0;
  double sweep_to = 0.0;
  int sweep_n = 0;

  // evolve: pass iff |analytic - numeric| <= max_discrepancy |numeric| + abs_floor
  double max_discrepancy = 1e-6;
  double abs_floor = 1e-12;

  // figure
  std::string preset;
  bool show_preset = false;

  // workpoint (kappa units)
  double omega_c = 0.0;
  double omega_L = 0.0;
  double omega_m = 0.0;
  double g_single = 0.0;
  double drive_amp = 0.0;
  int max_iter = 1000;

  double omega1_over_kappa() const;
  SystemParams system() const;
  CoherentInit init() const;
  /// Grid in seconds; validates the step-size precondition.
  numeric::TimeGrid grid(const SystemParams& p) const;

  nlohmann::json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

}  // namespace ptom::app
