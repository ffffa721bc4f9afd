#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptom/app/commands.hpp"

namespace ptom::app {

namespace {

struct Optionals {
  double omega1 = 0.0;
  double dt = 0.0;
  std::vector<double> gamma_range;
  std::vector<double> G_range;
  int resolution = 0;
  std::string format = "csv";
  std::string sweep = "none";
  bool seedless = false;
};

void add_common(CLI::App* sub, RunConfig& c, Optionals& o) {
  sub->add_option("--gamma", c.gamma, "mechanical gain rate / kappa")
      ->envname("PTOM_GAMMA")
      ->capture_default_str();
  sub->add_option("--G", c.G, "effective optomechanical coupling / kappa")
      ->envname("PTOM_G")
      ->capture_default_str();
  sub->add_option("--omega1", o.omega1,
                  "common frequency / kappa (default 2 pi 23.4 MHz / kappa)")
      ->envname("PTOM_OMEGA1");
  sub->add_option("--kappa-hz", c.kappa_hz, "cavity loss rate kappa, 1/s")
      ->envname("PTOM_KAPPA_HZ")
      ->capture_default_str();
  sub->add_option("--mass", c.mass, "mechanical effective mass, kg")
      ->envname("PTOM_MASS")
      ->capture_default_str();
  sub->add_option("--alpha-mag", c.alpha_mag, "|alpha| of the initial cavity state")
      ->envname("PTOM_ALPHA_MAG")
      ->capture_default_str();
  sub->add_option("--alpha-phase", c.alpha_phase, "arg(alpha), rad")
      ->envname("PTOM_ALPHA_PHASE")
      ->capture_default_str();
  sub->add_option("--beta-mag", c.beta_mag, "|beta| of the initial mechanical state")
      ->envname("PTOM_BETA_MAG")
      ->capture_default_str();
  sub->add_option("--beta-phase", c.beta_phase, "arg(beta), rad")
      ->envname("PTOM_BETA_PHASE")
      ->capture_default_str();
  sub->add_option("--t-end", c.t_end, "final time, units of 1/kappa")
      ->envname("PTOM_T_END")
      ->capture_default_str();
  sub->add_option("--dt", o.dt,
                  "RK4 step, units of 1/kappa (default 1e-3/max(1, gamma, G, omega1))")
      ->envname("PTOM_DT");
  sub->add_option("--samples", c.samples, "output samples on [0, t_end]")
      ->envname("PTOM_SAMPLES")
      ->capture_default_str();
  sub->add_option("--tol", c.tol, "classification tolerance, kappa units")
      ->envname("PTOM_TOL")
      ->capture_default_str();
  sub->add_option("--out", c.out, "output path (default stdout)")->envname("PTOM_OUT");
  sub->add_option("--format", o.format, "csv or json")
      ->envname("PTOM_FORMAT")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--precision", c.precision, "significant digits in CSV")
      ->envname("PTOM_PRECISION")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
  sub->add_flag("--seedless", o.seedless,
                "accepted for scripts; every command is deterministic");
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"ptom: regimes and dynamics of a passive-cavity / active-mechanics "
               "optomechanical system"};
  app.require_subcommand(1);
  RunConfig c;
  Optionals o;

  auto* classify = app.add_subcommand("classify", "regime label, supermodes and drift eigenvalues");
  auto* sweep = app.add_subcommand("sweep", "phase diagram over (gamma, G)");
  auto* evolve = app.add_subcommand("evolve", "closed-form trajectory checked against RK4");
  auto* steady = app.add_subcommand("steady", "steady-state particle numbers");
  auto* figure = app.add_subcommand("figure", "run or show a figure preset");
  auto* workpoint = app.add_subcommand("workpoint", "self-consistent linearization working point");

  for (auto* sub : {classify, sweep, evolve, steady, figure, workpoint}) {
    add_common(sub, c, o);
  }

  sweep->add_option("--gamma-range", o.gamma_range, "gamma/kappa lo hi")->expected(2);
  sweep->add_option("--G-range", o.G_range, "G/kappa lo hi")->expected(2);
  sweep->add_option("--gamma-n", c.gamma_range.count, "gamma grid points");
  sweep->add_option("--G-n", c.G_range.count, "G grid points");
  sweep->add_option("--resolution", o.resolution, "grid points on both axes");
  sweep->add_option("--threads", c.threads, "worker threads (0 = auto)");

  steady->add_option("--sweep", o.sweep, "sweep axis: none, G or gamma")
      ->check(CLI::IsMember({"none", "G", "gamma"}));
  steady->add_option("--from", c.sweep_from, "sweep start, kappa units");
  steady->add_option("--to", c.sweep_to, "sweep end, kappa units");
  steady->add_option("--n", c.sweep_n, "sweep points");

  for (auto* sub : {evolve, figure}) {
    sub->add_option("--max-discrepancy", c.max_discrepancy,
                    "relative analytic/numeric tolerance")
        ->capture_default_str();
    sub->add_option("--abs-floor", c.abs_floor,
                    "absolute tolerance floor (x in units of x_zpf)")
        ->capture_default_str();
  }

  figure->add_option("preset", c.preset, "preset id (3a..3f, 4top, 4bot, 5a..5i, 6a, 6b, gain-pt, gain-bpt)");
  figure->add_flag("--show-preset", c.show_preset, "print the preset parameter table");

  workpoint->add_option("--omega-c", c.omega_c, "cavity resonance / kappa");
  workpoint->add_option("--omega-L", c.omega_L, "drive frequency / kappa");
  workpoint->add_option("--omega-m", c.omega_m, "bare mechanical frequency / kappa");
  workpoint->add_option("--g", c.g_single, "single-photon coupling / kappa");
  workpoint->add_option("--drive", c.drive_amp, "drive amplitude / kappa");
  workpoint->add_option("--max-iter", c.max_iter, "iteration cap")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidConfig;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (chosen == classify) c.command = Command::Classify;
  if (chosen == sweep) c.command = Command::Sweep;
  if (chosen == evolve) c.command = Command::Evolve;
  if (chosen == steady) c.command = Command::Steady;
  if (chosen == figure) c.command = Command::Figure;
  if (chosen == workpoint) c.command = Command::WorkPoint;

  if (chosen->count("--omega1") > 0) c.omega1 = o.omega1;
  if (chosen->count("--dt") > 0) c.dt = o.dt;
  c.format = o.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (o.sweep == "G") c.steady_sweep = SteadySweep::G;
  if (o.sweep == "gamma") c.steady_sweep = SteadySweep::Gamma;
  if (chosen == sweep) {
    if (o.resolution > 0) {
      c.gamma_range.count = o.resolution;
      c.G_range.count = o.resolution;
    }
    if (o.gamma_range.size() == 2) {
      c.gamma_range.lo = o.gamma_range[0];
      c.gamma_range.hi = o.gamma_range[1];
    }
    if (o.G_range.size() == 2) {
      c.G_range.lo = o.G_range[0];
      c.G_range.hi = o.G_range[1];
    }
  }
  if (chosen == figure && c.preset.empty() && !c.show_preset) {
    err << "error: figure needs a preset id or --show-preset\n";
    return kExitInvalidConfig;
  }
  return run(c, out, err);
}

}  // namespace ptom::app
