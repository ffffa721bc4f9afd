#include "ptom/app/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>

#include "ptom/app/presets.hpp"
#include "ptom/compare.hpp"
#include "ptom/format.hpp"
#include "ptom/numeric.hpp"
#include "ptom/spectrum.hpp"

namespace ptom::app {

namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string csv_cell(const json& v, int precision) {
  if (v.is_null()) return "nan";
  if (v.is_number_float()) return format_number(v.get<double>(), precision);
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

json row_object(const Table& t, const std::vector<json>& row) {
  json obj = json::object();
  for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row[i];
  return obj;
}

// Running maximum of a relative discrepancy with a denominator floor.
struct Discrepancy {
  Tolerance tol;
  double max_rel = kNaN;
  bool ok = true;

  void add(double value, double reference) {
    if (std::isnan(reference)) return;
    const double rel =
        std::abs(value - reference) / (std::abs(reference) + tol.abs / tol.rel);
    max_rel = std::isnan(max_rel) ? rel : std::max(max_rel, rel);
    ok = ok && tol.accepts(value, reference);
  }
};

template <class Series>
Series prefix(const Series& s, std::size_t n) {
  Series out = s;
  out.samples.resize(std::min(n, s.samples.size()));
  return out;
}

std::ostream& open_output(const RunConfig& config, std::ostream& fallback,
                          std::ofstream& file) {
  if (config.out.empty() || config.out == "-") return fallback;
  file.open(config.out, std::ios::binary | std::ios::trunc);
  if (!file) throw InvalidParameter("cannot open output file '" + config.out + "'");
  return file;
}

void append_lambda_columns(Table& t) {
  for (const char* name : {"pp", "pm", "mp", "mm"}) {
    t.columns.push_back(std::string("lambda_") + name + "_re");
    t.columns.push_back(std::string("lambda_") + name + "_im");
  }
}

}  // namespace

void write_table(std::ostream& out, const Table& table, OutputFormat format,
                 int precision) {
  if (format == OutputFormat::Json) {
    json doc;
    if (table.single_record && table.rows.size() == 1) {
      doc = row_object(table, table.rows.front());
    } else {
      doc["rows"] = json::array();
      for (const auto& row : table.rows) doc["rows"].push_back(row_object(table, row));
    }
    if (!table.summary.empty()) {
      json summary = json::object();
      for (const auto& [k, v] : table.summary) summary[k] = v;
      doc["summary"] = summary;
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << csv_line(table.columns);
  for (const auto& row : table.rows) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (const auto& v : row) cells.push_back(csv_cell(v, precision));
    out << csv_line(cells);
  }
  for (const auto& [k, v] : table.summary) {
    out << "# " << k << '=' << csv_cell(v, precision) << '\n';
  }
}

Table classify_table(const RunConfig& config) {
  const auto p = config.system();
  const auto label = classify(p, config.tol);
  const auto eig = drift_eigenvalues(p, config.tol);
  const double k = p.kappa();

  Table t;
  t.single_record = true;
  t.columns = {"gamma_over_kappa", "G_over_kappa", "region_id", "pt",
               "stability", "f_over_kappa2", "omega_plus_re", "omega_plus_im",
               "omega_minus_re", "omega_minus_im"};
  append_lambda_columns(t);
  t.columns.push_back("max_re_lambda");
  t.columns.push_back("degenerate_drift");

  std::vector<json> row = {config.gamma,
                           config.G,
                           to_string(label.region),
                           to_string(label.pt),
                           to_string(label.stability),
                           p.f() / (k * k),
                           eig.omega_plus.real() / k,
                           eig.omega_plus.imag() / k,
                           eig.omega_minus.real() / k,
                           eig.omega_minus.imag() / k};
  for (const auto& l : eig.lambdas) {
    row.push_back(l.real() / k);
    row.push_back(l.imag() / k);
  }
  row.push_back(eig.max_re_lambda() / k);
  row.push_back(eig.degenerate_drift);
  t.rows.push_back(std::move(row));
  return t;
}

Table sweep_table(const RunConfig& config) {
  const auto diagram =
      phase_diagram(config.gamma_range, config.G_range, config.tol, config.threads);
  Table t;
  t.columns = {"gamma_over_kappa", "G_over_kappa", "region_id", "pt",
               "stability", "max_re_lambda"};
  t.rows.reserve(diagram.cells.size());
  for (const auto& c : diagram.cells) {
    t.rows.push_back({c.gamma_over_kappa, c.G_over_kappa, to_string(c.label.region),
                      to_string(c.label.pt), to_string(c.label.stability),
                      c.max_re_lambda});
  }
  return t;
}

EvolveResult evolve(const RunConfig& config) {
  const auto p = config.system();
  const auto init = config.init();
  const auto grid = config.grid(p);
  const Tolerance tol{config.max_discrepancy, config.abs_floor};

  EvolveResult result;
  auto& summary = result.summary;
  summary.label = classify(p, config.tol);
  summary.method = analytic::number_method(p);

  const auto first = numeric::integrate_first_moments(p, init, grid);
  const auto second = numeric::integrate_second_moments(p, init, grid);
  const std::size_t common = std::min(first.samples.size(), second.samples.size());
  const auto split =
      numeric::stimulated_spontaneous_split(prefix(first, common), prefix(second, common));

  summary.truncated = first.truncated || second.truncated;
  summary.blowup_time = std::isnan(second.blowup_time)
                            ? first.blowup_time
                            : (std::isnan(first.blowup_time)
                                   ? second.blowup_time
                                   : std::min(first.blowup_time, second.blowup_time));

  Discrepancy dx{tol};
  Discrepancy dn{tol};
  const double x_zpf = p.x_zpf();
  const auto n = static_cast<std::size_t>(grid.samples);
  result.rows.reserve(n);

  for (std::size_t k = 0; k < n; ++k) {
    const double t = k == n - 1 ? grid.t_end
                                : grid.t_end * static_cast<double>(k) /
                                      static_cast<double>(n - 1);
    EvolveRow row{};
    row.t = t;
    row.x_analytic = analytic::displacement(p, init, t);
    row.x_numeric = kNaN;
    if (k < first.samples.size()) {
      const cplx b = first.samples[k].b;
      row.x_numeric = x_zpf * (b + std::conj(b)).real();
      dx.add(row.x_analytic / x_zpf, row.x_numeric / x_zpf);
    }

    const bool have_numeric_n = k < split.size();
    NumberSplit numbers{t, kNaN, kNaN, kNaN, kNaN};
    switch (summary.method) {
      case analytic::NumberMethod::EqualGain:
        numbers = analytic::numbers_equal_gain(p, init, t);
        break;
      case analytic::NumberMethod::UnequalGain:
        numbers = analytic::numbers_unequal_gain(p, init, t);
        break;
      case analytic::NumberMethod::NumericFallback:
        if (have_numeric_n) numbers = split[k];
        break;
    }
    if (have_numeric_n && summary.method != analytic::NumberMethod::NumericFallback) {
      const auto& ref = split[k];
      dn.add(numbers.n_a(), ref.n_a());
      dn.add(numbers.n_b(), ref.n_b());
      dn.add(numbers.n_a_st, ref.n_a_st);
      dn.add(numbers.n_b_st, ref.n_b_st);
    }
    row.n_a = numbers.n_a();
    row.n_b = numbers.n_b();
    row.n_a_st = numbers.n_a_st;
    row.n_b_st = numbers.n_b_st;
    row.n_a_sp = numbers.n_a_sp;
    row.n_b_sp = numbers.n_b_sp;
    result.rows.push_back(row);
  }

  summary.max_rel_discrepancy_x = dx.max_rel;
  summary.max_rel_discrepancy_n = dn.max_rel;
  summary.within_threshold = dx.ok && dn.ok;
  return result;
}

Table evolve_table(const EvolveResult& result) {
  Table t;
  t.columns = {"t",      "x_analytic", "x_numeric", "n_a",    "n_b",
               "n_a_st", "n_b_st",     "n_a_sp",    "n_b_sp"};
  t.rows.reserve(result.rows.size());
  for (const auto& r : result.rows) {
    t.rows.push_back({r.t, r.x_analytic, r.x_numeric, r.n_a, r.n_b, r.n_a_st,
                      r.n_b_st, r.n_a_sp, r.n_b_sp});
  }
  const auto& s = result.summary;
  t.summary = {
      {"region_id", to_string(s.label.region)},
      {"pt", to_string(s.label.pt)},
      {"stability", to_string(s.label.stability)},
      {"number_method", analytic::to_string(s.method)},
      {"max_rel_discrepancy_x", s.max_rel_discrepancy_x},
      {"max_rel_discrepancy_n", s.max_rel_discrepancy_n},
      {"truncated", s.truncated},
      {"blowup_time", s.blowup_time},
      {"within_threshold", s.within_threshold},
  };
  return t;
}

Table steady_table(const RunConfig& config) {
  Table t;
  t.columns = {"gamma_over_kappa", "G_over_kappa", "region_id", "n_a_s", "n_b_s"};
  if (config.steady_sweep == SteadySweep::None) {
    const auto p = config.system();
    const auto s = analytic::steady_numbers(p, config.tol);
    t.single_record = true;
    t.rows.push_back({config.gamma, config.G,
                      to_string(classify(p, config.tol).region), s.n_a, s.n_b});
    return t;
  }
  const AxisRange axis{config.sweep_from, config.sweep_to, config.sweep_n};
  axis.validate(config.steady_sweep == SteadySweep::G ? "G" : "gamma");
  for (int i = 0; i < axis.count; ++i) {
    RunConfig point = config;
    if (config.steady_sweep == SteadySweep::G) {
      point.G = axis.at(i);
    } else {
      point.gamma = axis.at(i);
    }
    const auto p = point.system();
    const auto label = classify(p, config.tol);
    double na = kNaN;
    double nb = kNaN;
    if (label.stability == Stability::AsymptoticallyStable) {
      const auto s = analytic::steady_numbers(p, config.tol);
      na = s.n_a;
      nb = s.n_b;
    }
    t.rows.push_back({point.gamma, point.G, to_string(label.region), na, nb});
  }
  return t;
}

Table workpoint_table(const RunConfig& config) {
  const double k = config.kappa_hz;
  const auto drive = DriveParams::make(config.omega_c * k, config.omega_L * k,
                                       config.omega_m * k, config.g_single * k,
                                       config.drive_amp * k);
  const auto wp = numeric::solve_working_point(drive, k, config.gamma * k,
                                               config.max_iter);
  Table t;
  t.single_record = true;
  t.columns = {"alpha_s_re", "alpha_s_im", "beta_s_re", "beta_s_im",
               "delta_eff_over_kappa", "G_eff_re_over_kappa",
               "G_eff_im_over_kappa", "iterations", "residual"};
  t.rows.push_back({wp.alpha_s.real(), wp.alpha_s.imag(), wp.beta_s.real(),
                    wp.beta_s.imag(), wp.delta_eff / k, wp.G_eff.real() / k,
                    wp.G_eff.imag() / k, wp.iterations, wp.residual});
  return t;
}

Table preset_table(const std::string& id) {
  Table t;
  t.columns = {"id", "kind", "gamma_over_kappa", "G_over_kappa", "sweep_from",
               "sweep_to", "sweep_n", "shows"};
  for (const auto& p : figure_presets()) {
    if (!id.empty() && p.id != id) continue;
    t.rows.push_back({std::string(p.id), to_string(p.kind), p.gamma, p.G,
                      p.sweep_from, p.sweep_to, p.sweep_n, std::string(p.shows)});
  }
  if (!id.empty() && t.rows.empty()) find_preset(id);  // throws
  t.summary = {{"kappa_hz", kDefaultKappa},
               {"omega1_rad_per_s", kDefaultOmega1},
               {"mass_kg", kDefaultMass},
               {"alpha", "2 exp(i pi/6)"},
               {"beta", "2 exp(i pi/3)"}};
  return t;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::ofstream file;
    std::ostream& sink = open_output(config, out, file);
    switch (config.command) {
      case Command::Classify:
        write_table(sink, classify_table(config), config.format, config.precision);
        return kExitOk;
      case Command::Sweep:
        write_table(sink, sweep_table(config), config.format, config.precision);
        return kExitOk;
      case Command::Evolve: {
        const auto result = evolve(config);
        write_table(sink, evolve_table(result), config.format, config.precision);
        if (result.summary.method == analytic::NumberMethod::NumericFallback) {
          err << "note: particle numbers come from the moment integrator "
                 "(closed form ill-conditioned at this point)\n";
        }
        if (!result.summary.within_threshold) {
          err << "error: analytic/numeric discrepancy above threshold "
              << format_number(config.max_discrepancy) << '\n';
          return kExitDiscrepancy;
        }
        return kExitOk;
      }
      case Command::Steady:
        write_table(sink, steady_table(config), config.format, config.precision);
        return kExitOk;
      case Command::WorkPoint:
        write_table(sink, workpoint_table(config), config.format, config.precision);
        return kExitOk;
      case Command::Figure: {
        if (config.show_preset) {
          write_table(sink, preset_table(config.preset), config.format,
                      config.precision);
          return kExitOk;
        }
        const auto& preset = find_preset(config.preset);
        RunConfig next = apply_preset(preset, config);
        next.command = (preset.kind == PresetKind::Displacement ||
                        preset.kind == PresetKind::Numbers)
                           ? Command::Evolve
                           : Command::Steady;
        next.out.clear();
        return run(next, sink, err);
      }
    }
    return kExitOk;
  } catch (const analytic::OutsideRegime& e) {
    err << "error: " << e.what() << '\n';
    return config.command == Command::Steady ? kExitNoSteadyState
                                             : kExitInvalidConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ptom::app
