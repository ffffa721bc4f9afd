#include "ptom/app/config.hpp"

#include <stdexcept>

namespace ptom::app {

namespace {

template <class Enum, std::size_t N>
Enum parse_enum(const std::string& text,
                const std::pair<Enum, const char*> (&table)[N],
                const char* what) {
  for (const auto& [value, name] : table) {
    if (text == name) return value;
  }
  throw InvalidParameter(std::string("unknown ") + what + " '" + text + "'");
}

constexpr std::pair<Command, const char*> kCommands[] = {
    {Command::Classify, "classify"}, {Command::Sweep, "sweep"},
    {Command::Evolve, "evolve"},     {Command::Steady, "steady"},
    {Command::Figure, "figure"},     {Command::WorkPoint, "workpoint"},
};
constexpr std::pair<OutputFormat, const char*> kFormats[] = {
    {OutputFormat::Csv, "csv"}, {OutputFormat::Json, "json"}};
constexpr std::pair<SteadySweep, const char*> kSweeps[] = {
    {SteadySweep::None, "none"}, {SteadySweep::G, "G"},
    {SteadySweep::Gamma, "gamma"}};

template <class Enum, std::size_t N>
std::string name_of(Enum v, const std::pair<Enum, const char*> (&table)[N]) {
  for (const auto& [value, name] : table) {
    if (value == v) return name;
  }
  return "?";
}

nlohmann::json axis_json(const AxisRange& r) {
  return {{"lo", r.lo}, {"hi", r.hi}, {"count", r.count}};
}

AxisRange axis_from(const nlohmann::json& j) {
  return {j.at("lo").get<double>(), j.at("hi").get<double>(),
          j.at("count").get<int>()};
}

}  // namespace

std::string to_string(Command c) { return name_of(c, kCommands); }
std::string to_string(OutputFormat f) { return name_of(f, kFormats); }
std::string to_string(SteadySweep s) { return name_of(s, kSweeps); }

double RunConfig::omega1_over_kappa() const {
  return omega1 ? *omega1 : kDefaultOmega1 / kappa_hz;
}

SystemParams RunConfig::system() const {
  return SystemParams::from_kappa_units(gamma, G, omega1_over_kappa(),
                                        kappa_hz, mass);
}

CoherentInit RunConfig::init() const {
  return CoherentInit::from_polar(alpha_mag, alpha_phase, beta_mag,
                                  beta_phase);
}

numeric::TimeGrid RunConfig::grid(const SystemParams& p) const {
  numeric::TimeGrid g{t_end / p.kappa(),
                      dt ? *dt / p.kappa() : numeric::default_dt(p), samples};
  numeric::check_grid(p, g);
  return g;
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["command"] = to_string(command);
  j["gamma"] = gamma;
  j["G"] = G;
  j["omega1"] = omega1 ? nlohmann::json(*omega1) : nlohmann::json(nullptr);
  j["kappa_hz"] = kappa_hz;
  j["mass"] = mass;
  j["alpha_mag"] = alpha_mag;
  j["alpha_phase"] = alpha_phase;
  j["beta_mag"] = beta_mag;
  j["beta_phase"] = beta_phase;
  j["t_end"] = t_end;
  j["dt"] = dt ? nlohmann::json(*dt) : nlohmann::json(nullptr);
  j["samples"] = samples;
  j["tol"] = tol;
  j["out"] = out;
  j["format"] = to_string(format);
  j["precision"] = precision;
  j["gamma_range"] = axis_json(gamma_range);
  j["G_range"] = axis_json(G_range);
  j["threads"] = threads;
  j["steady_sweep"] = to_string(steady_sweep);
  j["sweep_from"] = sweep_from;
  j["sweep_to"] = sweep_to;
  j["sweep_n"] = sweep_n;
  j["max_discrepancy"] = max_discrepancy;
  j["abs_floor"] = abs_floor;
  j["preset"] = preset;
  j["show_preset"] = show_preset;
  j["omega_c"] = omega_c;
  j["omega_L"] = omega_L;
  j["omega_m"] = omega_m;
  j["g_single"] = g_single;
  j["drive_amp"] = drive_amp;
  j["max_iter"] = max_iter;
  return j;
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  RunConfig c;
  auto opt = [&](const char* key) -> std::optional<double> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
  };
  c.command = parse_enum(j.at("command").get<std::string>(), kCommands, "command");
  c.gamma = j.at("gamma").get<double>();
  c.G = j.at("G").get<double>();
  c.omega1 = opt("omega1");
  c.kappa_hz = j.at("kappa_hz").get<double>();
  c.mass = j.at("mass").get<double>();
  c.alpha_mag = j.at("alpha_mag").get<double>();
  c.alpha_phase = j.at("alpha_phase").get<double>();
  c.beta_mag = j.at("beta_mag").get<double>();
  c.beta_phase = j.at("beta_phase").get<double>();
  c.t_end = j.at("t_end").get<double>();
  c.dt = opt("dt");
  c.samples = j.at("samples").get<int>();
  c.tol = j.at("tol").get<double>();
  c.out = j.at("out").get<std::string>();
  c.format = parse_enum(j.at("format").get<std::string>(), kFormats, "format");
  c.precision = j.at("precision").get<int>();
  c.gamma_range = axis_from(j.at("gamma_range"));
  c.G_range = axis_from(j.at("G_range"));
  c.threads = j.at("threads").get<unsigned>();
  c.steady_sweep =
      parse_enum(j.at("steady_sweep").get<std::string>(), kSweeps, "steady sweep");
  c.sweep_from = j.at("sweep_from").get<double>();
  c.sweep_to = j.at("sweep_to").get<double>();
  c.sweep_n = j.at("sweep_n").get<int>();
  c.max_discrepancy = j.at("max_discrepancy").get<double>();
  c.abs_floor = j.at("abs_floor").get<double>();
  c.preset = j.at("preset").get<std::string>();
  c.show_preset = j.at("show_preset").get<bool>();
  c.omega_c = j.at("omega_c").get<double>();
  c.omega_L = j.at("omega_L").get<double>();
  c.omega_m = j.at("omega_m").get<double>();
  c.g_single = j.at("g_single").get<double>();
  c.drive_amp = j.at("drive_amp").get<double>();
  c.max_iter = j.at("max_iter").get<int>();
  return c;
}

}  // namespace ptom::app
