#include "ptom/app/presets.hpp"

#include <array>
#include <cmath>
#include <string>

namespace ptom::app {

namespace {

using K = PresetKind;

// Device: kappa = 6.45 MHz, m = 5e-11 kg, omega1 = 2 pi 23.4 MHz,
// alpha = 2 exp(i pi/6), beta = 2 exp(i pi/3).
const std::array<FigurePreset, 21> kPresets = {{
    {"3a", K::Displacement, 0.6, 1.2, "x(t), region 4"},
    {"3b", K::Displacement, 1.0, 1.5, "x(t), region 6"},
    {"3c", K::Displacement, 1.8, 2.1, "x(t), region 2"},
    {"3d", K::Displacement, 0.6, 0.798, "x(t), region 3"},
    {"3e", K::Displacement, 0.6, std::sqrt(0.6), "x(t), region 5"},
    {"3f", K::Displacement, 1.8, 1.2, "x(t), region 1"},
    {"4top", K::Numbers, 1.0, 1.5, "n, n_st, n_sp for gamma = kappa, region 6"},
    {"4bot", K::Numbers, 1.0, 0.8, "n, n_st, n_sp for gamma = kappa, region 1"},
    {"5a", K::Numbers, 0.6, 1.2, "totals n_a, n_b, region 4"},
    {"5b", K::Numbers, 0.6, 0.798, "totals n_a, n_b, region 3"},
    {"5c", K::Numbers, 0.6, 0.6, "totals n_a, n_b, region 1"},
    {"5d", K::Numbers, 0.6, 1.2, "stimulated n_a_st, n_b_st, region 4"},
    {"5e", K::Numbers, 0.6, 0.798, "stimulated n_a_st, n_b_st, region 3"},
    {"5f", K::Numbers, 0.6, 0.6, "stimulated n_a_st, n_b_st, region 1"},
    {"5g", K::Numbers, 0.6, 1.2, "spontaneous n_a_sp, n_b_sp, region 4"},
    {"5h", K::Numbers, 0.6, 0.798, "spontaneous n_a_sp, n_b_sp, region 3"},
    {"5i", K::Numbers, 0.6, 0.6, "spontaneous n_a_sp, n_b_sp, region 1"},
    {"6a", K::SteadyVsG, 0.6, 0.0, "steady n_a,s, n_b,s vs G at gamma = 0.6", 0.8, 5.0, 211},
    {"6b", K::SteadyVsGamma, 0.0, 0.798, "steady n_a,s, n_b,s vs gamma at G = 0.798", 0.0, 0.63, 64},
    {"gain-pt", K::Numbers, 1.8, 2.1, "gamma > kappa numbers, region 2"},
    {"gain-bpt", K::Numbers, 1.8, 1.2, "gamma > kappa numbers, region 1"},
}};

}  // namespace

std::string to_string(PresetKind k) {
  switch (k) {
    case K::Displacement: return "displacement";
    case K::Numbers: return "numbers";
    case K::SteadyVsG: return "steady-vs-G";
    case K::SteadyVsGamma: return "steady-vs-gamma";
  }
  return "?";
}

std::span<const FigurePreset> figure_presets() { return kPresets; }

const FigurePreset& find_preset(std::string_view id) {
  for (const auto& p : kPresets) {
    if (p.id == id) return p;
  }
  throw InvalidParameter("unknown figure preset '" + std::string(id) + "'");
}

RunConfig apply_preset(const FigurePreset& preset, RunConfig base) {
  base.preset = std::string(preset.id);
  switch (preset.kind) {
    case K::Displacement:
    case K::Numbers:
      base.gamma = preset.gamma;
      base.G = preset.G;
      break;
    case K::SteadyVsG:
      base.gamma = preset.gamma;
      base.steady_sweep = SteadySweep::G;
      base.sweep_from = preset.sweep_from;
      base.sweep_to = preset.sweep_to;
      base.sweep_n = preset.sweep_n;
      break;
    case K::SteadyVsGamma:
      base.G = preset.G;
      base.steady_sweep = SteadySweep::Gamma;
      base.sweep_from = preset.sweep_from;
      base.sweep_to = preset.sweep_to;
      base.sweep_n = preset.sweep_n;
      break;
  }
  return base;
}

}  // namespace ptom::app
