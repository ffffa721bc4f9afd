#pragma once

#include <span>
#include <string>
#include <string_view>

#include "ptom/app/config.hpp"

namespace ptom::app {

enum class PresetKind { Displacement, Numbers, SteadyVsG, SteadyVsGamma };

std::string to_string(PresetKind k);

/// Parameter set behind one figure panel. Rates in units of kappa. For the
/// steady-state curves `sweep_*` give the swept axis; the other rate is fixed.
struct FigurePreset {
  std::string_view id;
  PresetKind kind;
  double gamma;
  double G;
  std::string_view shows;
  double sweep_from = 0.0;
  double sweep_to = 0.0;
  int sweep_n = 0;
};

std::span<const FigurePreset> figure_presets();

/// Throws InvalidParameter for an unknown id.
const FigurePreset& find_preset(std::string_view id);

/// Applies a preset on top of `base` (device constants, initial state and
/// time grid are shared by every preset and taken from the defaults).
RunConfig apply_preset(const FigurePreset& preset, RunConfig base);

}  // namespace ptom::app
