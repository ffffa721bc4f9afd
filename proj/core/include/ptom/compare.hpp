#pragma once

#include <algorithm>
#include <cmath>

namespace ptom {

/// Mixed tolerance: |value - reference| <= rel * |reference| + abs.
struct Tolerance {
  double rel = 1e-6;
  double abs = 1e-12;

  bool accepts(double value, double reference) const noexcept {
    return std::abs(value - reference) <= rel * std::abs(reference) + abs;
  }
  /// Ratio of the error to the allowed error; <= 1 passes.
  double score(double value, double reference) const noexcept {
    return std::abs(value - reference) / (rel * std::abs(reference) + abs);
  }
};

/// |value - reference| / max(|reference|, floor).
inline double relative_error(double value, double reference,
                             double floor = 1e-12) noexcept {
  return std::abs(value - reference) / std::max(std::abs(reference), floor);
}

}  // namespace ptom
