#include "ptom/special.hpp"

#include <cmath>

namespace ptom {

std::complex<double> sinhc(std::complex<double> z) {
  if (std::abs(z) < 1e-4) {
    const auto z2 = z * z;
    return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sinh(z) / z;
}

std::complex<double> sinh_excess(std::complex<double> z) {
  if (std::abs(z) < 0.5) {
    // sum_k z^(2k) / (2k+3)!
    const auto z2 = z * z;
    std::complex<double> term = 1.0 / 6.0;
    std::complex<double> sum = term;
    for (int k = 1; k < 12; ++k) {
      term *= z2 / static_cast<double>((2 * k + 2) * (2 * k + 3));
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  return (std::sinh(z) - z) / (z * z * z);
}

}  // namespace ptom
