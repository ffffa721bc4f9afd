#pragma once

#include <complex>

namespace ptom {

/// sinh(z)/z, with the removable singularity at z = 0 evaluated by series
/// for |z| < 1e-4.
std::complex<double> sinhc(std::complex<double> z);

/// (sinh(z) - z)/z^3, series below |z| = 0.5 where the direct form cancels.
std::complex<double> sinh_excess(std::complex<double> z);

}  // namespace ptom
