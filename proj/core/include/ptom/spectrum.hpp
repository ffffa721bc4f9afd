#pragma once

// Eigenanalysis of the effective non-Hermitian Hamiltonian and of the 4x4
// drift matrix A acting on (a, a^dag, b, b^dag); stability/PT regime
// classification and (gamma, G) phase-diagram sweeps.

#include <array>
#include <iosfwd>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "ptom/model.hpp"

namespace ptom {

/// Absolute tolerance, in kappa-normalized units, for the equalities
/// f = 0, gamma = kappa and G = (kappa + gamma)/2.
inline constexpr double kDefaultClassifyTol = 1e-9;

struct Spectrum {
  cplx omega_plus;
  cplx omega_minus;
  /// lambda_{tau,s} ordered (+,+), (+,-), (-,+), (-,-).
  std::array<cplx, 4> lambdas;
  /// A has only two independent eigenvectors (f = 0 and gamma = kappa).
  bool degenerate_drift = false;

  double max_re_lambda() const noexcept;
};

/// Supermode eigenfrequencies
/// omega_pm = omega1 - i (kappa - gamma)/2 +- sqrt(G^2 - (kappa + gamma)^2/4).
std::pair<cplx, cplx> supermode_frequencies(const SystemParams& p);

/// Closed-form drift eigenvalues
/// lambda_{tau,s} = [gamma - kappa + tau Omega + 2 i s omega1] / 2.
Spectrum drift_eigenvalues(const SystemParams& p,
                           double tol = kDefaultClassifyTol);

/// The drift matrix itself, materialized for the dense cross-check.
Eigen::Matrix4cd drift_matrix(const SystemParams& p);

/// Eigenvalues of drift_matrix() from a general dense eigensolver.
std::array<cplx, 4> dense_drift_eigenvalues(const SystemParams& p);

/// Throws InvalidParameter unless tol is in (0, 1e-3].
RegimeLabel classify(const SystemParams& p, double tol = kDefaultClassifyTol);

/// Same rules on kappa-normalized (gamma/kappa, G/kappa).
RegimeLabel classify_normalized(double gamma_over_kappa, double G_over_kappa,
                                double tol = kDefaultClassifyTol);

/// Evenly spaced axis lo..hi (inclusive) with `count` points. count == 1 is
/// allowed only for a degenerate axis lo == hi.
struct AxisRange {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;

  double at(int i) const noexcept;
  void validate(const char* name) const;

  friend bool operator==(const AxisRange&, const AxisRange&) = default;
};

struct PhaseCell {
  double gamma_over_kappa;
  double G_over_kappa;
  RegimeLabel label;
  double max_re_lambda;  // kappa units
};

struct PhaseDiagram {
  AxisRange gamma;
  AxisRange G;
  std::vector<PhaseCell> cells;  // row-major, gamma is the outer index

  const PhaseCell& at(int gamma_index, int G_index) const {
    return cells[static_cast<std::size_t>(gamma_index) * G.count + G_index];
  }
};

/// Classifies every grid point. Cells are evaluated on `threads` workers
/// (0 = hardware concurrency); output order does not depend on it.
PhaseDiagram phase_diagram(const AxisRange& gamma_range,
                           const AxisRange& G_range,
                           double tol = kDefaultClassifyTol,
                           unsigned threads = 0);

/// Header gamma_over_kappa,G_over_kappa,region_id,pt,stability,max_re_lambda
/// then one row per cell; 12 significant digits.
void write_csv(std::ostream& out, const PhaseDiagram& diagram);

}  // namespace ptom
