#pragma once

// Exact closed-form dynamics at resonance (Delta = omega_m = omega1) from a
// coherent initial state: mean amplitudes and displacement, the asymptotic
// amplitude on the f = 0 boundary, particle numbers split into stimulated
// and spontaneous parts for gamma = kappa and gamma != kappa, and the
// steady-state numbers of the asymptotically stable regime.
//
// Every expression is evaluated once in complex arithmetic with
// Omega = sqrt((gamma + kappa)^2 - 4 G^2) (imaginary in the PT phase), so
// cosh/sinh turn into cos/sin automatically. Quotients such as
// sinh(Omega t)/Omega are written through sinhc() so the exceptional point
// Omega = 0 is an ordinary evaluation point.

#include <stdexcept>
#include <utility>

#include "ptom/model.hpp"
#include "ptom/spectrum.hpp"

namespace ptom::analytic {

/// |gamma - kappa|/kappa at or below which the gamma = kappa forms apply.
inline constexpr double kGainBalanceTol = 1e-8;
/// Below this |f|/kappa^2 the gamma != kappa forms lose digits to 1/f
/// cancellation (roughly 1e-14 kappa^2/|f| relative); callers fall back to
/// the moment integrator.
inline constexpr double kPrecisionBand = 1e-4;
/// Allowed imaginary residue (relative) before a closed-form value is
/// truncated to its real part.
inline constexpr double kImagResidueTol = 1e-10;

/// The parameter point lies outside the regime a formula is valid for.
class OutsideRegime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A closed-form value came out with a non-negligible imaginary part.
class ImaginaryResidue : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lab-frame <a>(t), <b>(t) from (alpha, beta).
std::pair<cplx, cplx> mean_amplitudes(const SystemParams& p,
                                      const CoherentInit& init, double t);

/// Mean displacement x(t) = x_zpf (<b> + <b>^*), metres.
double displacement(const SystemParams& p, const CoherentInit& init,
                    double t);

/// Late-time oscillation amplitude of x on the stable boundary f = 0,
/// gamma < kappa (region 5). Throws OutsideRegime elsewhere.
double finite_time_amplitude(const SystemParams& p, const CoherentInit& init,
                             double tol = kDefaultClassifyTol);

/// gamma = kappa particle numbers. Throws OutsideRegime when
/// |gamma - kappa|/kappa > tol.
NumberSplit numbers_equal_gain(const SystemParams& p, const CoherentInit& init,
                               double t, double tol = kGainBalanceTol);

/// gamma != kappa particle numbers. Throws OutsideRegime when
/// |gamma - kappa|/kappa <= tol or |f|/kappa^2 <= tol. The 1/(gamma - kappa)
/// dependence is carried by expm1((gamma - kappa) t)/(gamma - kappa), so
/// accuracy holds uniformly as gamma -> kappa.
NumberSplit numbers_unequal_gain(const SystemParams& p,
                                 const CoherentInit& init, double t,
                                 double tol = kGainBalanceTol);

struct SteadyNumbers {
  double n_a;
  double n_b;
};

/// n_a,s = G^2 gamma / ((kappa - gamma) f), n_b,s = n_a,s + kappa gamma / f.
/// Only defined in the asymptotically stable regions 3 and 4; throws
/// OutsideRegime otherwise.
SteadyNumbers steady_numbers(const SystemParams& p,
                             double tol = kDefaultClassifyTol);

enum class NumberMethod { EqualGain, UnequalGain, NumericFallback };

/// Which particle-number route is numerically trustworthy at p.
NumberMethod number_method(const SystemParams& p);

const char* to_string(NumberMethod m);

}  // namespace ptom::analytic
