#include "ptom/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ptom/format.hpp"
#include "ptom/special.hpp"

namespace ptom::analytic {

namespace {

constexpr cplx kI{0.0, 1.0};

double real_part(cplx v, const char* what) {
  const double scale = std::max(std::abs(v.real()), 1.0);
  if (std::abs(v.imag()) > kImagResidueTol * scale) {
    throw ImaginaryResidue(std::string(what) + " has imaginary residue " +
                           format_number(v.imag()));
  }
  return v.real();
}

// G (alpha^* beta - beta^* alpha); purely imaginary.
cplx phase_term(double G, const CoherentInit& init) {
  return G * (std::conj(init.alpha) * init.beta -
              std::conj(init.beta) * init.alpha);
}

}  // namespace

std::pair<cplx, cplx> mean_amplitudes(const SystemParams& p,
                                      const CoherentInit& init, double t) {
  // Rotating frame: d/dt (a, b) = [[-kappa, iG], [iG, gamma]] (a, b), whose
  // propagator is e^{(gamma-kappa)t/2} [cosh(Omega t/2) + t sinhc(Omega t/2) N]
  // with N the traceless part of the generator.
  const cplx omega = p.omega_rate();
  const double sum = p.gamma() + p.kappa();
  const cplx half = 0.5 * omega * t;
  const cplx ch = std::cosh(half);
  const cplx sh = t * sinhc(half);
  const double growth = std::exp(0.5 * (p.gamma() - p.kappa()) * t);
  const cplx carrier = std::polar(1.0, -p.omega1() * t);

  const cplx a = init.alpha * ch +
                 (-0.5 * sum * init.alpha + kI * p.coupling() * init.beta) * sh;
  const cplx b = init.beta * ch +
                 (0.5 * sum * init.beta + kI * p.coupling() * init.alpha) * sh;
  return {growth * carrier * a, growth * carrier * b};
}

double displacement(const SystemParams& p, const CoherentInit& init,
                    double t) {
  const cplx b = mean_amplitudes(p, init, t).second;
  return p.x_zpf() * (b + std::conj(b)).real();
}

double finite_time_amplitude(const SystemParams& p, const CoherentInit& init,
                             double tol) {
  if (classify(p, tol).region != Region::R5) {
    throw OutsideRegime(
        "finite-time amplitude requires f = 0 and gamma < kappa (region 5)");
  }
  const double k = p.kappa();
  const double g = p.gamma();
  const double A = std::norm(init.alpha);
  const double B = std::norm(init.beta);
  const cplx bracket =
      k * k * B + k * g * A -
      kI * k * std::sqrt(k * g) *
          (std::conj(init.alpha) * init.beta - std::conj(init.beta) * init.alpha);
  const double value = real_part(bracket, "amplitude bracket");
  return 2.0 / (k - g) * p.x_zpf() * std::sqrt(std::max(value, 0.0));
}

NumberSplit numbers_equal_gain(const SystemParams& p, const CoherentInit& init,
                               double t, double tol) {
  if (std::abs(p.gamma() / p.kappa() - 1.0) > tol) {
    throw OutsideRegime("equal-gain particle numbers require gamma = kappa");
  }
  const double k = p.kappa();
  const double G = p.coupling();
  const double A = std::norm(init.alpha);
  const double B = std::norm(init.beta);
  const cplx delta = phase_term(G, init);

  const double omega1_sq = k * k - G * G;
  const cplx omega1 = omega1_sq >= 0.0 ? cplx{std::sqrt(omega1_sq), 0.0}
                                       : cplx{0.0, std::sqrt(-omega1_sq)};

  // With C1 = cosh(2 Omega1 t), S1 = sinh(2 Omega1 t):
  //   (C1 - 1)/(2 Omega1^2) = t^2 sinhc^2(Omega1 t)
  //   S1/(2 Omega1)         = t sinhc(2 Omega1 t)
  // and m1 + 2 o1 = 4 Omega1^2 |alpha|^2, m1 + 2 o3 = 4 Omega1^2 |beta|^2.
  const cplx q = t * t * sinhc(omega1 * t) * sinhc(omega1 * t);
  const cplx s = t * sinhc(2.0 * omega1 * t);

  const cplx o1 = (k * k + omega1_sq) * A + G * G * B - kI * k * delta;
  const cplx o3 = (k * k + omega1_sq) * B + G * G * A - kI * k * delta;

  const cplx na_st = A + o1 * q + (kI * delta - 2.0 * k * A) * s;
  const cplx nb_st = B + o3 * q + (2.0 * k * B - kI * delta) * s;
  // kappa G^2 (S1/Omega1 - 2t) / (2 Omega1^2)
  const cplx na_sp = 4.0 * k * G * G * t * t * t * sinh_excess(2.0 * omega1 * t);
  const cplx nb_sp = na_sp + 2.0 * k * k * q + 2.0 * k * s;

  return NumberSplit{t, real_part(na_st, "n_a^st"), real_part(nb_st, "n_b^st"),
                     real_part(na_sp, "n_a^sp"), real_part(nb_sp, "n_b^sp")};
}

NumberSplit numbers_unequal_gain(const SystemParams& p,
                                 const CoherentInit& init, double t,
                                 double tol) {
  const double k = p.kappa();
  const double g = p.gamma();
  const double G = p.coupling();
  const double eps = g - k;
  const double f = p.f();
  if (std::abs(eps) / k <= tol) {
    throw OutsideRegime(
        "unequal-gain particle numbers require gamma != kappa; use the "
        "equal-gain form");
  }
  if (std::abs(f) / (k * k) <= tol) {
    throw OutsideRegime(
        "unequal-gain particle numbers are singular on f = 0; use the moment "
        "integrator");
  }

  const double A = std::norm(init.alpha);
  const double B = std::norm(init.beta);
  const cplx delta = phase_term(G, init);
  const cplx omega = p.omega_rate();
  const cplx omega_sq = omega * omega;
  const double sum = k + g;
  const double G2 = G * G;

  const double E = std::exp(eps * t);
  // (cosh(Omega t) - 1)/Omega^2 and sinh(Omega t)/Omega
  const cplx s2 = 0.5 * t * t * sinhc(0.5 * omega * t) * sinhc(0.5 * omega * t);
  const cplx s1 = t * sinhc(omega * t);

  // l1..l4 divided by d/2 = 2 (gamma - kappa) f. Since m2/d + l1/d equals
  // Omega^2 |alpha|^2 (and m2/d + l3/d = Omega^2 |beta|^2) the 1/Omega^2
  // prefactor of the stimulated parts drops out.
  const cplx L1 = (omega_sq + 2.0 * G2) * A + 2.0 * G2 * B - kI * sum * delta;
  const cplx L2 = kI * delta - sum * A;
  const cplx L3 = 2.0 * G2 * A + (omega_sq + 2.0 * G2) * B - kI * sum * delta;
  const cplx L4 = sum * B - kI * delta;

  const cplx na_st = E * (A + L1 * s2 + L2 * s1);
  const cplx nb_st = E * (B + L3 * s2 + L4 * s1);

  // Spontaneous parts grouped around expm1(eps t)/eps so that they vanish
  // exactly at t = 0 and carry no 1/eps cancellation as gamma -> kappa.
  const double growth_m1 = std::expm1(eps * t);
  const double growth_m1_over_eps = growth_m1 / eps;
  const cplx na_sp = g * G2 / f * (growth_m1_over_eps + E * (eps * s2 - s1));
  const cplx nb_sp =
      g / f *
      (G2 * growth_m1_over_eps - k * growth_m1 +
       E * ((eps * G2 - k * omega_sq) * s2 - (k * k - f) * s1));

  return NumberSplit{t, real_part(na_st, "n_a^st"), real_part(nb_st, "n_b^st"),
                     real_part(na_sp, "n_a^sp"), real_part(nb_sp, "n_b^sp")};
}

SteadyNumbers steady_numbers(const SystemParams& p, double tol) {
  const auto label = classify(p, tol);
  if (label.stability != Stability::AsymptoticallyStable) {
    throw OutsideRegime("no finite steady state: point is in region " +
                        to_string(label.region) + " (" +
                        to_string(label.stability) + ")");
  }
  const double k = p.kappa();
  const double g = p.gamma();
  const double f = p.f();
  const double n_a = p.coupling() * p.coupling() * g / ((k - g) * f);
  return {n_a, n_a + k * g / f};
}

NumberMethod number_method(const SystemParams& p) {
  const double k = p.kappa();
  const double gap = std::abs(p.gamma() / k - 1.0);
  if (gap <= kGainBalanceTol) return NumberMethod::EqualGain;
  if (std::abs(p.f()) / (k * k) < kPrecisionBand) {
    return NumberMethod::NumericFallback;
  }
  return NumberMethod::UnequalGain;
}

const char* to_string(NumberMethod m) {
  switch (m) {
    case NumberMethod::EqualGain: return "closed-form-equal-gain";
    case NumberMethod::UnequalGain: return "closed-form-unequal-gain";
    case NumberMethod::NumericFallback: return "numeric-fallback";
  }
  return "?";
}

}  // namespace ptom::analytic
