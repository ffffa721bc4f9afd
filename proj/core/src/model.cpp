#include "ptom/model.hpp"

#include <cmath>
#include <string>

namespace ptom {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

SystemParams SystemParams::make(double kappa, double gamma, double coupling_G,
                                double omega1, double mass) {
  require(finite(kappa) && kappa > 0.0, "kappa must be finite and > 0");
  require(finite(gamma) && gamma >= 0.0, "gamma must be finite and >= 0");
  require(finite(coupling_G) && coupling_G >= 0.0,
          "G must be finite and >= 0");
  require(finite(omega1) && omega1 > 0.0, "omega1 must be finite and > 0");
  require(finite(mass) && mass > 0.0, "mass must be finite and > 0");
  return SystemParams(kappa, gamma, coupling_G, omega1, mass);
}

SystemParams SystemParams::from_kappa_units(double gamma_over_kappa,
                                            double G_over_kappa,
                                            double omega1_over_kappa,
                                            double kappa, double mass) {
  require(finite(kappa) && kappa > 0.0, "kappa must be finite and > 0");
  return make(kappa, gamma_over_kappa * kappa, G_over_kappa * kappa,
              omega1_over_kappa * kappa, mass);
}

double SystemParams::f() const noexcept {
  return coupling_ * coupling_ - gamma_ * kappa_;
}

cplx SystemParams::omega_rate() const noexcept {
  const double s = gamma_ + kappa_;
  const double radicand = s * s - 4.0 * coupling_ * coupling_;
  if (radicand >= 0.0) return {std::sqrt(radicand), 0.0};
  return {0.0, std::sqrt(-radicand)};
}

double SystemParams::x_zpf() const noexcept {
  return std::sqrt(kHbar / (2.0 * mass_ * omega1_));
}

SystemParams SystemParams::with_rates(double gamma_over_kappa,
                                      double G_over_kappa) const {
  return make(kappa_, gamma_over_kappa * kappa_, G_over_kappa * kappa_,
              omega1_, mass_);
}

DriveParams DriveParams::make(double omega_c, double omega_L, double omega_m,
                              double g_single, double drive_amp) {
  require(finite(omega_c) && finite(omega_L) && finite(omega_m),
          "drive frequencies must be finite");
  require(finite(g_single) && g_single >= 0.0,
          "g_single must be finite and >= 0");
  require(finite(drive_amp) && drive_amp >= 0.0,
          "drive_amp must be finite and >= 0");
  return DriveParams(omega_c, omega_L, omega_m, g_single, drive_amp);
}

CoherentInit CoherentInit::from_polar(double alpha_mag, double alpha_phase,
                                      double beta_mag, double beta_phase) {
  CoherentInit init{std::polar(alpha_mag, alpha_phase),
                    std::polar(beta_mag, beta_phase)};
  init.validate();
  return init;
}

void CoherentInit::validate() const {
  require(finite(alpha.real()) && finite(alpha.imag()),
          "alpha must be finite");
  require(finite(beta.real()) && finite(beta.imag()), "beta must be finite");
}

std::string to_string(PtPhase p) {
  switch (p) {
    case PtPhase::Symmetric: return "PT";
    case PtPhase::Broken: return "BrokenPT";
    case PtPhase::ExceptionalPoint: return "EP";
  }
  return "?";
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::Unstable: return "Unstable";
    case Stability::AsymptoticallyStable: return "AsymptoticallyStable";
    case Stability::FiniteTimeStable: return "FiniteTimeStable";
    case Stability::StableBoundary: return "StableBoundary";
    case Stability::UnstableDegenerate: return "UnstableDegenerate";
  }
  return "?";
}

std::string to_string(Region r) {
  if (r == Region::EP) return "EP";
  return std::to_string(static_cast<int>(r));
}

}  // namespace ptom
