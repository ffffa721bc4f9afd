#pragma once

// Domain types for the two-mode gain/loss optomechanical system: a passive
// cavity mode a (loss rate kappa) linearly coupled to an active mechanical
// mode b (gain rate gamma) at the common resonance Delta = omega_m = omega1.
//
// Units: every rate is an angular rate in rad/s, times are in seconds,
// displacement in metres. Helpers taking "kappa units" say so in their name.

#include <complex>
#include <stdexcept>
#include <string>

namespace ptom {

using cplx = std::complex<double>;

/// Reduced Planck constant (CODATA 2018, exact in SI), J s.
inline constexpr double kHbar = 1.054571817e-34;

/// Defaults taken from the reference device: kappa = 6.45 MHz,
/// omega1 = 2 pi x 23.4 MHz, m = 5e-11 kg.
inline constexpr double kDefaultKappa = 6.45e6;
inline constexpr double kDefaultOmega1 = 2.0 * 3.14159265358979323846 * 23.4e6;
inline constexpr double kDefaultMass = 5e-11;

/// Thrown when a parameter set violates a construction precondition.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SystemParams {
 public:
  /// Validated construction. Throws InvalidParameter naming the violated
  /// precondition: kappa, omega1, mass > 0 and gamma, G >= 0, all finite.
  static SystemParams make(double kappa, double gamma, double coupling_G,
                           double omega1, double mass = kDefaultMass);

  /// Same as make() with gamma, G and omega1 given as multiples of kappa.
  static SystemParams from_kappa_units(double gamma_over_kappa,
                                       double G_over_kappa,
                                       double omega1_over_kappa,
                                       double kappa = kDefaultKappa,
                                       double mass = kDefaultMass);

  double kappa() const noexcept { return kappa_; }
  double gamma() const noexcept { return gamma_; }
  double coupling() const noexcept { return coupling_; }
  double omega1() const noexcept { return omega1_; }
  double mass() const noexcept { return mass_; }
  double hbar() const noexcept { return kHbar; }

  /// f = G^2 - gamma kappa; its sign separates stable from unstable.
  double f() const noexcept;

  /// Omega = sqrt((gamma + kappa)^2 - 4 G^2). Real and >= 0 in the
  /// broken-PT phase, purely imaginary with Im >= 0 in the PT phase.
  cplx omega_rate() const noexcept;

  /// Zero-point displacement sqrt(hbar / (2 m omega1)), metres.
  double x_zpf() const noexcept;

  /// Copy with the given rates in kappa units (same kappa, omega1, mass).
  SystemParams with_rates(double gamma_over_kappa, double G_over_kappa) const;

 private:
  SystemParams(double kappa, double gamma, double coupling, double omega1,
               double mass) noexcept
      : kappa_(kappa), gamma_(gamma), coupling_(coupling), omega1_(omega1),
        mass_(mass) {}

  double kappa_;
  double gamma_;
  double coupling_;
  double omega1_;
  double mass_;
};

/// Drive and bare-system data for the nonlinear model, used only to find
/// the linearization working point.
class DriveParams {
 public:
  static DriveParams make(double omega_c, double omega_L, double omega_m,
                          double g_single, double drive_amp);

  double omega_c() const noexcept { return omega_c_; }
  double omega_L() const noexcept { return omega_L_; }
  double omega_m() const noexcept { return omega_m_; }
  double g_single() const noexcept { return g_single_; }
  double drive_amp() const noexcept { return drive_amp_; }
  /// Delta_c = omega_c - omega_L.
  double detuning() const noexcept { return omega_c_ - omega_L_; }

 private:
  DriveParams(double omega_c, double omega_L, double omega_m, double g,
              double amp) noexcept
      : omega_c_(omega_c), omega_L_(omega_L), omega_m_(omega_m),
        g_single_(g), drive_amp_(amp) {}

  double omega_c_;
  double omega_L_;
  double omega_m_;
  double g_single_;
  double drive_amp_;
};

/// Coherent initial state |alpha>|beta>.
struct CoherentInit {
  cplx alpha{};
  cplx beta{};

  static CoherentInit from_polar(double alpha_mag, double alpha_phase,
                                 double beta_mag, double beta_phase);
  /// Throws InvalidParameter on non-finite components.
  void validate() const;
};

enum class PtPhase { Symmetric, Broken, ExceptionalPoint };

enum class Stability {
  Unstable,
  AsymptoticallyStable,
  FiniteTimeStable,
  StableBoundary,
  UnstableDegenerate,
};

/// Numbered regions of the (gamma, G) phase diagram; EP is the point where
/// the PT boundary meets the gamma = kappa line.
enum class Region : int { R1 = 1, R2, R3, R4, R5, R6, EP };

struct RegimeLabel {
  PtPhase pt;
  Stability stability;
  Region region;

  friend bool operator==(const RegimeLabel&, const RegimeLabel&) = default;
};

std::string to_string(PtPhase p);
std::string to_string(Stability s);
/// "1".."6" or "EP".
std::string to_string(Region r);

/// First and second moments at one time.
struct MomentState {
  double t = 0.0;     // s
  cplx a_mean{};      // <a>
  cplx b_mean{};      // <b>
  double n_a = 0.0;   // <a^dag a>
  double n_b = 0.0;   // <b^dag b>
  cplx ab_corr{};     // <a^dag b>
};

/// Particle numbers split into the stimulated part (|first moment|^2) and
/// the noise-driven spontaneous remainder; n = st + sp by construction.
struct NumberSplit {
  double t = 0.0;
  double n_a_st = 0.0;
  double n_b_st = 0.0;
  double n_a_sp = 0.0;
  double n_b_sp = 0.0;

  double n_a() const noexcept { return n_a_st + n_a_sp; }
  double n_b() const noexcept { return n_b_st + n_b_sp; }
};

}  // namespace ptom
