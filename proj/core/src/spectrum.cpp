#include "ptom/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <thread>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "ptom/format.hpp"

namespace ptom {

double Spectrum::max_re_lambda() const noexcept {
  double m = lambdas[0].real();
  for (const auto& l : lambdas) m = std::max(m, l.real());
  return m;
}

std::pair<cplx, cplx> supermode_frequencies(const SystemParams& p) {
  const double s = p.kappa() + p.gamma();
  const double radicand = p.coupling() * p.coupling() - 0.25 * s * s;
  const cplx root = radicand >= 0.0 ? cplx{std::sqrt(radicand), 0.0}
                                    : cplx{0.0, std::sqrt(-radicand)};
  const cplx center{p.omega1(), -0.5 * (p.kappa() - p.gamma())};
  return {center + root, center - root};
}

Spectrum drift_eigenvalues(const SystemParams& p, double tol) {
  Spectrum out;
  std::tie(out.omega_plus, out.omega_minus) = supermode_frequencies(p);

  const cplx omega = p.omega_rate();
  const double loss_gain = p.gamma() - p.kappa();
  std::size_t k = 0;
  for (int tau : {+1, -1}) {
    for (int s : {+1, -1}) {
      out.lambdas[k++] =
          0.5 * (loss_gain + static_cast<double>(tau) * omega +
                 cplx{0.0, 2.0 * s * p.omega1()});
    }
  }

  const double kappa2 = p.kappa() * p.kappa();
  out.degenerate_drift = std::abs(p.f() / kappa2) <= tol &&
                         std::abs(p.gamma() / p.kappa() - 1.0) <= tol;
  return out;
}

Eigen::Matrix4cd drift_matrix(const SystemParams& p) {
  const cplx i{0.0, 1.0};
  const double w = p.omega1();
  const double G = p.coupling();
  Eigen::Matrix4cd A = Eigen::Matrix4cd::Zero();
  A(0, 0) = -i * w - p.kappa();
  A(0, 2) = i * G;
  A(1, 1) = i * w - p.kappa();
  A(1, 3) = -i * G;
  A(2, 0) = i * G;
  A(2, 2) = -i * w + p.gamma();
  A(3, 1) = -i * G;
  A(3, 3) = i * w + p.gamma();
  return A;
}

std::array<cplx, 4> dense_drift_eigenvalues(const SystemParams& p) {
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(drift_matrix(p),
                                                     /*computeEigenvectors=*/false);
  std::array<cplx, 4> out{};
  for (int k = 0; k < 4; ++k) out[static_cast<std::size_t>(k)] = solver.eigenvalues()(k);
  return out;
}

RegimeLabel classify_normalized(double g, double c, double tol) {
  if (!(tol > 0.0 && tol <= 1e-3)) {
    throw InvalidParameter("classification tolerance must lie in (0, 1e-3]");
  }
  const double f = c * c - g;
  const double pt_border = 0.5 * (1.0 + g);

  const bool f_zero = std::abs(f) <= tol;
  const bool balanced = std::abs(g - 1.0) <= tol;
  const bool on_pt_border = std::abs(c - pt_border) <= tol;

  const PtPhase pt = on_pt_border    ? PtPhase::ExceptionalPoint
                     : c > pt_border ? PtPhase::Symmetric
                                     : PtPhase::Broken;

  if (f_zero && balanced) {
    return {PtPhase::ExceptionalPoint, Stability::UnstableDegenerate,
            Region::EP};
  }
  if (balanced) {
    if (f > 0.0) return {pt, Stability::FiniteTimeStable, Region::R6};
    return {pt, Stability::Unstable, Region::R1};
  }
  if (g > 1.0) {
    return {pt, Stability::Unstable,
            pt == PtPhase::Symmetric ? Region::R2 : Region::R1};
  }
  if (f_zero) return {pt, Stability::StableBoundary, Region::R5};
  if (f < 0.0) return {pt, Stability::Unstable, Region::R1};
  return {pt, Stability::AsymptoticallyStable,
          pt == PtPhase::Symmetric ? Region::R4 : Region::R3};
}

RegimeLabel classify(const SystemParams& p, double tol) {
  return classify_normalized(p.gamma() / p.kappa(), p.coupling() / p.kappa(),
                             tol);
}

double AxisRange::at(int i) const noexcept {
  if (count <= 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

void AxisRange::validate(const char* name) const {
  const std::string n(name);
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw InvalidParameter(n + " range must be finite");
  }
  if (lo < 0.0) throw InvalidParameter(n + " range must be nonnegative");
  if (count < 1) throw InvalidParameter(n + " resolution must be >= 1");
  if (count == 1) {
    if (hi != lo) {
      throw InvalidParameter(n + " resolution 1 requires lo == hi");
    }
    return;
  }
  if (!(hi > lo)) throw InvalidParameter(n + " range is empty or inverted");
}

PhaseDiagram phase_diagram(const AxisRange& gamma_range,
                           const AxisRange& G_range, double tol,
                           unsigned threads) {
  gamma_range.validate("gamma");
  G_range.validate("G");
  // Fail fast on a bad tolerance instead of inside a worker.
  (void)classify_normalized(0.0, 0.0, tol);

  PhaseDiagram out{gamma_range, G_range, {}};
  const std::size_t rows = static_cast<std::size_t>(gamma_range.count);
  const std::size_t cols = static_cast<std::size_t>(G_range.count);
  out.cells.resize(rows * cols);

  auto fill_rows = [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      const double g = gamma_range.at(static_cast<int>(r));
      for (std::size_t c = 0; c < cols; ++c) {
        const double G = G_range.at(static_cast<int>(c));
        const auto params = SystemParams::from_kappa_units(g, G, 1.0, 1.0, 1.0);
        const Spectrum spec = drift_eigenvalues(params, tol);
        out.cells[r * cols + c] = PhaseCell{
            g, G, classify_normalized(g, G, tol), spec.max_re_lambda()};
      }
    }
  };

  unsigned workers = threads ? threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(rows));
  if (workers == 1 || rows * cols < 4096) {
    fill_rows(0, rows);
    return out;
  }
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (rows + workers - 1) / workers;
    for (std::size_t begin = 0; begin < rows; begin += chunk) {
      pool.emplace_back(fill_rows, begin, std::min(rows, begin + chunk));
    }
  }
  return out;
}

void write_csv(std::ostream& out, const PhaseDiagram& diagram) {
  out << "gamma_over_kappa,G_over_kappa,region_id,pt,stability,max_re_lambda\n";
  for (const auto& cell : diagram.cells) {
    out << csv_line({format_number(cell.gamma_over_kappa),
                     format_number(cell.G_over_kappa),
                     to_string(cell.label.region), to_string(cell.label.pt),
                     to_string(cell.label.stability),
                     format_number(cell.max_re_lambda)});
  }
}

}  // namespace ptom
