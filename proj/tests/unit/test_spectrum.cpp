#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "ptom/spectrum.hpp"

using namespace ptom;

namespace {

constexpr double kW1 = kDefaultOmega1 / kDefaultKappa;

SystemParams unit_params(double gamma, double G, double w1 = kW1) {
  return SystemParams::from_kappa_units(gamma, G, w1, 1.0);
}

// Largest distance between the two spectra after greedy nearest matching.
double spectrum_distance(std::array<cplx, 4> a, std::array<cplx, 4> b) {
  double worst = 0.0;
  std::array<bool, 4> used{};
  for (const cplx& x : a) {
    int best = -1;
    for (int j = 0; j < 4; ++j) {
      if (!used[j] && (best < 0 || std::abs(x - b[j]) < std::abs(x - b[best]))) best = j;
    }
    used[best] = true;
    worst = std::max(worst, std::abs(x - b[best]));
  }
  return worst;
}

}  // namespace

TEST_CASE("supermode frequencies in the two PT phases") {
  const auto [wp, wm] = supermode_frequencies(unit_params(0.6, 1.2));
  CHECK(wp.real() != doctest::Approx(wm.real()));
  CHECK(wp.imag() == doctest::Approx(-0.2));
  CHECK(wm.imag() == doctest::Approx(-0.2));
  CHECK(0.5 * (wp.real() + wm.real()) == doctest::Approx(kW1));

  const auto [bp, bm] = supermode_frequencies(unit_params(0.6, 0.5));
  CHECK(bp.real() == doctest::Approx(kW1));
  CHECK(bm.real() == doctest::Approx(kW1));
  CHECK(bp.imag() - bm.imag() == doctest::Approx(2.0 * std::sqrt(0.64 - 0.25)));

  const auto [ep, em] = supermode_frequencies(unit_params(0.6, 0.8));
  CHECK(ep == em);
}

TEST_CASE("decoupled drift eigenvalues") {
  const Spectrum s = drift_eigenvalues(unit_params(0.3, 0.0));
  const std::array<cplx, 4> expected{cplx(0.3, kW1), cplx(0.3, -kW1),
                                     cplx(-1.0, kW1), cplx(-1.0, -kW1)};
  CHECK(spectrum_distance(s.lambdas, expected) < 1e-14);
}

TEST_CASE("equal gain with f > 0 puts every eigenvalue on the imaginary axis") {
  const Spectrum s = drift_eigenvalues(unit_params(1.0, 1.5));
  const double root = std::sqrt(1.5 * 1.5 - 1.0);
  CHECK(s.lambdas[0].real() == doctest::Approx(0.0));
  CHECK(s.lambdas[0].imag() == doctest::Approx(kW1 + root));
  CHECK(s.lambdas[2].imag() == doctest::Approx(kW1 - root));
  CHECK(s.max_re_lambda() == doctest::Approx(0.0));
  CHECK_FALSE(s.degenerate_drift);
}

TEST_CASE("degenerate drift at f = 0 with gamma = kappa") {
  CHECK(drift_eigenvalues(unit_params(1.0, 1.0)).degenerate_drift);
  CHECK_FALSE(drift_eigenvalues(unit_params(0.6, std::sqrt(0.6))).degenerate_drift);
}

TEST_CASE("closed-form eigenvalues equal the dense eigensolution") {
  for (const auto& set : test::kDisplacementSets) {
    CAPTURE(set.id);
    const auto p = test::caption_params(set.gamma, set.G);
    const double d = spectrum_distance(drift_eigenvalues(p).lambdas,
                                       dense_drift_eigenvalues(p));
    CHECK(d / p.kappa() < 1e-10);
  }
}

TEST_CASE("trace identity: the eigenvalues sum to 2 (gamma - kappa)") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> rate(0.0, 3.0);
  std::uniform_real_distribution<double> freq(1.0, 60.0);
  for (int i = 0; i < 2000; ++i) {
    const auto p = unit_params(rate(rng), rate(rng), freq(rng));
    cplx sum{};
    for (const cplx& l : drift_eigenvalues(p).lambdas) sum += l;
    CHECK(std::abs(sum - cplx(2.0 * (p.gamma() - p.kappa()), 0.0)) < 1e-12);
    CHECK(std::abs(drift_matrix(p).trace() - sum) < 1e-12);
  }
}

TEST_CASE("caption sets classify to their stated regions") {
  for (const auto& set : test::kDisplacementSets) {
    CAPTURE(set.id);
    CHECK(static_cast<int>(classify_normalized(set.gamma, set.G).region) == set.region);
  }
  CHECK(classify_normalized(0.6, 0.6).region == Region::R1);
  CHECK(classify_normalized(1.0, 0.8).region == Region::R1);
  CHECK(classify_normalized(1.8, 2.1).pt == PtPhase::Symmetric);
  CHECK(classify_normalized(1.8, 1.2).pt == PtPhase::Broken);
}

TEST_CASE("exceptional point") {
  const RegimeLabel ep = classify_normalized(1.0, 1.0);
  CHECK(ep.region == Region::EP);
  CHECK(ep.pt == PtPhase::ExceptionalPoint);
  CHECK(ep.stability == Stability::UnstableDegenerate);
  CHECK(classify_normalized(0.6, 0.8).pt == PtPhase::ExceptionalPoint);
  CHECK(classify_normalized(0.6, 0.8 + 1e-10).pt == PtPhase::ExceptionalPoint);
  CHECK(classify_normalized(0.6, 0.8 + 1e-6).pt == PtPhase::Symmetric);
}

TEST_CASE("classification is kappa-scale invariant") {
  for (double kappa : {1.0, 6.45e6, 3e9}) {
    const auto p = SystemParams::make(kappa, 0.6 * kappa, 1.2 * kappa, 20 * kappa);
    CHECK(classify(p).region == Region::R4);
  }
}

TEST_CASE("classification tolerance bounds") {
  const auto p = unit_params(0.6, 1.2);
  CHECK_THROWS_AS(classify(p, 0.0), InvalidParameter);
  CHECK_THROWS_AS(classify(p, 2e-3), InvalidParameter);
  CHECK_NOTHROW(classify(p, 1e-3));
}

TEST_CASE("labels agree with the sign of max Re lambda on random points") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> rate(0.0, 3.0);
  for (int i = 0; i < 10000; ++i) {
    const double g = rate(rng);
    const double G = rate(rng);
    const auto p = unit_params(g, G);
    const RegimeLabel l = classify(p);
    const double m = drift_eigenvalues(p).max_re_lambda();
    CAPTURE(g);
    CAPTURE(G);
    switch (l.stability) {
      case Stability::AsymptoticallyStable: CHECK(m < 0.0); break;
      case Stability::Unstable: CHECK(m > 0.0); break;
      default: CHECK(std::abs(m) < 1e-6); break;
    }
    CHECK((l.pt == PtPhase::Symmetric) == (G > 0.5 * (1.0 + g)));
  }
}

TEST_CASE("2x2 grid and the asymptotic corner") {
  CHECK(classify_normalized(0.5, 0.5).region == Region::R1);
  CHECK(classify_normalized(0.5, 1.5).region == Region::R4);
  CHECK(classify_normalized(1.5, 0.5).region == Region::R1);
  CHECK(classify_normalized(1.5, 1.5).region == Region::R2);
  CHECK(classify_normalized(0.9, 50.0).region == Region::R4);
}

TEST_CASE("gamma = kappa row splits into regions 1 and 6 around the EP") {
  const PhaseDiagram d = phase_diagram({1.0, 1.0, 1}, {0.0, 2.0, 201});
  std::set<std::string> seen;
  for (const auto& c : d.cells) seen.insert(to_string(c.label.region));
  CHECK(seen == std::set<std::string>{"1", "6", "EP"});
  CHECK(d.at(0, 100).label.region == Region::EP);
  CHECK(d.at(0, 99).label.region == Region::R1);
  CHECK(d.at(0, 101).label.region == Region::R6);
}

TEST_CASE("axis validation") {
  CHECK_THROWS_AS(AxisRange({2.0, 1.0, 5}).validate("gamma"), InvalidParameter);
  CHECK_THROWS_AS(AxisRange({0.0, 1.0, 1}).validate("gamma"), InvalidParameter);
  CHECK_THROWS_AS(AxisRange({-1.0, 1.0, 3}).validate("gamma"), InvalidParameter);
  CHECK_NOTHROW(AxisRange({1.0, 1.0, 1}).validate("gamma"));
  CHECK(AxisRange({0.0, 2.0, 5}).at(4) == 2.0);
}

TEST_CASE("phase diagram output does not depend on the worker count") {
  const AxisRange g{0.0, 2.0, 101};
  const AxisRange G{0.0, 2.0, 97};
  std::ostringstream one;
  std::ostringstream many;
  write_csv(one, phase_diagram(g, G, kDefaultClassifyTol, 1));
  write_csv(many, phase_diagram(g, G, kDefaultClassifyTol, 7));
  const std::string text = one.str();
  CHECK(text == many.str());
  CHECK(text.rfind("gamma_over_kappa,G_over_kappa,region_id,pt,stability,max_re_lambda\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 101 * 97);
}
