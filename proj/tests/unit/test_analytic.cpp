#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ptom/analytic.hpp"
#include "ptom/compare.hpp"
#include "ptom/numeric.hpp"

using namespace ptom;
using namespace ptom::analytic;

namespace {

const CoherentInit kInit = test::caption_init();

SystemParams at(double gamma, double G) { return test::caption_params(gamma, G); }

double seconds(const SystemParams& p, double tau) { return tau / p.kappa(); }

NumberSplit closed_numbers(const SystemParams& p, const CoherentInit& init, double t) {
  return number_method(p) == NumberMethod::EqualGain ? numbers_equal_gain(p, init, t)
                                                     : numbers_unequal_gain(p, init, t);
}

// The printed grouping cancels at small t (prefactors ~ 1/Omega^2), which
// bounds the absolute agreement.
void check_against_printed(const NumberSplit& s, const test::PrintedNumbers& ref) {
  const Tolerance tol{1e-10, 1e-10};
  CHECK(tol.accepts(s.n_a_st, ref.na_st.real()));
  CHECK(tol.accepts(s.n_b_st, ref.nb_st.real()));
  CHECK(tol.accepts(s.n_a_sp, ref.na_sp.real()));
  CHECK(tol.accepts(s.n_b_sp, ref.nb_sp.real()));
}

}  // namespace

TEST_CASE("displacement at t = 0 is 2 x_zpf Re beta") {
  const auto p = at(0.6, 1.2);
  CHECK(displacement(p, kInit, 0.0) == doctest::Approx(2.0 * p.x_zpf() * kInit.beta.real()));
}

TEST_CASE("mean amplitudes are linear in the initial state") {
  const auto p = at(1.8, 2.1);
  const CoherentInit u{{0.3, -1.0}, {2.0, 0.5}};
  const CoherentInit v{{-1.5, 0.2}, {0.1, 0.7}};
  const CoherentInit w{u.alpha * 2.0 + v.alpha, u.beta * 2.0 + v.beta};
  for (double tau : {0.0, 0.37, 2.0, 7.5}) {
    const double t = seconds(p, tau);
    const auto [ua, ub] = mean_amplitudes(p, u, t);
    const auto [va, vb] = mean_amplitudes(p, v, t);
    const auto [wa, wb] = mean_amplitudes(p, w, t);
    CHECK(std::abs(wa - (2.0 * ua + va)) < 1e-12 * std::abs(wa) + 1e-14);
    CHECK(std::abs(wb - (2.0 * ub + vb)) < 1e-12 * std::abs(wb) + 1e-14);
  }
}

TEST_CASE("eigenvector initial state evolves as a single exponential") {
  // Rotating-frame generator [[-kappa, iG], [iG, gamma]]; eigenvector for
  // mu = (gamma - kappa + Omega)/2 is (iG, mu + kappa).
  for (const auto& set : test::kDisplacementSets) {
    CAPTURE(set.id);
    const auto p = at(set.gamma, set.G);
    const cplx mu = 0.5 * (p.gamma() - p.kappa() + p.omega_rate());
    const CoherentInit init{cplx(0.0, p.coupling()) / p.kappa(), (mu + p.kappa()) / p.kappa()};
    for (double tau : {0.5, 3.0, 10.0}) {
      const double t = seconds(p, tau);
      const cplx phase = std::exp((mu - cplx(0.0, p.omega1())) * t);
      const auto [a, b] = mean_amplitudes(p, init, t);
      CHECK(std::abs(a - init.alpha * phase) <= 1e-10 * std::abs(init.alpha * phase));
      CHECK(std::abs(b - init.beta * phase) <= 1e-10 * std::abs(init.beta * phase));
    }
  }
}

TEST_CASE("displacement matches RK4 of the first-moment equations") {
  for (const auto& set : test::kDisplacementSets) {
    CAPTURE(set.id);
    const auto p = at(set.gamma, set.G);
    const numeric::TimeGrid grid{seconds(p, 10.0), numeric::default_dt(p), 200};
    const auto series = numeric::integrate_first_moments(p, kInit, grid);
    REQUIRE_FALSE(series.truncated);
    const Tolerance tol{1e-8, 1e-12};
    for (const auto& s : series.samples) {
      const double ref = 2.0 * s.b.real();
      CHECK(tol.accepts(displacement(p, kInit, s.t) / p.x_zpf(), ref));
    }
  }
}

TEST_CASE("equal-gain numbers equal the printed formula") {
  for (double G : {1.5, 0.8, 0.3}) {
    CAPTURE(G);
    const auto p = at(1.0, G);
    for (double tau : {0.01, 0.5, 2.0, 6.0, 10.0}) {
      CAPTURE(tau);
      check_against_printed(numbers_equal_gain(p, kInit, seconds(p, tau)),
                            test::printed_equal_gain(G, kInit.alpha, kInit.beta, tau));
    }
  }
}

TEST_CASE("unequal-gain numbers equal the printed formula") {
  for (auto [g, G] : {std::pair{0.6, 1.2}, {0.6, 0.798}, {0.6, 0.6}, {1.8, 2.1}, {1.8, 1.2},
                      {0.2, 0.3}}) {
    CAPTURE(g);
    CAPTURE(G);
    const auto p = at(g, G);
    for (double tau : {0.01, 0.5, 2.0, 6.0, 10.0}) {
      CAPTURE(tau);
      check_against_printed(numbers_unequal_gain(p, kInit, seconds(p, tau)),
                            test::printed_unequal_gain(g, G, kInit.alpha, kInit.beta, tau));
    }
  }
}

TEST_CASE("short-time spontaneous number against a high-precision solve") {
  // mpmath ODE solve of the vacuum moment equations, 50 digits
  const auto p = at(0.6, 0.798);
  const auto s = numbers_unequal_gain(p, CoherentInit{}, 0.01 / p.kappa());
  CHECK(s.n_a_sp == doctest::Approx(2.539586727339538e-07).epsilon(1e-10));
}

TEST_CASE("initial split is the coherent state itself") {
  for (auto [g, G] : {std::pair{1.0, 1.5}, {0.6, 1.2}, {1.8, 1.2}}) {
    const auto s = closed_numbers(at(g, G), kInit, 0.0);
    CHECK(s.n_a_st == doctest::Approx(4.0));
    CHECK(s.n_b_st == doctest::Approx(4.0));
    CHECK(std::abs(s.n_a_sp) < 1e-14);
    CHECK(std::abs(s.n_b_sp) < 1e-14);
  }
}

TEST_CASE("stimulated part is |first moment|^2 and the spontaneous part ignores the init") {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> n(0.0, 2.0);
  const CoherentInit vacuum{};
  for (auto [g, G] : {std::pair{1.0, 1.5}, {1.0, 0.8}, {0.6, 1.2}, {0.6, 0.798}, {1.8, 2.1}}) {
    const auto p = at(g, G);
    for (int k = 0; k < 5; ++k) {
      const CoherentInit init{{n(rng), n(rng)}, {n(rng), n(rng)}};
      for (double tau : {0.3, 4.0, 9.0}) {
        const double t = seconds(p, tau);
        const auto s = closed_numbers(p, init, t);
        const auto s0 = closed_numbers(p, vacuum, t);
        const auto [a, b] = mean_amplitudes(p, init, t);
        CHECK(s.n_a_st == doctest::Approx(std::norm(a)).epsilon(1e-9));
        CHECK(s.n_b_st == doctest::Approx(std::norm(b)).epsilon(1e-9));
        CHECK(s.n_a_sp == doctest::Approx(s0.n_a_sp).epsilon(1e-12));
        CHECK(s.n_b_sp == doctest::Approx(s0.n_b_sp).epsilon(1e-12));
        CHECK(s0.n_a_st == 0.0);
        CHECK(s.n_a_sp >= 0.0);
        CHECK(s.n_b_sp >= 0.0);
      }
    }
  }
}

TEST_CASE("closed forms are continuous through the exceptional point") {
  for (double g : {1.0, 0.6}) {
    const double G_ep = 0.5 * (1.0 + g);
    const double shift = 1e-12 / ((1.0 + g) * (1.0 + g));  // |Omega| = 1e-6 kappa
    for (double G : {G_ep * std::sqrt(1.0 - shift), G_ep * std::sqrt(1.0 + shift)}) {
      const auto p_ep = at(g, G_ep);
      const auto p = at(g, G);
      for (double tau : {0.5, 3.0, 10.0}) {
        const double t = seconds(p, tau);
        CHECK(relative_error(displacement(p, kInit, t), displacement(p_ep, kInit, t)) < 1e-6);
        const auto a = closed_numbers(p, kInit, t);
        const auto b = closed_numbers(p_ep, kInit, t);
        CHECK(relative_error(a.n_a(), b.n_a()) < 1e-6);
        CHECK(relative_error(a.n_b(), b.n_b()) < 1e-6);
      }
    }
  }
}

TEST_CASE("unequal-gain numbers converge to the equal-gain forms as gamma -> kappa") {
  const auto p_eq = at(1.0, 1.5);
  const double t = seconds(p_eq, 2.0);
  const auto ref = numbers_equal_gain(p_eq, kInit, t);
  for (double d : {1e-6, -1e-6}) {
    const auto s = numbers_unequal_gain(at(1.0 + d, 1.5), kInit, t);
    CHECK(relative_error(s.n_a(), ref.n_a()) < 1e-4);
    CHECK(relative_error(s.n_b(), ref.n_b()) < 1e-4);
    CHECK(relative_error(s.n_a_sp, ref.n_a_sp) < 1e-4);
    CHECK(relative_error(s.n_b_sp, ref.n_b_sp) < 1e-4);
  }
}

TEST_CASE("regime guards") {
  CHECK_THROWS_AS(numbers_equal_gain(at(0.6, 1.2), kInit, 0.0), OutsideRegime);
  CHECK_THROWS_AS(numbers_unequal_gain(at(1.0, 1.2), kInit, 0.0), OutsideRegime);
  CHECK_THROWS_AS(numbers_unequal_gain(at(0.6, std::sqrt(0.6)), kInit, 0.0), OutsideRegime);
  CHECK_THROWS_AS(finite_time_amplitude(at(0.6, 1.2), kInit), OutsideRegime);
  CHECK_THROWS_AS(steady_numbers(at(1.8, 2.1)), OutsideRegime);
  CHECK_THROWS_AS(steady_numbers(at(1.0, 1.5)), OutsideRegime);
}

TEST_CASE("number method dispatch") {
  CHECK(number_method(at(1.0, 1.5)) == NumberMethod::EqualGain);
  CHECK(number_method(at(1.0 + 1e-9, 1.5)) == NumberMethod::EqualGain);
  CHECK(number_method(at(1.0 + 1e-6, 1.5)) == NumberMethod::UnequalGain);
  CHECK(number_method(at(0.6, std::sqrt(0.6 + 1e-5))) == NumberMethod::NumericFallback);
  CHECK(number_method(at(0.6, std::sqrt(0.6))) == NumberMethod::NumericFallback);
  CHECK(number_method(at(0.6, 1.2)) == NumberMethod::UnequalGain);
  CHECK(std::string(to_string(NumberMethod::NumericFallback)) == "numeric-fallback");
}

TEST_CASE("finite-time amplitude on the f = 0 boundary") {
  const auto p = at(0.6, std::sqrt(0.6));
  const double amp = finite_time_amplitude(p, kInit);
  CHECK(finite_time_amplitude(p, CoherentInit{}) == 0.0);
  const CoherentInit twice{kInit.alpha * 2.0, kInit.beta * 2.0};
  CHECK(finite_time_amplitude(p, twice) == doctest::Approx(2.0 * amp).epsilon(1e-14));
  // The decaying supermode has rate (kappa - gamma)/2; after 80/kappa only
  // the undamped one is left and |x| oscillates with amplitude 2 x_zpf |b|.
  const double t = seconds(p, 80.0);
  const double late = 2.0 * p.x_zpf() * std::abs(mean_amplitudes(p, kInit, t).second);
  CHECK(relative_error(amp, late) < 1e-10);
}

TEST_CASE("steady numbers") {
  const auto s = steady_numbers(at(0.6, 0.798));
  CHECK(s.n_a == doctest::Approx(25.95386371046625).epsilon(1e-12));
  CHECK(s.n_b == doctest::Approx(42.25643951744376).epsilon(1e-12));

  const auto zero = steady_numbers(at(0.0, 0.798));
  CHECK(zero.n_a == 0.0);
  CHECK(zero.n_b == 0.0);

  double previous = steady_numbers(at(0.6, 0.8)).n_a;
  for (double G = 0.85; G < 20.0; G += 0.05) {
    const auto v = steady_numbers(at(0.6, G));
    CHECK(v.n_a < previous);
    CHECK(v.n_a > 1.5);
    CHECK(v.n_b > v.n_a);
    previous = v.n_a;
  }
  CHECK(steady_numbers(at(0.6, 1e4)).n_a == doctest::Approx(1.5).epsilon(1e-7));
}
