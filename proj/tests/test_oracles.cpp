#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "adsgp/correlations.hpp"
#include "adsgp/oracles.hpp"
#include "adsgp/response.hpp"

using namespace adsgp;

namespace {

constexpr double kPi = std::numbers::pi;

StationaryKernel critical_kernel(double ell, int zeta) {
  return [ell, zeta](double dtau, double eps) {
    return wightman_critical(dtau, ell, zeta, eps);
  };
}

StationaryKernel supercritical_kernel(double accel, double ell, int zeta) {
  return [accel, ell, zeta](double dtau, double eps) {
    return wightman_supercritical(dtau, accel, ell, zeta, eps);
  };
}

}  // namespace

TEST_CASE("adaptive quadrature on smooth references") {
  const auto r1 = integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, {});
  CHECK(r1.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  const auto r2 = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, kPi, {});
  CHECK(r2.value == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(r2.error_estimate < 1e-10);
}

TEST_CASE("quadrature self-consistency under tighter tolerances") {
  const auto f = [](double x) { return std::exp(-x) * std::cos(10.0 * x); };
  QuadratureSpec loose{1e-8, 1e-8, 10000};
  QuadratureSpec tight{1e-12, 1e-12, 10000};
  const auto rl = integrate_adaptive(f, 0.0, 5.0, loose);
  const auto rt = integrate_adaptive(f, 0.0, 5.0, tight);
  CHECK(std::abs(rl.value - rt.value) <= std::max(rl.error_estimate, 1e-14));
}

TEST_CASE("exhausted budget raises with the achieved estimate") {
  const auto nasty = [](double x) { return 1.0 / std::sqrt(std::abs(x - 0.3) + 1e-14); };
  QuadratureSpec tiny{1e-14, 1e-14, 3};
  try {
    integrate_adaptive(nasty, 0.0, 1.0, tiny);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(std::isfinite(e.estimate));
    CHECK(e.error_estimate > 0.0);
  }
}

TEST_CASE("phase quadrature is linear in T for vanishing rates") {
  const AtomParams atom{1.0, 0.1, kPi / 3.0};
  const KossakowskiPair none{0.0, 0.0};
  const double phi1 = integrate_phase_numeric(atom, none, 1.0, 2.0 * kPi).phi;
  const double phi2 = integrate_phase_numeric(atom, none, 1.0, 4.0 * kPi).phi;
  CHECK(phi1 == doctest::Approx(-kPi * (1.0 - 0.5)).epsilon(1e-12));
  CHECK(phi2 == doctest::Approx(2.0 * phi1).epsilon(1e-12));
}

TEST_CASE("phase quadrature at the ground-state endpoint") {
  // theta = pi makes the integrand identically -Omega.
  const AtomParams atom{1.0, 0.1, kPi};
  const double pref = atom.mu * atom.mu / (8.0 * kPi);
  const KossakowskiPair pair{pref, pref};
  const double T = 2.0 * kPi;
  const auto rep = integrate_phase_numeric(atom, pair, 1.0, T);
  CHECK(rep.phi == doctest::Approx(-T).epsilon(1e-12));
  CHECK(rep.method == PhaseMethod::Quadrature);
}

TEST_CASE("regulated transform reproduces the critical spectrum") {
  FourierSpec spec = make_fourier_spec(1.0);
  spec.split_hints = {-2.0, 0.0, 2.0};
  SUBCASE("positive frequency, transparent") {
    const double g = fourier_numeric(critical_kernel(1.0, 0), 1.0, spec);
    CHECK(std::abs(g - 1.0 / (2.0 * kPi)) < 1e-3 / (2.0 * kPi));
  }
  SUBCASE("negative frequency vanishes for every boundary") {
    for (int zeta : {-1, 0, 1}) {
      const double g = fourier_numeric(critical_kernel(1.0, zeta), -1.0, spec);
      CHECK(std::abs(g) < 1e-3 / (2.0 * kPi));
    }
  }
}

TEST_CASE("regulated transform reproduces the supercritical spectrum") {
  const double a = std::sqrt(2.0), ell = 1.0;
  const int zeta = 1;
  const double y = 1.0;
  FourierSpec spec = make_fourier_spec(1.0, y / ell);
  const double image_lag = 2.0 * std::asinh(y) / (y / ell);
  spec.split_hints = {-image_lag, 0.0, image_lag};

  const AtomParams atom{1.0, 0.1, 0.5};
  const auto pair = kossakowski(atom, {Spacetime::AdS, ell, a, zeta});
  const double mu2 = atom.mu * atom.mu;
  const double gp_exact = 2.0 * (pair.A + pair.B) / mu2;
  const double gm_exact = 2.0 * (pair.A - pair.B) / mu2;

  const double gp = fourier_numeric(supercritical_kernel(a, ell, zeta), 1.0, spec);
  const double gm = fourier_numeric(supercritical_kernel(a, ell, zeta), -1.0, spec);
  CHECK(std::abs(gp - gp_exact) / gp_exact < 1e-3);
  CHECK(std::abs(gm - gm_exact) / gm_exact < 1e-3);
}

TEST_CASE("regulator schedule converges linearly and extrapolation helps") {
  FourierSpec spec = make_fourier_spec(1.0);
  spec.split_hints = {-2.0, 0.0, 2.0};
  const auto kernel = critical_kernel(1.0, 0);
  const auto per_eps = fourier_numeric_schedule(kernel, 1.0, spec);
  REQUIRE(per_eps.size() == 2);
  const double exact = 1.0 / (2.0 * kPi);
  const double d1 = std::abs(per_eps[0].real() - exact);
  const double d2 = std::abs(per_eps[1].real() - exact);
  // Defects scale with eps: halving eps roughly halves the defect.
  CHECK(d2 < d1);
  CHECK(d1 / d2 == doctest::Approx(2.0).epsilon(0.2));
  CHECK(std::abs(per_eps[0].real() - per_eps[1].real()) <
        2.0 * exact * 1.0 * spec.epsilon_schedule[0]);
  const double extrapolated = fourier_numeric(kernel, 1.0, spec);
  CHECK(std::abs(extrapolated - exact) * 5.0 <= d1);
}

TEST_CASE("spectral density is non-negative where probed") {
  FourierSpec spec = make_fourier_spec(1.0);
  spec.split_hints = {-2.0, 0.0, 2.0};
  const double scale = 1.0 / (2.0 * kPi);
  for (int zeta : {-1, 0, 1}) {
    for (double omega : {-2.0, -1.0, 0.5, 1.0, 2.0}) {
      const double g = fourier_numeric(critical_kernel(1.0, zeta), omega, spec);
      CHECK(g >= -1e-6 * scale);
    }
  }
}

TEST_CASE("window check refuses non-decaying kernels") {
  // The subcritical correlator is periodic in the lag; the windowed
  // transform must refuse it rather than return comb garbage.
  const StationaryKernel periodic = [](double dtau, double eps) {
    return wightman_subcritical(dtau, 0.5, 1.0, 0, eps);
  };
  FourierSpec spec = make_fourier_spec(1.0);
  CHECK_THROWS_AS(fourier_numeric(periodic, 1.0, spec), WindowError);
}

TEST_CASE("fourier spec validation and window sizing") {
  CHECK(make_fourier_spec(1.0).window == doctest::Approx(200.0));
  CHECK(make_fourier_spec(1.0, 0.1).window == doctest::Approx(400.0));
  CHECK(make_fourier_spec(2.0).window == doctest::Approx(100.0));
  FourierSpec bad = make_fourier_spec(1.0);
  bad.epsilon_schedule = {1e-4, 1e-3};
  CHECK_THROWS_AS(fourier_numeric(critical_kernel(1.0, 0), 1.0, bad), ValidationError);
  bad.epsilon_schedule.clear();
  CHECK_THROWS_AS(fourier_numeric(critical_kernel(1.0, 0), 1.0, bad), ValidationError);
}
