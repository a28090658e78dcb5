#include "validate.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "adsgp/correlations.hpp"
#include "adsgp/oracles.hpp"
#include "adsgp/phase.hpp"
#include "adsgp/response.hpp"

namespace adsgp::validation {

namespace {

constexpr double kPi = std::numbers::pi;

std::string describe(double worst, double tol, const std::string& extra = "") {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << "max defect " << worst << " (tol " << tol << ")";
  if (!extra.empty()) os << ", " << extra;
  return os.str();
}

}  // namespace

Draw draw_scenario(std::mt19937_64& rng, int index) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const auto uni = [&](double lo, double hi) { return lo + (hi - lo) * u01(rng); };

  Draw d;
  d.atom.omega0 = 1.0;
  d.atom.mu = (index / 5) % 2 == 0 ? 0.1 : 0.01;
  d.atom.theta = uni(0.05, kPi - 0.05);

  const int kind = index % 5;
  const double ell = std::exp(uni(std::log(0.1), std::log(10.0)));
  const int zeta = static_cast<int>(std::floor(uni(0.0, 3.0))) - 1;
  switch (kind) {
    case 0:
      d.cfg = {Spacetime::AdS, ell, uni(0.01, 0.95) / ell, zeta};
      break;
    case 1:
      d.cfg = {Spacetime::AdS, ell, 1.0 / ell, zeta};
      break;
    case 2:
      d.cfg = {Spacetime::AdS, ell, uni(1.05, 20.0) / ell, zeta};
      break;
    case 3:
      d.cfg = {Spacetime::Minkowski, 0.0, 0.0, 0};
      break;
    default:
      d.cfg = {Spacetime::DeSitter, ell, uni(0.0, 10.0) / ell, 0};
      break;
  }
  return d;
}

CheckResult check_phase_oracle(std::uint64_t seed, int n_draws, double tol) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < n_draws; ++i) {
    const Draw d = draw_scenario(rng, i);
    const KossakowskiPair pair = kossakowski(d.atom, d.cfg);
    const double T = 2.0 * kPi / d.atom.omega0;
    const PhaseReport exact = geometric_phase_exact(d.atom, pair, d.atom.omega0, T);
    const PhaseReport quad = integrate_phase_numeric(d.atom, pair, d.atom.omega0, T);
    const double rel =
        std::abs(exact.phi - quad.phi) / std::max(std::abs(exact.phi), 1e-12);
    worst = std::max(worst, rel);
  }
  return {"phase-oracle", worst <= tol,
          describe(worst, tol, std::to_string(n_draws) + " draws")};
}

CheckResult check_fourier_critical(double tol) {
  double worst = 0.0;
  for (const double u : {0.1, 1.0, 10.0}) {
    const double ell = u;  // omega0 = 1
    FourierSpec spec = make_fourier_spec(1.0);
    spec.split_hints = {-2.0 * ell, 0.0, 2.0 * ell};
    for (const int zeta : {-1, 0, 1}) {
      const StationaryKernel kernel = [ell, zeta](double dtau, double eps) {
        return wightman_critical(dtau, ell, zeta, eps);
      };
      const SpectralPair exact = fourier_critical(1.0, ell, zeta);
      const double gp = fourier_numeric(kernel, 1.0, spec);
      const double gm = fourier_numeric(kernel, -1.0, spec);
      worst = std::max(worst, std::abs(gp - exact.g_plus) / std::abs(exact.g_plus));
      // The negative-frequency response vanishes; compare absolutely
      // against the positive-frequency scale.
      worst = std::max(worst, std::abs(gm) / (1.0 / (2.0 * kPi)));
    }
  }
  return {"fourier-critical", worst <= tol, describe(worst, tol)};
}

CheckResult check_fourier_supercritical(double tol) {
  double worst = 0.0;
  const double mu = 0.1;
  for (const double a_ell : {1.5, std::sqrt(2.0), 5.0}) {
    const double ell = 1.0;  // omega0*ell = 1
    const double accel = a_ell / ell;
    const double y = std::sqrt((a_ell - 1.0) * (a_ell + 1.0));
    FourierSpec spec = make_fourier_spec(1.0, y / ell);
    const double image_lag = 2.0 * std::asinh(y) / (y / ell);
    spec.split_hints = {-image_lag, 0.0, image_lag};
    for (const int zeta : {-1, 0, 1}) {
      const StationaryKernel kernel = [accel, ell, zeta](double dtau, double eps) {
        return wightman_supercritical(dtau, accel, ell, zeta, eps);
      };
      const KossakowskiPair pair =
          kossakowski(AtomParams{1.0, mu, 0.5}, ScenarioConfig{Spacetime::AdS, ell, accel, zeta});
      const double gp_exact = 2.0 * (pair.A + pair.B) / (mu * mu);
      const double gm_exact = 2.0 * (pair.A - pair.B) / (mu * mu);
      const double gp = fourier_numeric(kernel, 1.0, spec);
      const double gm = fourier_numeric(kernel, -1.0, spec);
      worst = std::max(worst, std::abs(gp - gp_exact) / std::abs(gp_exact));
      worst = std::max(worst, std::abs(gm - gm_exact) / std::abs(gm_exact));
    }
  }
  return {"fourier-supercritical", worst <= tol, describe(worst, tol)};
}

CheckResult check_continuity(double tol) {
  double worst = 0.0;
  const AtomParams atom{1.0, 0.1, kPi / 4.0};
  for (const double u : {0.1, 1.0, 10.0}) {
    for (const int zeta : {-1, 0, 1}) {
      const ScenarioConfig super{Spacetime::AdS, u, (1.0 + 1e-6) / u, zeta};
      const ScenarioConfig crit{Spacetime::AdS, u, 1.0 / u, zeta};
      const double ds = correction(atom, super).delta_over_mu2;
      const double dc = correction(atom, crit).delta_over_mu2;
      worst = std::max(worst, std::abs(ds - dc));
    }
  }
  return {"continuity", worst <= tol,
          describe(worst, tol, "|delta_s - delta_c| / mu^2 at a*ell = 1 + 1e-6")};
}

CheckResult check_mu4_scaling(double lo, double hi) {
  const std::vector<ScenarioConfig> scenarios = {
      {Spacetime::AdS, 1.0, 1.0, 1},             // critical
      {Spacetime::AdS, 1.0, 2.0, 1},             // supercritical
      {Spacetime::Minkowski, 0.0, 0.0, 0},
      {Spacetime::DeSitter, 1.0, 1.0, 0},
  };
  double worst_lo = 1e300, worst_hi = 0.0;
  bool ok = true;
  for (const auto& cfg : scenarios) {
    const auto defect = [&](double mu) {
      const AtomParams atom{1.0, mu, kPi / 4.0};
      const KossakowskiPair pair = kossakowski(atom, cfg);
      const double exact =
          geometric_phase_exact(atom, pair, atom.omega0, 2.0 * kPi).phi;
      return exact - phase_perturbative(atom, cfg).phi;
    };
    const double ratio = defect(0.1) / defect(0.05);
    worst_lo = std::min(worst_lo, ratio);
    worst_hi = std::max(worst_hi, ratio);
    ok = ok && ratio >= lo && ratio <= hi;
  }
  std::ostringstream os;
  os.precision(4);
  os << "defect ratios in [" << worst_lo << ", " << worst_hi << "] (want [" << lo << ", "
     << hi << "])";
  return {"mu4-scaling", ok, os.str()};
}

std::vector<CheckResult> run_checks(const std::string& only, std::uint64_t seed) {
  std::vector<CheckResult> results;
  const auto want = [&](const std::string& name) {
    return only.empty() || name.find(only) != std::string::npos;
  };
  if (want("phase-oracle")) results.push_back(check_phase_oracle(seed));
  if (want("fourier-critical")) results.push_back(check_fourier_critical());
  if (want("fourier-supercritical")) results.push_back(check_fourier_supercritical());
  if (want("continuity")) results.push_back(check_continuity());
  if (want("mu4-scaling")) results.push_back(check_mu4_scaling());
  return results;
}

}  // namespace adsgp::validation
