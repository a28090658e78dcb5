#pragma once

#include <optional>

#include "adsgp/model.hpp"
#include "adsgp/response.hpp"

namespace adsgp {

enum class PhaseMethod { ExactF, Quadrature, PerturbativeMu2, AnalyticLimit };

const char* to_string(PhaseMethod m);

/// A computed geometric phase (radians, unreduced) together with how it was
/// obtained and the dimensionless groups it depends on.
struct PhaseReport {
  double phi = 0.0;
  PhaseMethod method = PhaseMethod::ExactF;
  std::optional<Regime> regime;
  double T = 0.0;
  DimensionlessGroups groups;
};

/// Difference between a scenario's one-period phase and the inertial
/// Minkowski reference.
struct CorrectionReport {
  double delta = 0.0;
  double delta_over_mu2 = 0.0;
  double baseline = 0.0;  // the Minkowski phase used
};

/// Which asymptotic expansion of the supercritical correction fired.
enum class AsymptoticBranch {
  CriticalSmallRadius,          // critical worldline, omega0 ell << 1
  SmallRadiusNearCritical,      // omega0 ell << sqrt(a^2 l^2 - 1) < 1
  SmallRadiusHighAcceleration,  // sqrt(a^2 l^2 - 1) >> 1 >> omega0 ell
  LargeRadiusOscillatory,       // sqrt(a^2 l^2 - 1) < 1 << omega0 ell
  LargeRadiusThermal,           // sqrt(a^2 l^2 - 1) >> omega0 ell >> 1
};

const char* to_string(AsymptoticBranch b);

struct AsymptoticCorrection {
  CorrectionReport correction;
  AsymptoticBranch branch;
};

/// Antiderivative of the one-period phase integrand. Valid for A > 0,
/// R = B/A in (0, 1], Q = R + cos(theta) away from zero. Throws
/// DegenerateQError when |Q| is numerically zero.
double f_aux(double phi, double A, double R, double Q, double omega0);

/// The auxiliary square root S(phi) appearing inside f_aux. Satisfies
/// S(omega0 tau) = eta(tau) e^{4 A tau} identically.
double f_aux_s(double phi, double A, double R, double Q, double omega0);

/// F(phi) - F(0) in one stable evaluation. The naive difference of two
/// f_aux calls loses up to omega0/(8 A) * eps_machine absolutely, which is
/// catastrophic at weak coupling; this form keeps full relative precision.
double f_aux_delta(double phi, double A, double R, double Q, double omega0);

/// Exact geometric phase accumulated over [0, T] for the closed-form
/// dynamics with rates (A, B) and effective gap Omega. Uses the
/// antiderivative when well-conditioned, an analytic limit when A = 0 and
/// adaptive quadrature in the degenerate-Q window.
PhaseReport geometric_phase_exact(const AtomParams& atom, const KossakowskiPair& pair,
                                  double Omega, double T);

/// Scenario-level convenience: resolves the dissipator pair, regime and
/// groups, then evaluates the exact phase over one period (or T).
PhaseReport geometric_phase(const AtomParams& atom, const ScenarioConfig& cfg,
                            std::optional<double> T = std::nullopt);

/// One-period phase to O(mu^2), using the closed form that matches the
/// scenario's regime.
PhaseReport phase_perturbative(const AtomParams& atom, const ScenarioConfig& cfg);

/// First-order expansion of the exact phase for a general dissipator pair:
/// Phi = -pi(1 - cos t) - (2 pi^2/omega0) sin^2 t (2B + A cos t). Agrees
/// termwise with the per-regime closed forms and serves as the bridge
/// between the response pairs and the perturbative phases.
double phase_perturbative_from_pair(const AtomParams& atom, const KossakowskiPair& pair);

/// Inertial Minkowski reference phase over one period, to O(mu^2).
double minkowski_inertial_phase(const AtomParams& atom);

/// O(mu^2) correction delta = Phi_scenario - Phi_Minkowski over one period.
CorrectionReport correction(const AtomParams& atom, const ScenarioConfig& cfg);

/// Asymptotic closed forms of the correction. The applicable branch is
/// selected with fixed margins (ratio >= 10 for ">>", <= 0.1 for "<<");
/// parameters matching no branch raise NoAsymptoteError.
AsymptoticCorrection correction_asymptotic(const AtomParams& atom, const ScenarioConfig& cfg);

}  // namespace adsgp
