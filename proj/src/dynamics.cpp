#include "adsgp/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace adsgp {

namespace {

constexpr double kDegenerateEta = 1e-15;

void check_rates(double theta, double A, double B, double tau) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > std::acos(-1.0))
    throw ValidationError("theta must lie in [0, pi]");
  if (!std::isfinite(A) || A < 0.0) throw ValidationError("A must be finite and >= 0");
  if (!std::isfinite(B) || std::abs(B) > A)
    throw ValidationError("B must satisfy |B| <= A (spectral positivity)");
  if (!std::isfinite(tau) || tau < 0.0) throw ValidationError("tau must be finite and >= 0");
}

double rho3_of(double theta, double A, double B, double tau) {
  const double c = std::cos(theta);
  if (A * tau < 1e-14) {
    // Removable A -> 0 limit: (e^{-4 A tau} - 1) B / A -> -4 B tau.
    return std::exp(-4.0 * A * tau) * c - 4.0 * B * tau;
  }
  const double em1 = std::expm1(-4.0 * A * tau);
  return (1.0 + em1) * c + (B / A) * em1;
}

}  // namespace

BlochState bloch_evolve(double theta, double A, double B, double Omega, double tau) {
  check_rates(theta, A, B, tau);
  if (!std::isfinite(Omega)) throw ValidationError("Omega must be finite");
  const double s = std::sin(theta);
  const double e2 = std::exp(-2.0 * A * tau);
  BlochState st;
  st.rho1 = e2 * s * std::cos(Omega * tau);
  st.rho2 = e2 * s * std::sin(Omega * tau);
  st.rho3 = rho3_of(theta, A, B, tau);
  st.tau = tau;
  return st;
}

AtomDensity density_matrix(const BlochState& state) {
  AtomDensity rho;
  rho.ee = 0.5 * (1.0 + state.rho3);
  rho.gg = 0.5 * (1.0 - state.rho3);
  rho.eg = 0.5 * std::complex<double>(state.rho1, -state.rho2);
  rho.ge = std::conj(rho.eg);
  return rho;
}

EigenSystem eigen_system(double theta, double A, double B, double tau) {
  check_rates(theta, A, B, tau);
  const double s = std::sin(theta);
  const double e4 = std::exp(-4.0 * A * tau);
  const double rho3 = rho3_of(theta, A, B, tau);
  const double eta = std::sqrt(rho3 * rho3 + e4 * s * s);
  if (eta < kDegenerateEta)
    throw DegenerateStateError("eigen_system: maximally mixed state, mixing angle undefined");
  EigenSystem es;
  es.eta = eta;
  es.lambda_plus = 0.5 * (1.0 + eta);
  es.lambda_minus = 0.5 * (1.0 - eta);
  const double c2 = std::clamp((eta - rho3) / (2.0 * eta), 0.0, 1.0);
  es.theta_tau = 2.0 * std::acos(std::sqrt(c2));
  return es;
}

double cos2_half_mixing(double theta, double A, double B, double tau) {
  check_rates(theta, A, B, tau);
  const double s = std::sin(theta);
  const double e4 = std::exp(-4.0 * A * tau);
  const double rho3 = rho3_of(theta, A, B, tau);
  const double eta = std::sqrt(rho3 * rho3 + e4 * s * s);
  if (eta < kDegenerateEta)
    throw DegenerateStateError("cos2_half_mixing: maximally mixed state");
  return std::clamp((eta - rho3) / (2.0 * eta), 0.0, 1.0);
}

}  // namespace adsgp
