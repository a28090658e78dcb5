#pragma once

#include <complex>

#include "adsgp/model.hpp"

namespace adsgp {

/// Bloch vector of the reduced atomic state at proper time tau.
struct BlochState {
  double rho1 = 0.0;
  double rho2 = 0.0;
  double rho3 = 0.0;
  double tau = 0.0;
};

/// 2x2 density matrix in the {|+>, |->} basis. Hermitian with unit trace by
/// construction.
struct AtomDensity {
  std::complex<double> ee;  // <+|rho|+>
  std::complex<double> eg;  // <+|rho|->
  std::complex<double> ge;  // <-|rho|+>
  std::complex<double> gg;  // <-|rho|->
};

/// Eigen-decomposition of the reduced state: lambda_pm = (1 +- eta)/2 and
/// the mixing angle theta_tau of the eigenvector that carries the phase.
struct EigenSystem {
  double lambda_plus = 1.0;
  double lambda_minus = 0.0;
  double eta = 1.0;
  double theta_tau = 0.0;
};

/// Closed-form solution of the Lindblad dynamics for the initial pure state
/// with weight angle theta. A and B are the dissipator rates (A >= |B|),
/// Omega the effective gap. The A -> 0 limit of rho3 is taken analytically.
BlochState bloch_evolve(double theta, double A, double B, double Omega, double tau);

AtomDensity density_matrix(const BlochState& state);

/// Eigenvalues and mixing angle at proper time tau. Throws
/// DegenerateStateError when the state is maximally mixed (eta = 0).
EigenSystem eigen_system(double theta, double A, double B, double tau);

/// cos^2(theta_tau / 2), the ingredient of the geometric-phase integrand.
double cos2_half_mixing(double theta, double A, double B, double tau);

}  // namespace adsgp
