#pragma once

#include <complex>

#include "adsgp/model.hpp"

namespace adsgp {

/// Point in the Poincare patch, conformally flat coordinates (t, x1, x2, z),
/// z > 0. Coordinates are dimensionless numbers; the metric carries the
/// ell^2 prefactor.
struct SpacetimePoint {
  double t = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double z = 1.0;
};

/// A regularized correlation-function value together with the regulator it
/// was computed with.
struct WightmanSample {
  std::complex<double> value;
  double epsilon = 0.0;
};

/// Regulator used by plotting-grade evaluations, in proper-time units
/// (1/omega0 when omega0 = 1). Oracle code owns its own schedule.
inline constexpr double kDefaultEpsilon = 1e-6;

/// Vacuum two-point function of the conformal massless scalar on AdS4,
/// W(x,x') = (1/8 pi^2 ell^2) [1/(v-1) - zeta/(v+1)], with the chordal-type
/// invariant v built from t - t' - i*eps. eps is in coordinate units.
/// Throws SingularityError when eps = 0 and v sits on a pole.
std::complex<double> wightman_global(const SpacetimePoint& x, const SpacetimePoint& xp,
                                     double ell, int zeta, double eps);

/// Elliptic (subcritical, a*ell < 1) worldline in Poincare coordinates.
/// A0 is the free constant of the family (length units, default ell).
/// Only the part of the orbit with cos(sqrt(1/ell^2-a^2) tau) > a*ell lies
/// inside the chart; outside, z would leave the patch and ChartError is
/// thrown.
SpacetimePoint trajectory_subcritical(double tau, double accel, double ell, double A0);
inline SpacetimePoint trajectory_subcritical(double tau, double accel, double ell) {
  return trajectory_subcritical(tau, accel, ell, ell);
}

/// Parabolic (critical, a*ell = 1) worldline: t = z0 tau / ell, z = z0.
SpacetimePoint trajectory_critical(double tau, double ell, double z0 = 1.0);

/// Hyperbolic (supercritical, a*ell > 1) worldline.
SpacetimePoint trajectory_supercritical(double tau, double accel, double ell, double z0 = 1.0);

/// Stationary two-point functions restricted to the three worldline
/// families, as functions of the proper-time lag. eps is a proper-time
/// shift: every form evaluates W(dtau - i*eps).
std::complex<double> wightman_subcritical(double dtau, double accel, double ell, int zeta,
                                          double eps);
std::complex<double> wightman_critical(double dtau, double ell, int zeta, double eps);
std::complex<double> wightman_supercritical(double dtau, double accel, double ell, int zeta,
                                            double eps);

}  // namespace adsgp
