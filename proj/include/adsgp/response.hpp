#pragma once

#include "adsgp/model.hpp"

namespace adsgp {

/// Dissipator rates of the Kossakowski matrix, carrying the mu^2 omega0
/// prefactor. Spectral positivity requires A >= |B| >= 0; the ratio
/// R = B/A is defined only for A > 0.
struct KossakowskiPair {
  double A = 0.0;
  double B = 0.0;
  double ratio() const;
};

/// Positive/negative frequency response G(+omega0), G(-omega0).
struct SpectralPair {
  double g_plus = 0.0;
  double g_minus = 0.0;
};

/// Effective temperature seen by the detector. `thermal` is false when the
/// scenario produces no thermal excitation (subcritical/critical AdS,
/// inertial Minkowski).
struct Temperature {
  double value = 0.0;
  bool thermal = false;
};

/// Effective atomic gap after absorbing the level shift; the shift integral
/// is divergent and dropped, so Omega = omega0.
struct EffectiveGap {
  double Omega = 0.0;
};

/// Response spectrum on the critical (parabolic) worldline:
/// G(omega0) = omega0/2pi - zeta sin(2 omega0 ell)/(4 pi ell), G(-omega0) = 0.
SpectralPair fourier_critical(double omega0, double ell, int zeta);

/// Boundary correction factor N_s for the supercritical response.
/// N_s = -(zeta / 2 a omega0 ell^2) sin[(2 omega0 ell / y) asinh(y)],
/// y = sqrt(a^2 ell^2 - 1). Requires a supercritical scenario.
double ns_factor(double omega0, double accel, double ell, int zeta);

/// Dissipator rates for every supported scenario. Subcritical AdS detectors
/// see no excitation at all, so the pair vanishes and the atom evolves
/// unitarily.
KossakowskiPair kossakowski(const AtomParams& atom, const ScenarioConfig& cfg);

/// Effective detector temperature: sqrt(a^2 - 1/ell^2)/2pi above the AdS
/// critical threshold, sqrt(1/ell^2 + a^2)/2pi in de Sitter, zero otherwise.
Temperature temperature(const ScenarioConfig& cfg);

EffectiveGap effective_gap(const AtomParams& atom);

/// Overflow-safe coth for x > 0, evaluated as 1 + 2/expm1(2x).
double coth_positive(double x);

}  // namespace adsgp
