#pragma once

#include <optional>
#include <string>

#include "adsgp/errors.hpp"

namespace adsgp {

enum class Spacetime { AdS, DeSitter, Minkowski };

/// Boundary condition imposed on the field at the AdS conformal boundary.
/// The numeric value is the parameter zeta entering the image term of the
/// two-point function.
enum class Boundary : int { Neumann = -1, Transparent = 0, Dirichlet = 1 };

enum class RegimeKind { Subcritical, Critical, Supercritical };

/// Two-level atom: energy gap omega0 > 0, dimensionless coupling mu > 0
/// (weak coupling intended, mu << 1), and the initial-state weight angle
/// theta in [0, pi]. The initial state is cos(theta/2)|+> + sin(theta/2)|->.
struct AtomParams {
  double omega0 = 1.0;
  double mu = 0.1;
  double theta = 0.0;
};

/// Background selection. `ell` is the curvature radius (AdS or dS; unused
/// for Minkowski), `accel` the magnitude of the proper acceleration, and
/// `zeta` the AdS boundary parameter (-1, 0 or +1; ignored elsewhere).
struct ScenarioConfig {
  Spacetime spacetime = Spacetime::Minkowski;
  double ell = 0.0;
  double accel = 0.0;
  int zeta = 0;
};

/// Acceleration regime of an AdS worldline, classified by the product
/// a*ell against 1. Carries the value and the tolerance used.
struct Regime {
  RegimeKind kind;
  double a_ell;
  double tol;
};

/// The paper-level results depend only on these combinations. Entries that
/// do not exist for a given background are absent (Minkowski has no radius,
/// de Sitter has no boundary parameter).
struct DimensionlessGroups {
  std::optional<double> a_ell;
  std::optional<double> omega0_ell;
  double theta = 0.0;
  double mu = 0.0;
  std::optional<int> zeta;
};

/// Relative half-width of the critical band around a*ell = 1. The
/// supercritical formulas reduce continuously to the critical ones, so the
/// classification only selects a code branch, never a discontinuity.
inline constexpr double kCriticalTol = 1e-12;

void validate(const AtomParams& atom);
void validate(const ScenarioConfig& cfg);

/// Classify an AdS constant-acceleration worldline by a*ell.
Regime classify_regime(double accel, double ell);

DimensionlessGroups nondimensionalize(const AtomParams& atom, const ScenarioConfig& cfg);

const char* to_string(Spacetime s);
const char* to_string(RegimeKind k);
const char* boundary_name(int zeta);

/// Parse "ads"/"ds"/"minkowski" (case-sensitive). Throws ValidationError.
Spacetime parse_spacetime(const std::string& name);
/// Parse "dirichlet"/"transparent"/"neumann" to the zeta value.
int parse_boundary(const std::string& name);

}  // namespace adsgp
