#include "adsgp/model.hpp"

#include <cmath>
#include <sstream>

namespace adsgp {

namespace {

bool finite(double x) { return std::isfinite(x); }

[[noreturn]] void fail(const std::string& what) { throw ValidationError(what); }

}  // namespace

void validate(const AtomParams& atom) {
  if (!finite(atom.omega0) || atom.omega0 <= 0.0) fail("omega0 must be finite and > 0");
  if (!finite(atom.mu) || atom.mu <= 0.0) fail("mu must be finite and > 0");
  if (!finite(atom.theta) || atom.theta < 0.0 || atom.theta > std::acos(-1.0))
    fail("theta must lie in [0, pi]");
}

void validate(const ScenarioConfig& cfg) {
  if (!finite(cfg.accel) || cfg.accel < 0.0) fail("accel must be finite and >= 0");
  if (cfg.spacetime != Spacetime::Minkowski) {
    if (!finite(cfg.ell) || cfg.ell <= 0.0) fail("ell must be finite and > 0");
  }
  if (cfg.spacetime == Spacetime::AdS) {
    if (cfg.zeta != -1 && cfg.zeta != 0 && cfg.zeta != 1)
      fail("zeta must be one of -1, 0, +1");
  }
}

Regime classify_regime(double accel, double ell) {
  if (!finite(accel) || accel < 0.0) fail("accel must be finite and >= 0");
  if (!finite(ell) || ell <= 0.0) fail("ell must be finite and > 0");
  const double a_ell = accel * ell;
  const double tol = kCriticalTol * std::max(1.0, a_ell);
  RegimeKind kind;
  if (std::abs(a_ell - 1.0) <= tol)
    kind = RegimeKind::Critical;
  else if (a_ell < 1.0)
    kind = RegimeKind::Subcritical;
  else
    kind = RegimeKind::Supercritical;
  return Regime{kind, a_ell, tol};
}

DimensionlessGroups nondimensionalize(const AtomParams& atom, const ScenarioConfig& cfg) {
  validate(atom);
  validate(cfg);
  DimensionlessGroups g;
  g.theta = atom.theta;
  g.mu = atom.mu;
  if (cfg.spacetime != Spacetime::Minkowski) {
    g.a_ell = cfg.accel * cfg.ell;
    g.omega0_ell = atom.omega0 * cfg.ell;
  }
  if (cfg.spacetime == Spacetime::AdS) g.zeta = cfg.zeta;
  return g;
}

const char* to_string(Spacetime s) {
  switch (s) {
    case Spacetime::AdS: return "ads";
    case Spacetime::DeSitter: return "ds";
    case Spacetime::Minkowski: return "minkowski";
  }
  return "?";
}

const char* to_string(RegimeKind k) {
  switch (k) {
    case RegimeKind::Subcritical: return "subcritical";
    case RegimeKind::Critical: return "critical";
    case RegimeKind::Supercritical: return "supercritical";
  }
  return "?";
}

const char* boundary_name(int zeta) {
  switch (zeta) {
    case 1: return "dirichlet";
    case 0: return "transparent";
    case -1: return "neumann";
  }
  return "?";
}

Spacetime parse_spacetime(const std::string& name) {
  if (name == "ads") return Spacetime::AdS;
  if (name == "ds") return Spacetime::DeSitter;
  if (name == "minkowski") return Spacetime::Minkowski;
  fail("unknown spacetime '" + name + "' (expected ads, ds or minkowski)");
}

int parse_boundary(const std::string& name) {
  if (name == "dirichlet") return 1;
  if (name == "transparent") return 0;
  if (name == "neumann") return -1;
  fail("unknown boundary '" + name + "' (expected dirichlet, transparent or neumann)");
}

}  // namespace adsgp
