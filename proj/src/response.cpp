#include "adsgp/response.hpp"

#include <cmath>
#include <numbers>

namespace adsgp {

namespace {
constexpr double kPi = std::numbers::pi;
}

double KossakowskiPair::ratio() const {
  if (!(A > 0.0)) throw ValidationError("KossakowskiPair::ratio requires A > 0");
  return B / A;
}

double coth_positive(double x) {
  if (!(x > 0.0)) throw ValidationError("coth_positive requires x > 0");
  const double e = std::expm1(2.0 * x);
  if (std::isinf(e)) return 1.0;
  return 1.0 + 2.0 / e;
}

SpectralPair fourier_critical(double omega0, double ell, int zeta) {
  if (!(omega0 > 0.0)) throw ValidationError("omega0 must be > 0");
  if (!(ell > 0.0)) throw ValidationError("ell must be > 0");
  if (zeta != -1 && zeta != 0 && zeta != 1) throw ValidationError("zeta must be -1, 0 or +1");
  SpectralPair g;
  g.g_plus = omega0 / (2.0 * kPi);
  if (zeta != 0)
    g.g_plus -= static_cast<double>(zeta) * std::sin(2.0 * omega0 * ell) / (4.0 * kPi * ell);
  g.g_minus = 0.0;
  return g;
}

double ns_factor(double omega0, double accel, double ell, int zeta) {
  if (!(omega0 > 0.0)) throw ValidationError("omega0 must be > 0");
  const Regime r = classify_regime(accel, ell);
  if (r.kind != RegimeKind::Supercritical)
    throw RegimeError("ns_factor requires a supercritical scenario (a*ell > 1)");
  if (zeta == 0) return 0.0;
  const double a_ell = r.a_ell;
  const double y = std::sqrt((a_ell - 1.0) * (a_ell + 1.0));
  const double arg = (2.0 * omega0 * ell / y) * std::asinh(y);
  return -static_cast<double>(zeta) * std::sin(arg) / (2.0 * accel * omega0 * ell * ell);
}

KossakowskiPair kossakowski(const AtomParams& atom, const ScenarioConfig& cfg) {
  validate(atom);
  validate(cfg);
  const double pref = atom.mu * atom.mu * atom.omega0 / (8.0 * kPi);
  KossakowskiPair p;

  switch (cfg.spacetime) {
    case Spacetime::Minkowski: {
      if (cfg.accel != 0.0)
        throw ValidationError("accelerated Minkowski detectors are not supported; "
                              "only the inertial case is implemented");
      p.A = p.B = pref;
      return p;
    }
    case Spacetime::DeSitter: {
      // Thermal pair at the temperature seen by a uniformly accelerated dS
      // detector; detailed balance fixes A/B = coth(omega0 / 2 T).
      const double a_ell = cfg.accel * cfg.ell;
      const double x = kPi * atom.omega0 * cfg.ell / std::sqrt(1.0 + a_ell * a_ell);
      p.A = pref * coth_positive(x);
      p.B = pref;
      return p;
    }
    case Spacetime::AdS: break;
  }

  const Regime r = classify_regime(cfg.accel, cfg.ell);
  switch (r.kind) {
    case RegimeKind::Subcritical:
      // No excitation on elliptic orbits; the atom evolves as if isolated.
      p.A = p.B = 0.0;
      return p;
    case RegimeKind::Critical: {
      const double u = atom.omega0 * cfg.ell;
      double factor = 1.0;
      if (cfg.zeta != 0)
        factor -= static_cast<double>(cfg.zeta) * std::sin(2.0 * u) / (2.0 * u);
      p.A = p.B = pref * factor;
      return p;
    }
    case RegimeKind::Supercritical: {
      const double ns = ns_factor(atom.omega0, cfg.accel, cfg.ell, cfg.zeta);
      const double base = pref * (1.0 + ns);
      if (!(base > 0.0))
        throw PositivityError("kossakowski: 1 + N_s <= 0, spectral density not positive");
      const double y = std::sqrt((r.a_ell - 1.0) * (r.a_ell + 1.0));
      const double x = kPi * atom.omega0 * cfg.ell / y;
      p.A = base * coth_positive(x);
      p.B = base;
      return p;
    }
  }
  throw Error("kossakowski: unreachable");
}

Temperature temperature(const ScenarioConfig& cfg) {
  validate(cfg);
  Temperature t;
  switch (cfg.spacetime) {
    case Spacetime::Minkowski:
      return t;
    case Spacetime::DeSitter: {
      const double inv_l = 1.0 / cfg.ell;
      t.value = std::hypot(inv_l, cfg.accel) / (2.0 * kPi);
      t.thermal = true;
      return t;
    }
    case Spacetime::AdS: {
      const Regime r = classify_regime(cfg.accel, cfg.ell);
      if (r.kind == RegimeKind::Supercritical) {
        const double y = std::sqrt((r.a_ell - 1.0) * (r.a_ell + 1.0));
        t.value = y / cfg.ell / (2.0 * kPi);
        t.thermal = true;
      }
      return t;
    }
  }
  throw Error("temperature: unreachable");
}

EffectiveGap effective_gap(const AtomParams& atom) {
  validate(atom);
  return EffectiveGap{atom.omega0};
}

}  // namespace adsgp
