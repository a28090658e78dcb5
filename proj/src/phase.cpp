#include "adsgp/phase.hpp"

#include <cmath>
#include <numbers>

#include "adsgp/oracles.hpp"

namespace adsgp {

namespace {

constexpr double kPi = std::numbers::pi;

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

void check_f_aux_args(double A, double R, double Q, double omega0) {
  if (!(A > 0.0)) throw ValidationError("f_aux requires A > 0");
  if (!(omega0 > 0.0)) throw ValidationError("f_aux requires omega0 > 0");
  if (!(R > 0.0) || R > 1.0) throw ValidationError("f_aux requires R in (0, 1]");
  const double tol = 1e-12 * (1.0 + std::abs(R));
  if (std::abs(Q) < tol)
    throw DegenerateQError("f_aux: Q = R + cos(theta) is numerically zero");
  // |Q| -> 1 + R is the excited-state endpoint sin(theta) -> 0, where the
  // first log argument vanishes at phi = 0.
  if (std::abs(Q) > 1.0 + R - tol)
    throw DegenerateQError("f_aux: |Q| at the sin(theta) = 0 degeneracy");
}

double period(const AtomParams& atom) { return 2.0 * kPi / atom.omega0; }

}  // namespace

double phase_perturbative_from_pair(const AtomParams& atom, const KossakowskiPair& pair) {
  validate(atom);
  const double c = std::cos(atom.theta);
  const double s2 = std::sin(atom.theta) * std::sin(atom.theta);
  return -kPi * (1.0 - c) -
         (2.0 * kPi * kPi / atom.omega0) * s2 * (2.0 * pair.B + pair.A * c);
}

const char* to_string(PhaseMethod m) {
  switch (m) {
    case PhaseMethod::ExactF: return "exact-f";
    case PhaseMethod::Quadrature: return "quadrature";
    case PhaseMethod::PerturbativeMu2: return "perturbative-mu2";
    case PhaseMethod::AnalyticLimit: return "analytic-limit";
  }
  return "?";
}

const char* to_string(AsymptoticBranch b) {
  switch (b) {
    case AsymptoticBranch::CriticalSmallRadius: return "critical-small-radius";
    case AsymptoticBranch::SmallRadiusNearCritical: return "small-radius-near-critical";
    case AsymptoticBranch::SmallRadiusHighAcceleration: return "small-radius-high-acceleration";
    case AsymptoticBranch::LargeRadiusOscillatory: return "large-radius-oscillatory";
    case AsymptoticBranch::LargeRadiusThermal: return "large-radius-thermal";
  }
  return "?";
}

double f_aux_s(double phi, double A, double R, double Q, double omega0) {
  check_f_aux_args(A, R, Q, omega0);
  const double b = 4.0 * A / omega0;
  const double C = 1.0 - Q * Q - R * R;
  const double inv_e = std::exp(-b * phi);
  // S = e^{b phi} sqrt(R^2 + C e^{-b phi} + Q^2 e^{-2 b phi}); the factored
  // form stays finite long after e^{2 b phi} would overflow.
  const double sbar = std::sqrt(R * R + C * inv_e + Q * Q * inv_e * inv_e);
  return std::exp(b * phi) * sbar;
}

double f_aux(double phi, double A, double R, double Q, double omega0) {
  check_f_aux_args(A, R, Q, omega0);
  if (!(phi >= 0.0)) throw ValidationError("f_aux requires phi >= 0");
  const double b = 4.0 * A / omega0;
  const double C = 1.0 - Q * Q - R * R;
  const double inv_e = std::exp(-b * phi);
  const double sbar = std::sqrt(R * R + C * inv_e + Q * Q * inv_e * inv_e);

  // F(phi) = -phi/2 - (1/2b) ln g1 - (1/2b) sgn(Q) ln g2 with the e^{b phi}
  // growth of g1 split off so that ln g1 = b phi + ln(reduced).
  const double g1_reduced = (C * inv_e + 2.0 * R * R) / (2.0 * R) + sbar;
  const double g2 = C + 2.0 * Q * Q * inv_e + 2.0 * std::abs(Q) * sbar;
  if (!(g1_reduced > 0.0) || !(g2 > 0.0))
    throw Error("f_aux: non-positive log argument (internal inconsistency)");

  return -phi - (1.0 / (2.0 * b)) * std::log(g1_reduced) -
         (sgn(Q) / (2.0 * b)) * std::log(g2);
}

double f_aux_delta(double phi, double A, double R, double Q, double omega0) {
  check_f_aux_args(A, R, Q, omega0);
  if (!(phi >= 0.0)) throw ValidationError("f_aux_delta requires phi >= 0");
  const double b = 4.0 * A / omega0;
  const double em1 = std::expm1(-b * phi);  // e^{-b phi} - 1

  // Once the decoherence factor has moved far from 1 the plain difference
  // of antiderivatives is safe (the log prefactor 1/2b is O(phi) at most);
  // the delta form below is only needed where e^{-b phi} stays near 1 and
  // the two F values agree to many digits.
  if (em1 <= -0.5) return f_aux(phi, A, R, Q, omega0) - f_aux(0.0, A, R, Q, omega0);

  const double C = 1.0 - Q * Q - R * R;
  const double inv_e = 1.0 + em1;

  // Sbar(0) = 1 exactly, so Sbar(phi)^2 - 1 factors through em1 and the
  // change of each log argument is formed without subtracting O(1) values.
  const double ds2 = em1 * (C + Q * Q * (inv_e + 1.0));
  const double sbar = std::sqrt(std::max(0.0, 1.0 + ds2));
  const double dsbar = ds2 / (1.0 + sbar);

  const double g1_0 = (1.0 + R - Q) * (1.0 + R + Q) / (2.0 * R);
  const double dg1 = (C * em1) / (2.0 * R) + dsbar;
  const double g2_0 = (1.0 + std::abs(Q) - R) * (1.0 + std::abs(Q) + R);
  const double dg2 = 2.0 * Q * Q * em1 + 2.0 * std::abs(Q) * dsbar;
  if (!(g1_0 > 0.0) || !(g2_0 > 0.0))
    throw Error("f_aux_delta: non-positive log argument (internal inconsistency)");
  // The ratios reach -1 only when a removable degeneracy (R -> 1 together
  // with sin(theta) -> 0) erases the residual in double precision.
  if (!(1.0 + dg1 / g1_0 > 0.0) || !(1.0 + dg2 / g2_0 > 0.0))
    throw DegenerateQError("f_aux_delta: log argument lost to rounding near a degeneracy");

  return -phi -
         (std::log1p(dg1 / g1_0) + sgn(Q) * std::log1p(dg2 / g2_0)) / (2.0 * b);
}

PhaseReport geometric_phase_exact(const AtomParams& atom, const KossakowskiPair& pair,
                                  double Omega, double T) {
  validate(atom);
  if (!std::isfinite(Omega) || !(Omega > 0.0)) throw ValidationError("Omega must be > 0");
  if (!std::isfinite(T) || T < 0.0) throw ValidationError("T must be finite and >= 0");
  if (!(pair.A >= 0.0) || std::abs(pair.B) > pair.A)
    throw ValidationError("dissipator pair must satisfy A >= |B| >= 0");

  PhaseReport rep;
  rep.T = T;
  rep.groups.theta = atom.theta;
  rep.groups.mu = atom.mu;

  const double c = std::cos(atom.theta);
  if (pair.A == 0.0) {
    rep.phi = -0.5 * Omega * T * (1.0 - c);
    rep.method = PhaseMethod::AnalyticLimit;
    return rep;
  }

  const double R = pair.B / pair.A;
  const double Q = R + c;
  const double q_tol = 1e-12 * (1.0 + std::abs(R));
  if (std::abs(Q) < q_tol || std::abs(Q) > 1.0 + R - q_tol) {
    PhaseReport quad = integrate_phase_numeric(atom, pair, Omega, T, QuadratureSpec{});
    quad.groups = rep.groups;
    return quad;
  }

  try {
    rep.phi = (Omega / atom.omega0) * f_aux_delta(atom.omega0 * T, pair.A, R, Q, atom.omega0);
    rep.method = PhaseMethod::ExactF;
  } catch (const DegenerateQError&) {
    PhaseReport quad = integrate_phase_numeric(atom, pair, Omega, T, QuadratureSpec{});
    quad.groups = rep.groups;
    return quad;
  }
  return rep;
}

PhaseReport geometric_phase(const AtomParams& atom, const ScenarioConfig& cfg,
                            std::optional<double> T) {
  const KossakowskiPair pair = kossakowski(atom, cfg);
  const double horizon = T.value_or(period(atom));
  PhaseReport rep = geometric_phase_exact(atom, pair, atom.omega0, horizon);
  rep.groups = nondimensionalize(atom, cfg);
  if (cfg.spacetime == Spacetime::AdS) rep.regime = classify_regime(cfg.accel, cfg.ell);
  return rep;
}

double minkowski_inertial_phase(const AtomParams& atom) {
  validate(atom);
  const double c = std::cos(atom.theta);
  const double s2 = std::sin(atom.theta) * std::sin(atom.theta);
  return -kPi * (1.0 - c) - (atom.mu * atom.mu * kPi / 4.0) * (2.0 + c) * s2;
}

PhaseReport phase_perturbative(const AtomParams& atom, const ScenarioConfig& cfg) {
  validate(atom);
  validate(cfg);
  PhaseReport rep;
  rep.method = PhaseMethod::PerturbativeMu2;
  rep.T = period(atom);
  rep.groups = nondimensionalize(atom, cfg);

  const double c = std::cos(atom.theta);
  const double s2 = std::sin(atom.theta) * std::sin(atom.theta);
  const double mu2 = atom.mu * atom.mu;

  switch (cfg.spacetime) {
    case Spacetime::Minkowski:
      if (cfg.accel != 0.0)
        throw ValidationError("accelerated Minkowski detectors are not supported");
      rep.phi = minkowski_inertial_phase(atom);
      return rep;
    case Spacetime::DeSitter: {
      const double a_ell = cfg.accel * cfg.ell;
      const double x = 2.0 * kPi * atom.omega0 * cfg.ell / std::sqrt(1.0 + a_ell * a_ell);
      const double planck = 1.0 / std::expm1(x);
      rep.phi = -kPi * (1.0 - c) -
                (mu2 * kPi / 4.0) * s2 * (2.0 + c + 2.0 * c * planck);
      return rep;
    }
    case Spacetime::AdS: break;
  }

  const Regime r = classify_regime(cfg.accel, cfg.ell);
  rep.regime = r;
  switch (r.kind) {
    case RegimeKind::Subcritical:
      rep.phi = -kPi * (1.0 - c);
      return rep;
    case RegimeKind::Critical: {
      const double u = atom.omega0 * cfg.ell;
      const double factor = 1.0 - cfg.zeta * std::sin(2.0 * u) / (2.0 * u);
      rep.phi = -kPi * (1.0 - c) - (mu2 * kPi / 4.0) * s2 * (2.0 + c) * factor;
      return rep;
    }
    case RegimeKind::Supercritical: {
      const double ns = ns_factor(atom.omega0, cfg.accel, cfg.ell, cfg.zeta);
      const double y = std::sqrt((r.a_ell - 1.0) * (r.a_ell + 1.0));
      const double coth = coth_positive(kPi * atom.omega0 * cfg.ell / y);
      rep.phi = -kPi * (1.0 - c) -
                (mu2 * kPi / 4.0) * (1.0 + ns) * s2 * (2.0 + c * coth);
      return rep;
    }
  }
  throw Error("phase_perturbative: unreachable");
}

CorrectionReport correction(const AtomParams& atom, const ScenarioConfig& cfg) {
  validate(atom);
  validate(cfg);
  CorrectionReport rep;
  rep.baseline = minkowski_inertial_phase(atom);

  const double c = std::cos(atom.theta);
  const double s2 = std::sin(atom.theta) * std::sin(atom.theta);
  const double mu2 = atom.mu * atom.mu;

  double delta = 0.0;
  switch (cfg.spacetime) {
    case Spacetime::Minkowski:
      if (cfg.accel != 0.0)
        throw ValidationError("accelerated Minkowski detectors are not supported");
      delta = 0.0;
      break;
    case Spacetime::DeSitter: {
      const double a_ell = cfg.accel * cfg.ell;
      const double x = 2.0 * kPi * atom.omega0 * cfg.ell / std::sqrt(1.0 + a_ell * a_ell);
      delta = -(mu2 * kPi / 2.0) * s2 * c / std::expm1(x);
      break;
    }
    case Spacetime::AdS: {
      const Regime r = classify_regime(cfg.accel, cfg.ell);
      switch (r.kind) {
        case RegimeKind::Subcritical:
          delta = (mu2 * kPi / 4.0) * (2.0 + c) * s2;
          break;
        case RegimeKind::Critical: {
          const double u = atom.omega0 * cfg.ell;
          delta = cfg.zeta * (mu2 * kPi / (8.0 * u)) * std::sin(2.0 * u) * (2.0 + c) * s2;
          break;
        }
        case RegimeKind::Supercritical: {
          const double ns = ns_factor(atom.omega0, cfg.accel, cfg.ell, cfg.zeta);
          const double y = std::sqrt((r.a_ell - 1.0) * (r.a_ell + 1.0));
          const double coth = coth_positive(kPi * atom.omega0 * cfg.ell / y);
          delta = -(mu2 * kPi / 4.0) * s2 * ((2.0 + c * coth) * ns + c * (coth - 1.0));
          break;
        }
      }
      break;
    }
  }
  rep.delta = delta;
  rep.delta_over_mu2 = delta / mu2;
  return rep;
}

AsymptoticCorrection correction_asymptotic(const AtomParams& atom, const ScenarioConfig& cfg) {
  validate(atom);
  validate(cfg);
  if (cfg.spacetime != Spacetime::AdS)
    throw RegimeError("correction_asymptotic applies to AdS scenarios only");

  const Regime r = classify_regime(cfg.accel, cfg.ell);
  const double u = atom.omega0 * cfg.ell;
  const double c = std::cos(atom.theta);
  const double s2 = std::sin(atom.theta) * std::sin(atom.theta);
  const double mu2 = atom.mu * atom.mu;
  const double zeta = cfg.zeta;

  AsymptoticCorrection out;
  out.correction.baseline = minkowski_inertial_phase(atom);

  if (r.kind == RegimeKind::Subcritical)
    throw RegimeError("correction_asymptotic: the subcritical correction is already exact");

  double delta = 0.0;
  if (r.kind == RegimeKind::Critical) {
    if (!(u <= 0.1))
      throw NoAsymptoteError("critical expansion requires omega0*ell <= 0.1");
    delta = zeta * (mu2 * kPi / 4.0) * (2.0 + c) * s2 * (1.0 - (2.0 / 3.0) * u * u);
    out.branch = AsymptoticBranch::CriticalSmallRadius;
  } else {
    const double a_ell = r.a_ell;
    const double y = std::sqrt((a_ell - 1.0) * (a_ell + 1.0));
    if (u <= 0.1 && y < 1.0 && u / y <= 0.1) {
      delta = -(mu2 * kPi * s2 / 4.0) * (y * (1.0 - zeta) * c / (u * kPi) - 2.0 * zeta - c);
      out.branch = AsymptoticBranch::SmallRadiusNearCritical;
    } else if (u <= 0.1 && y >= 10.0) {
      delta = -(mu2 * kPi * s2 * c / 4.0) *
              (a_ell / (kPi * u) - 1.0 - zeta * std::log(a_ell) / (kPi * a_ell * u));
      out.branch = AsymptoticBranch::SmallRadiusHighAcceleration;
    } else if (u >= 10.0 && y < 1.0) {
      delta = (mu2 * kPi * s2 / 4.0) *
              (zeta * (2.0 + c) / (2.0 * u) * std::sin(u * (7.0 - a_ell * a_ell) / 3.0) -
               2.0 * c * std::exp(-2.0 * kPi * u / y));
      out.branch = AsymptoticBranch::LargeRadiusOscillatory;
    } else if (u >= 10.0 && y / u >= 10.0) {
      delta = -(mu2 * kPi * s2 * c / 2.0) / std::expm1(2.0 * kPi * atom.omega0 / cfg.accel);
      out.branch = AsymptoticBranch::LargeRadiusThermal;
    } else {
      throw NoAsymptoteError("no asymptotic expansion applies to these parameters");
    }
  }

  out.correction.delta = delta;
  out.correction.delta_over_mu2 = delta / mu2;
  return out;
}

}  // namespace adsgp
