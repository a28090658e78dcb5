#include "adsgp/correlations.hpp"

#include <cmath>
#include <numbers>

namespace adsgp {

namespace {

using Complex = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kPoleTol = 1e-12;

void check_point(const SpacetimePoint& p) {
  if (!(p.z > 0.0) || !std::isfinite(p.z) || !std::isfinite(p.t) || !std::isfinite(p.x1) ||
      !std::isfinite(p.x2))
    throw ValidationError("spacetime point must be finite with z > 0");
}

void require_regime(double accel, double ell, RegimeKind want, const char* who) {
  const Regime r = classify_regime(accel, ell);
  if (r.kind != want)
    throw RegimeError(std::string(who) + " called with a*ell = " + std::to_string(r.a_ell) +
                      " (" + to_string(r.kind) + ")");
}

void check_eps(double eps) {
  if (!std::isfinite(eps) || eps < 0.0) throw ValidationError("eps must be finite and >= 0");
}

}  // namespace

std::complex<double> wightman_global(const SpacetimePoint& x, const SpacetimePoint& xp,
                                     double ell, int zeta, double eps) {
  check_point(x);
  check_point(xp);
  check_eps(eps);
  if (!(ell > 0.0)) throw ValidationError("ell must be > 0");
  if (zeta != -1 && zeta != 0 && zeta != 1) throw ValidationError("zeta must be -1, 0 or +1");

  const double d1 = x.x1 - xp.x1;
  const double d2 = x.x2 - xp.x2;
  const double dperp2 = d1 * d1 + d2 * d2;
  const Complex dte(x.t - xp.t, -eps);
  const double zz2 = 2.0 * x.z * xp.z;

  // v -+ 1 assembled from squared differences/sums to avoid cancellation.
  const double dz = x.z - xp.z;
  const double sz = x.z + xp.z;
  const Complex vm1 = (dz * dz + dperp2 - dte * dte) / zz2;
  const Complex vp1 = (sz * sz + dperp2 - dte * dte) / zz2;

  if (eps == 0.0) {
    if (std::abs(vm1) < kPoleTol)
      throw SingularityError("wightman_global: v = 1 (light cone image) with eps = 0");
    if (zeta != 0 && std::abs(vp1) < kPoleTol)
      throw SingularityError("wightman_global: v = -1 (boundary image) with eps = 0");
  }

  const double pref = 1.0 / (8.0 * kPi * kPi * ell * ell);
  Complex w = pref / vm1;
  if (zeta != 0) w -= (static_cast<double>(zeta) * pref) / vp1;
  return w;
}

SpacetimePoint trajectory_subcritical(double tau, double accel, double ell, double A0) {
  require_regime(accel, ell, RegimeKind::Subcritical, "trajectory_subcritical");
  if (!std::isfinite(tau)) throw ValidationError("tau must be finite");
  if (!std::isfinite(A0) || A0 <= 0.0) throw ValidationError("A0 must be finite and > 0");

  const double a_ell = accel * ell;
  const double drift = std::sqrt((1.0 - a_ell) * (1.0 + a_ell)) / ell;  // sqrt(1/l^2 - a^2)
  const double c = std::cos(drift * tau);
  const double s = std::sin(drift * tau);
  const double denom = c - a_ell;
  if (denom <= kPoleTol)
    throw ChartError("trajectory_subcritical: orbit outside the Poincare chart "
                     "(requires cos(drift*tau) > a*ell)");

  const double one_m = (1.0 - a_ell) * (1.0 + a_ell);
  SpacetimePoint p;
  p.t = A0 * std::sqrt(one_m) * s / (ell * denom);
  p.z = A0 * one_m / (ell * denom);
  return p;
}

SpacetimePoint trajectory_critical(double tau, double ell, double z0) {
  if (!(ell > 0.0)) throw ValidationError("ell must be > 0");
  if (!std::isfinite(tau)) throw ValidationError("tau must be finite");
  if (!(z0 > 0.0)) throw ValidationError("z0 must be > 0");
  SpacetimePoint p;
  p.t = z0 * tau / ell;
  p.z = z0;
  return p;
}

SpacetimePoint trajectory_supercritical(double tau, double accel, double ell, double z0) {
  require_regime(accel, ell, RegimeKind::Supercritical, "trajectory_supercritical");
  if (!std::isfinite(tau)) throw ValidationError("tau must be finite");
  if (!(z0 > 0.0)) throw ValidationError("z0 must be > 0");
  const double a_ell = accel * ell;
  const double omega_s = std::sqrt((a_ell - 1.0) * (a_ell + 1.0)) / ell;  // sqrt(a^2 - 1/l^2)
  const double grow = std::exp(omega_s * tau);
  SpacetimePoint p;
  p.t = accel * z0 / omega_s * grow;
  p.z = z0 * grow;
  return p;
}

std::complex<double> wightman_subcritical(double dtau, double accel, double ell, int zeta,
                                          double eps) {
  require_regime(accel, ell, RegimeKind::Subcritical, "wightman_subcritical");
  check_eps(eps);
  if (zeta != -1 && zeta != 0 && zeta != 1) throw ValidationError("zeta must be -1, 0 or +1");

  const double a_ell = accel * ell;
  const double one_m = (1.0 - a_ell) * (1.0 + a_ell);
  const double drift = std::sqrt(one_m) / ell;
  // Half-angle of the cosine argument; cos(2h)-1 and cos(2h)+1-2(al)^2 are
  // evaluated through sin/cos of h for stability near the poles.
  const Complex h = 0.5 * drift * Complex(dtau, -eps);
  const Complex sh = std::sin(h);
  const Complex ch = std::cos(h);
  const Complex bulk_den = -2.0 * sh * sh;
  const Complex image_den = 2.0 * (ch - a_ell) * (ch + a_ell);

  if (eps == 0.0) {
    if (std::abs(bulk_den) < kPoleTol)
      throw SingularityError("wightman_subcritical: pole at dtau = 0 (mod period) with eps = 0");
    if (zeta != 0 && std::abs(image_den) < kPoleTol)
      throw SingularityError("wightman_subcritical: boundary-image pole with eps = 0");
  }

  const double pref = one_m / (8.0 * kPi * kPi * ell * ell);
  Complex w = pref / bulk_den;
  if (zeta != 0) w -= static_cast<double>(zeta) * pref / image_den;
  return w;
}

std::complex<double> wightman_critical(double dtau, double ell, int zeta, double eps) {
  if (!(ell > 0.0)) throw ValidationError("ell must be > 0");
  check_eps(eps);
  if (zeta != -1 && zeta != 0 && zeta != 1) throw ValidationError("zeta must be -1, 0 or +1");
  if (!std::isfinite(dtau)) throw ValidationError("dtau must be finite");

  const Complex ue(dtau, -eps);
  const Complex bulk_den = ue * ue;
  const Complex image_den = (ue - 2.0 * ell) * (ue + 2.0 * ell);
  const double scale2 = std::max(ell, std::abs(dtau));

  if (eps == 0.0) {
    if (std::abs(bulk_den) < kPoleTol * scale2 * scale2)
      throw SingularityError("wightman_critical: pole at dtau = 0 with eps = 0");
    if (zeta != 0 && std::abs(image_den) < kPoleTol * scale2 * scale2)
      throw SingularityError("wightman_critical: pole at dtau = +-2 ell with eps = 0");
  }

  const double pref = -1.0 / (4.0 * kPi * kPi);
  Complex w = pref / bulk_den;
  if (zeta != 0) w -= static_cast<double>(zeta) * pref / image_den;
  return w;
}

std::complex<double> wightman_supercritical(double dtau, double accel, double ell, int zeta,
                                            double eps) {
  require_regime(accel, ell, RegimeKind::Supercritical, "wightman_supercritical");
  check_eps(eps);
  if (zeta != -1 && zeta != 0 && zeta != 1) throw ValidationError("zeta must be -1, 0 or +1");

  const double a_ell = accel * ell;
  const double y = std::sqrt((a_ell - 1.0) * (a_ell + 1.0));  // sqrt(a^2 l^2 - 1)
  const double omega_s = y / ell;
  const double A_tilde = std::asinh(y);

  // w = omega_s (dtau - i eps)/2. Both denominators are even in w, so fold
  // onto Re(w) >= 0 and use 1/sinh^2(w) = 4 e^{-2w}/(1-e^{-2w})^2, which
  // never overflows for large lags.
  Complex w = 0.5 * omega_s * Complex(dtau, -eps);
  if (w.real() < 0.0) w = -w;
  const Complex em = std::exp(-2.0 * w);
  const Complex bulk_den_scaled = (1.0 - em) * (1.0 - em);                // / (4 em)
  const Complex img_a = 1.0 - em * std::exp(-2.0 * A_tilde);
  const Complex img_b = 1.0 - em * std::exp(2.0 * A_tilde);

  if (eps == 0.0) {
    if (std::abs(1.0 - em) < kPoleTol)
      throw SingularityError("wightman_supercritical: pole at dtau = 0 with eps = 0");
    if (zeta != 0 && (std::abs(img_a) < kPoleTol || std::abs(img_b) < kPoleTol))
      throw SingularityError("wightman_supercritical: boundary-image pole with eps = 0");
  }

  const double pref = -(omega_s * omega_s) / (16.0 * kPi * kPi);
  Complex val = pref * 4.0 * em / bulk_den_scaled;
  if (zeta != 0) val -= static_cast<double>(zeta) * pref * 4.0 * em / (img_a * img_b);
  return val;
}

}  // namespace adsgp
