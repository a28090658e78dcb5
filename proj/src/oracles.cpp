#include "adsgp/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

#include "adsgp/dynamics.hpp"

namespace adsgp {

namespace {

constexpr double kPi = std::numbers::pi;

// 15-point Kronrod extension of the 7-point Gauss rule (abscissae and
// weights on [-1, 1]).
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

template <class T>
struct Panel {
  double a, b;
  T value;
  double err;
};

inline double representative(double v) { return v; }
inline double representative(const std::complex<double>& v) { return std::abs(v); }

// Kronrod estimate with QUADPACK-style error scaling.
template <class T, class F>
Panel<T> gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T fv[15];
  fv[7] = f(c);
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  T res_k = kWgk[7] * fv[7];
  for (int i = 0; i < 7; ++i) res_k += kWgk[i] * (fv[i] + fv[14 - i]);
  T res_g = kWg[3] * fv[7];
  for (int j = 0; j < 3; ++j) res_g += kWg[j] * (fv[2 * j + 1] + fv[13 - 2 * j]);
  res_k *= h;
  res_g *= h;

  const T mean = res_k / (b - a);
  double resasc = kWgk[7] * std::abs(fv[7] - mean);
  for (int i = 0; i < 7; ++i)
    resasc += kWgk[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));
  resasc *= h;

  double err = std::abs(res_k - res_g);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  return Panel<T>{a, b, res_k, err};
}

template <class T, class F>
std::tuple<T, double, int> adaptive(const F& f, double a, double b, const QuadratureSpec& spec,
                                    std::span<const double> initial_points) {
  if (!(b > a)) throw ValidationError("integration bounds must satisfy a < b");
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0))
    throw ValidationError("quadrature tolerances must be > 0");

  std::vector<double> pts{a, b};
  for (double p : initial_points)
    if (p > a && p < b) pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto cmp = [](const Panel<T>& l, const Panel<T>& r) { return l.err < r.err; };
  std::priority_queue<Panel<T>, std::vector<Panel<T>>, decltype(cmp)> heap(cmp);

  T total{};
  double total_err = 0.0;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    Panel<T> p = gk15<T>(f, pts[i], pts[i + 1]);
    total += p.value;
    total_err += p.err;
    heap.push(p);
  }

  const double width_floor = 1e-15 * (b - a);
  const auto tol = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };
  int nsub = 0;
  while (total_err > tol() && !heap.empty()) {
    if (nsub >= spec.max_subdivisions)
      throw ConvergenceError("adaptive quadrature: subdivision budget exhausted",
                             representative(total), total_err);
    Panel<T> worst = heap.top();
    heap.pop();
    if (worst.b - worst.a <= width_floor) continue;  // cannot refine further
    const double mid = 0.5 * (worst.a + worst.b);
    Panel<T> left = gk15<T>(f, worst.a, mid);
    Panel<T> right = gk15<T>(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    ++nsub;
  }
  if (total_err > tol())
    throw ConvergenceError("adaptive quadrature: stalled at the panel width floor",
                           representative(total), total_err);
  return {total, total_err, nsub};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureSpec& spec,
                                    std::span<const double> initial_points) {
  auto [value, err, nsub] = adaptive<double>(f, a, b, spec, initial_points);
  return QuadratureResult{value, err, nsub};
}

ComplexQuadratureResult integrate_adaptive_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const QuadratureSpec& spec, std::span<const double> initial_points) {
  auto [value, err, nsub] = adaptive<std::complex<double>>(f, a, b, spec, initial_points);
  return ComplexQuadratureResult{value, err, nsub};
}

PhaseReport integrate_phase_numeric(const AtomParams& atom, const KossakowskiPair& pair,
                                    double Omega, double T, const QuadratureSpec& spec) {
  validate(atom);
  if (!(T >= 0.0) || !std::isfinite(T)) throw ValidationError("T must be finite and >= 0");
  PhaseReport rep;
  rep.method = PhaseMethod::Quadrature;
  rep.T = T;
  rep.groups.theta = atom.theta;
  rep.groups.mu = atom.mu;
  if (T == 0.0) return rep;

  const auto integrand = [&](double tau) {
    return -Omega * cos2_half_mixing(atom.theta, pair.A, pair.B, tau);
  };
  auto [value, err, nsub] = adaptive<double>(integrand, 0.0, T, spec, {});
  (void)err;
  (void)nsub;
  rep.phi = value;
  return rep;
}

FourierSpec make_fourier_spec(double omega0, double decay_rate) {
  if (!(omega0 > 0.0)) throw ValidationError("omega0 must be > 0");
  FourierSpec spec;
  double window = 200.0;
  if (decay_rate > 0.0) window = std::max(window, 40.0 / decay_rate);
  spec.window = window / omega0;
  spec.epsilon_schedule = {1e-3 / omega0, 5e-4 / omega0};
  return spec;
}

std::vector<std::complex<double>> fourier_numeric_schedule(const StationaryKernel& kernel,
                                                           double omega,
                                                           const FourierSpec& spec) {
  if (!(spec.window > 0.0)) throw ValidationError("fourier window must be > 0");
  if (spec.epsilon_schedule.empty())
    throw ValidationError("epsilon schedule must contain at least one regulator");
  for (size_t i = 0; i < spec.epsilon_schedule.size(); ++i) {
    if (!(spec.epsilon_schedule[i] > 0.0))
      throw ValidationError("epsilon schedule entries must be > 0");
    if (i > 0 && !(spec.epsilon_schedule[i] < spec.epsilon_schedule[i - 1]))
      throw ValidationError("epsilon schedule must be strictly decreasing");
  }

  const double L = spec.window;

  // Tail check: the kernel must have decayed at the window edges, otherwise
  // the truncated transform is meaningless (periodic kernels in particular).
  // The scan regulator is widened to the scan resolution so that the "peak"
  // is the kernel envelope, not a 1/eps^2 pole spike.
  constexpr int kScan = 1024;
  const double eps_scan = std::max(spec.epsilon_schedule.back(), 2.0 * L / kScan);
  double peak = 0.0;
  for (int i = 0; i <= kScan; ++i) {
    const double u = -L + 2.0 * L * i / kScan;
    peak = std::max(peak, std::abs(kernel(u, eps_scan)));
  }
  const double edge =
      std::max(std::abs(kernel(-L, eps_scan)), std::abs(kernel(L, eps_scan)));
  if (edge > 1e-3 * peak)
    throw WindowError("fourier_numeric: kernel has not decayed at the window edge");

  // Initial panels: the supplied pole hints plus a uniform grid fine enough
  // that each panel sees at most ~half an oscillation of e^{i omega u}.
  std::vector<double> pts = spec.split_hints;
  const int n_osc = std::max(64, static_cast<int>(std::ceil(2.0 * L * std::abs(omega) / kPi)));
  for (int i = 1; i < n_osc; ++i) pts.push_back(-L + 2.0 * L * i / n_osc);

  std::vector<std::complex<double>> results;
  results.reserve(spec.epsilon_schedule.size());
  for (double eps : spec.epsilon_schedule) {
    const auto f = [&](double u) {
      const std::complex<double> phase(std::cos(omega * u), std::sin(omega * u));
      return phase * kernel(u, eps);
    };
    auto [value, err, nsub] = adaptive<std::complex<double>>(f, -L, L, spec.quad, pts);
    (void)err;
    (void)nsub;
    results.push_back(value);
  }
  return results;
}

double fourier_numeric(const StationaryKernel& kernel, double omega, const FourierSpec& spec) {
  const auto per_eps = fourier_numeric_schedule(kernel, omega, spec);
  if (spec.extrapolation == Extrapolation::None || per_eps.size() < 2)
    return per_eps.back().real();
  // Two-point linear elimination of the O(eps) defect using the last two
  // regulators in the schedule.
  const size_t n = per_eps.size();
  const double e1 = spec.epsilon_schedule[n - 2];
  const double e2 = spec.epsilon_schedule[n - 1];
  const std::complex<double> g =
      (e1 * per_eps[n - 1] - e2 * per_eps[n - 2]) / (e1 - e2);
  return g.real();
}

}  // namespace adsgp
