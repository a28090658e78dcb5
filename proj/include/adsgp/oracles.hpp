#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "adsgp/phase.hpp"

namespace adsgp {

/// Knobs of the adaptive bisection quadrature.
struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 10000;
};

enum class Extrapolation { None, Richardson2 };

/// Knobs of the regulator-scheduled numerical Fourier transform. Epsilons
/// are proper-time shifts and must decrease strictly; the window is the
/// integration half-width.
struct FourierSpec {
  std::vector<double> epsilon_schedule{1e-3, 5e-4};
  double window = 200.0;
  Extrapolation extrapolation = Extrapolation::Richardson2;
  QuadratureSpec quad{1e-10, 1e-9, 60000};
  std::vector<double> split_hints;  // known pole locations, pre-split there
};

/// Window = max(200, 40/decay_rate)/omega0 keeps both the slowly decaying
/// critical kernel and exponentially decaying kernels inside the window.
/// decay_rate is in units of omega0 (pass 0 when the kernel only decays
/// algebraically).
FourierSpec make_fourier_spec(double omega0, double decay_rate = 0.0);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

struct ComplexQuadratureResult {
  std::complex<double> value;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

/// Globally adaptive Gauss-Kronrod 7/15 bisection. `initial_points` may
/// list interior break points (poles, feature edges) to pre-split at.
/// Throws ConvergenceError (carrying the best estimate) when the
/// subdivision budget is exhausted.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureSpec& spec,
                                    std::span<const double> initial_points = {});

ComplexQuadratureResult integrate_adaptive_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const QuadratureSpec& spec, std::span<const double> initial_points = {});

/// Brute-force evaluation of the geometric-phase integral over [0, T] by
/// adaptive quadrature of the integrand built from the dynamics module.
/// Independent of the closed-form antiderivative path.
PhaseReport integrate_phase_numeric(const AtomParams& atom, const KossakowskiPair& pair,
                                    double Omega, double T, const QuadratureSpec& spec);
inline PhaseReport integrate_phase_numeric(const AtomParams& atom, const KossakowskiPair& pair,
                                           double Omega, double T) {
  return integrate_phase_numeric(atom, pair, Omega, T, QuadratureSpec{});
}

/// Stationary kernel evaluator: W(dtau - i eps) with eps in proper-time
/// units.
using StationaryKernel = std::function<std::complex<double>(double dtau, double eps)>;

/// One windowed transform per regulator in the schedule (no extrapolation).
std::vector<std::complex<double>> fourier_numeric_schedule(const StationaryKernel& kernel,
                                                           double omega, const FourierSpec& spec);

/// Regulated numerical Fourier transform of a stationary kernel at
/// frequency omega, extrapolated to eps -> 0 per the spec. Refuses kernels
/// that have not decayed at the window edge (WindowError); never call it
/// with the periodic subcritical kernel.
double fourier_numeric(const StationaryKernel& kernel, double omega, const FourierSpec& spec);

}  // namespace adsgp
