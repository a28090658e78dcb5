#pragma once

#include <stdexcept>
#include <string>

namespace adsgp {

/// Base class for all library errors. Every subclass carries a short kind
/// tag so the CLI can print typed messages without RTTI games.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
  virtual const char* kind() const noexcept { return "error"; }
};

/// Bad or inconsistent input values (negative rates, theta out of range, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "validation error"; }
};

/// An operation was called outside the acceleration regime it implements.
class RegimeError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "regime error"; }
};

/// Unregularized evaluation landed on (or next to) a pole of a correlation
/// function. Callers must shift the regulator or move the sample point.
class SingularityError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "singularity error"; }
};

/// The requested proper time lies outside the Poincare coordinate chart of
/// the worldline (the orbit crosses z = infinity and re-enters elsewhere).
class ChartError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "chart error"; }
};

/// The reduced state is maximally mixed; the distinguished eigenvector (and
/// with it the mixing angle) is undefined.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "degenerate state error"; }
};

/// The closed-form antiderivative is ill-conditioned because Q = R + cos(theta)
/// is numerically zero; callers fall back to quadrature.
class DegenerateQError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "degenerate Q error"; }
};

/// A spectral density came out non-positive where positivity is required.
class PositivityError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "positivity error"; }
};

/// No asymptotic expansion applies to the supplied parameters.
class NoAsymptoteError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "no asymptote error"; }
};

/// The integration window truncates a kernel that has not decayed yet.
class WindowError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "window error"; }
};

/// Adaptive quadrature ran out of subdivisions. Carries the best estimate
/// reached and its error bound so callers can decide what to do with it.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, double estimate, double error_estimate)
      : Error(msg), estimate(estimate), error_estimate(error_estimate) {}
  const char* kind() const noexcept override { return "convergence error"; }
  double estimate;
  double error_estimate;
};

}  // namespace adsgp
