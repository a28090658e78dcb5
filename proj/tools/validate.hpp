#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "adsgp/model.hpp"

namespace adsgp::validation {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Draw {
  AtomParams atom;
  ScenarioConfig cfg;
};

/// Deterministic scenario sampler cycling through subcritical / critical /
/// supercritical AdS, Minkowski and de Sitter, alternating mu in
/// {0.01, 0.1} and drawing theta away from the weight-angle endpoints.
Draw draw_scenario(std::mt19937_64& rng, int index);

CheckResult check_phase_oracle(std::uint64_t seed, int n_draws = 100, double tol = 1e-8);
CheckResult check_fourier_critical(double tol = 1e-3);
CheckResult check_fourier_supercritical(double tol = 1e-3);
CheckResult check_continuity(double tol = 1e-5);
CheckResult check_mu4_scaling(double lo = 14.0, double hi = 18.0);

/// Run every check whose name contains `only` (all when empty).
std::vector<CheckResult> run_checks(const std::string& only, std::uint64_t seed);

}  // namespace adsgp::validation
