#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "adsgp/model.hpp"

namespace adsgp::cli {

enum class OutputFormat { Csv, JsonLines };

struct PhaseOptions {
  Spacetime spacetime = Spacetime::AdS;
  int zeta = 0;
  double ell = 0.0;
  double accel = 0.0;
  double omega0 = 0.0;
  double mu = 0.1;
  double theta = 0.0;
  std::optional<double> time;
  std::string method = "exact";  // exact | perturbative
};

/// A one-dimensional sweep over a dimensionless group, evaluated for every
/// requested spacetime and boundary condition.
struct SweepPlan {
  std::string param;  // a_ell | omega0_ell | theta
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;
  std::string scale = "linear";  // linear | log
  double theta = 0.0;
  double a_ell = 0.0;
  double omega0_ell = 0.0;
  double mu = 0.1;
  std::vector<Spacetime> spacetimes{Spacetime::AdS};
  std::vector<int> boundaries{1, 0, -1};
  std::string output;
  OutputFormat format = OutputFormat::Csv;
};

struct SweepRow {
  double value = 0.0;
  Spacetime spacetime = Spacetime::AdS;
  std::optional<int> zeta;
  std::optional<RegimeKind> regime;
  double delta_over_mu2 = 0.0;
};

struct FigureRequest {
  std::string id;
  std::string outdir;
  int points_accel = 400;   // points of a*ell sweeps
  int points_theta = 721;   // points of theta sweeps, open interval (0, pi)
  double a_ell_max = 20.0;  // upper end of a*ell sweeps
  double mu = 0.1;
  OutputFormat format = OutputFormat::Csv;
};

void validate_plan(const SweepPlan& plan);

/// Evaluate the plan's grid (rows ordered grid-major, boundary-minor).
/// Grid points are processed concurrently; ADSGP_THREADS overrides the
/// worker count.
std::vector<SweepRow> evaluate_sweep(const SweepPlan& plan);

void cmd_phase(const PhaseOptions& opt, std::ostream& out);
void cmd_sweep(const SweepPlan& plan);

/// Writes one file per curve into outdir; returns the paths written.
std::vector<std::string> cmd_figure(const FigureRequest& req);

/// Runs the validation suites; returns 0 iff all pass.
int cmd_validate(const std::string& only, std::uint64_t seed, std::ostream& out);

/// Entry point used by main() and the tests. `args` excludes argv[0].
/// Returns 0 on success, 1 on domain errors, 2 on usage errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace adsgp::cli
