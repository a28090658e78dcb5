#include "cli.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "adsgp/phase.hpp"
#include "adsgp/version.hpp"
#include "validate.hpp"

namespace adsgp::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v, int prec = 12) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
  return buf;
}

std::string fmt_full(double v) { return fmt(v, 17); }

unsigned worker_count(std::size_t jobs) {
  unsigned n = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("ADSGP_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed > 0) n = static_cast<unsigned>(parsed);
  }
  if (n == 0) n = 1;
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

template <class Fn>
void parallel_for(int n, Fn&& fn) {
  const unsigned workers = worker_count(static_cast<std::size_t>(n));
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

double grid_point(const SweepPlan& plan, int i) {
  const double f = static_cast<double>(i) / (plan.count - 1);
  if (plan.scale == "log")
    return plan.lo * std::pow(plan.hi / plan.lo, f);
  return plan.lo + (plan.hi - plan.lo) * f;
}

ScenarioConfig config_for(const SweepPlan& plan, Spacetime st, std::optional<int> zeta,
                          double swept) {
  const double a_ell = plan.param == "a_ell" ? swept : plan.a_ell;
  const double u = plan.param == "omega0_ell" ? swept : plan.omega0_ell;
  ScenarioConfig cfg;
  cfg.spacetime = st;
  if (st == Spacetime::Minkowski) return cfg;
  cfg.ell = u;  // omega0 = 1 internally, so ell equals omega0*ell
  cfg.accel = a_ell / u;
  if (st == Spacetime::AdS) cfg.zeta = zeta.value_or(0);
  return cfg;
}

struct CurveMeta {
  std::string command;
  std::vector<std::pair<std::string, std::string>> fields;
};

// Sweep files carry the per-row scenario columns; figure files are one
// curve each, so the constant curve identity lives in the metadata and the
// rows are just (value, delta/mu^2, |delta|/mu^2).
void write_rows(std::ostream& os, const CurveMeta& meta, const std::string& value_name,
                const std::vector<SweepRow>& rows, OutputFormat format, bool per_row_scenario) {
  if (format == OutputFormat::JsonLines) {
    nlohmann::json head;
    head["tool"] = "adsgp";
    head["version"] = kVersion;
    head["command"] = meta.command;
    for (const auto& [k, v] : meta.fields) head[k] = v;
    os << head.dump() << "\n";
    for (const auto& r : rows) {
      nlohmann::json j;
      j[value_name] = r.value;
      if (per_row_scenario) {
        j["spacetime"] = to_string(r.spacetime);
        j["boundary"] = r.zeta ? boundary_name(*r.zeta) : "-";
        j["regime"] = r.regime ? to_string(*r.regime) : "-";
      }
      j["delta_over_mu2"] = r.delta_over_mu2;
      j["abs_delta_over_mu2"] = std::abs(r.delta_over_mu2);
      os << j.dump() << "\n";
    }
    return;
  }
  os << "# adsgp " << kVersion << "\n";
  os << "# command: " << meta.command << "\n";
  for (const auto& [k, v] : meta.fields) os << "# " << k << ": " << v << "\n";
  os << value_name;
  if (per_row_scenario) os << ",spacetime,boundary,regime";
  os << ",delta_over_mu2,abs_delta_over_mu2\n";
  for (const auto& r : rows) {
    os << fmt(r.value);
    if (per_row_scenario)
      os << ',' << to_string(r.spacetime) << ',' << (r.zeta ? boundary_name(*r.zeta) : "-")
         << ',' << (r.regime ? to_string(*r.regime) : "-");
    os << ',' << fmt(r.delta_over_mu2) << ',' << fmt(std::abs(r.delta_over_mu2)) << "\n";
  }
}

CurveMeta sweep_meta(const SweepPlan& plan) {
  CurveMeta meta;
  meta.command = "sweep";
  meta.fields.emplace_back("param", plan.param);
  meta.fields.emplace_back("scale", plan.scale);
  meta.fields.emplace_back("lo", fmt_full(plan.lo));
  meta.fields.emplace_back("hi", fmt_full(plan.hi));
  meta.fields.emplace_back("count", std::to_string(plan.count));
  if (plan.param != "theta") meta.fields.emplace_back("theta", fmt_full(plan.theta));
  if (plan.param != "a_ell") meta.fields.emplace_back("a_ell", fmt_full(plan.a_ell));
  if (plan.param != "omega0_ell")
    meta.fields.emplace_back("omega0_ell", fmt_full(plan.omega0_ell));
  meta.fields.emplace_back("mu", fmt_full(plan.mu));
  std::string sts, bds;
  for (const auto st : plan.spacetimes) {
    if (!sts.empty()) sts += ',';
    sts += to_string(st);
  }
  for (const int z : plan.boundaries) {
    if (!bds.empty()) bds += ',';
    bds += boundary_name(z);
  }
  meta.fields.emplace_back("spacetimes", sts);
  meta.fields.emplace_back("boundaries", bds);
  return meta;
}

}  // namespace

void validate_plan(const SweepPlan& plan) {
  if (plan.param != "a_ell" && plan.param != "omega0_ell" && plan.param != "theta")
    throw ValidationError("sweep param must be a_ell, omega0_ell or theta");
  if (plan.scale != "linear" && plan.scale != "log")
    throw ValidationError("sweep scale must be linear or log");
  if (!(plan.lo < plan.hi)) throw ValidationError("sweep requires lo < hi");
  if (plan.count < 2) throw ValidationError("sweep requires count >= 2");
  if (!(plan.mu > 0.0)) throw ValidationError("mu must be > 0");
  if (plan.spacetimes.empty()) throw ValidationError("at least one spacetime is required");

  const bool needs_theta = plan.param != "theta";
  const bool needs_a = plan.param != "a_ell";
  const bool needs_u = plan.param != "omega0_ell";
  const bool any_curved = std::any_of(plan.spacetimes.begin(), plan.spacetimes.end(),
                                      [](Spacetime s) { return s != Spacetime::Minkowski; });
  if (needs_theta && !(plan.theta >= 0.0 && plan.theta <= kPi))
    throw ValidationError("fixed theta must lie in [0, pi]");
  if (any_curved) {
    if (needs_a && !(plan.a_ell >= 0.0)) throw ValidationError("fixed a_ell must be >= 0");
    if (needs_u && !(plan.omega0_ell > 0.0))
      throw ValidationError("fixed omega0_ell must be > 0");
  }

  if (plan.param == "theta" && (plan.lo < 0.0 || plan.hi > kPi))
    throw ValidationError("theta sweeps must stay inside [0, pi]");
  if (plan.param == "a_ell" && plan.lo < 0.0)
    throw ValidationError("a_ell sweeps must start at >= 0");
  if (plan.param == "omega0_ell" && plan.lo <= 0.0)
    throw ValidationError("omega0_ell sweeps must start at > 0");
  if (plan.scale == "log") {
    if (plan.param == "a_ell" && plan.lo <= 1.0)
      throw ValidationError("log-scale a_ell sweeps must start above the critical point "
                            "(lo > 1); use linear scale to include it");
    if (plan.lo <= 0.0) throw ValidationError("log scale requires lo > 0");
  }
}

std::vector<SweepRow> evaluate_sweep(const SweepPlan& plan) {
  validate_plan(plan);

  struct Cell {
    Spacetime st;
    std::optional<int> zeta;
  };
  std::vector<Cell> cells;
  for (const auto st : plan.spacetimes) {
    if (st == Spacetime::AdS) {
      for (const int z : plan.boundaries) cells.push_back({st, z});
    } else {
      cells.push_back({st, std::nullopt});
    }
  }
  if (cells.empty()) throw ValidationError("sweep plan produced no curves");

  const int per_point = static_cast<int>(cells.size());
  std::vector<SweepRow> rows(static_cast<std::size_t>(plan.count) * per_point);
  std::vector<std::string> failures(rows.size());

  parallel_for(plan.count, [&](int i) {
    const double v = grid_point(plan, i);
    for (int c = 0; c < per_point; ++c) {
      const std::size_t slot = static_cast<std::size_t>(i) * per_point + c;
      SweepRow& row = rows[slot];
      row.value = v;
      row.spacetime = cells[c].st;
      row.zeta = cells[c].zeta;
      try {
        AtomParams atom{1.0, plan.mu, plan.param == "theta" ? v : plan.theta};
        const ScenarioConfig cfg = config_for(plan, cells[c].st, cells[c].zeta, v);
        if (cfg.spacetime == Spacetime::AdS)
          row.regime = classify_regime(cfg.accel, cfg.ell).kind;
        row.delta_over_mu2 = correction(atom, cfg).delta_over_mu2;
      } catch (const Error& e) {
        failures[slot] = e.what();
      }
    }
  });

  for (const auto& f : failures)
    if (!f.empty()) throw ValidationError("sweep evaluation failed: " + f);
  return rows;
}

void cmd_phase(const PhaseOptions& opt, std::ostream& out) {
  AtomParams atom{opt.omega0, opt.mu, opt.theta};
  ScenarioConfig cfg{opt.spacetime, opt.ell, opt.accel, opt.zeta};

  PhaseReport rep;
  if (opt.method == "exact") {
    rep = geometric_phase(atom, cfg, opt.time);
  } else if (opt.method == "perturbative") {
    if (opt.time && std::abs(*opt.time - 2.0 * kPi / atom.omega0) >
                        1e-12 * (2.0 * kPi / atom.omega0))
      throw ValidationError("the perturbative method covers exactly one period; "
                            "drop --time or use --method exact");
    rep = phase_perturbative(atom, cfg);
  } else {
    throw ValidationError("method must be exact or perturbative");
  }

  out << "phi                = " << fmt(rep.phi) << "\n";
  out << "method             = " << to_string(rep.method) << "\n";
  out << "spacetime          = " << to_string(cfg.spacetime) << "\n";
  if (rep.regime) out << "regime             = " << to_string(rep.regime->kind) << "\n";
  if (rep.groups.a_ell) out << "a_ell              = " << fmt(*rep.groups.a_ell) << "\n";
  if (cfg.spacetime == Spacetime::AdS)
    out << "boundary           = " << boundary_name(cfg.zeta) << "\n";
  if (rep.groups.omega0_ell)
    out << "omega0_ell         = " << fmt(*rep.groups.omega0_ell) << "\n";
  out << "theta              = " << fmt(atom.theta) << "\n";
  out << "mu                 = " << fmt(atom.mu) << "\n";
  out << "T                  = " << fmt(rep.T) << "\n";

  // The correction against the inertial Minkowski reference is a one-period
  // quantity; report it only when T is one period.
  const double period = 2.0 * kPi / atom.omega0;
  if (std::abs(rep.T - period) <= 1e-12 * period) {
    const CorrectionReport corr = correction(atom, cfg);
    out << "delta_over_mu2     = " << fmt(corr.delta_over_mu2) << "\n";
    out << "abs_delta_over_mu2 = " << fmt(std::abs(corr.delta_over_mu2)) << "\n";
  }
}

void cmd_sweep(const SweepPlan& plan) {
  const std::vector<SweepRow> rows = evaluate_sweep(plan);
  if (plan.output.empty()) throw ValidationError("sweep requires --output");
  std::ofstream os(plan.output);
  if (!os) throw Error("cannot open output file '" + plan.output + "'");
  write_rows(os, sweep_meta(plan), plan.param, rows, plan.format, true);
  os.flush();
  if (!os) throw Error("write failed for '" + plan.output + "'");
}

namespace {

struct FigureCurve {
  std::string file_tag;   // e.g. "fig3_omega0ell0.2_dirichlet"
  SweepPlan plan;         // single spacetime / single boundary
};

std::vector<FigureCurve> figure_curves(const FigureRequest& req) {
  const double theta0 = kPi / 4.0;
  // theta grids live on the open interval (0, pi).
  const double th_lo = kPi / (req.points_theta + 1);
  const double th_hi = kPi * req.points_theta / (req.points_theta + 1);

  SweepPlan base;
  base.mu = req.mu;
  base.format = req.format;

  const auto ads_curve = [&](const std::string& tag, const SweepPlan& plan, int zeta) {
    SweepPlan p = plan;
    p.spacetimes = {Spacetime::AdS};
    p.boundaries = {zeta};
    return FigureCurve{tag + "_" + boundary_name(zeta), p};
  };
  const auto ds_curve = [&](const std::string& tag, const SweepPlan& plan) {
    SweepPlan p = plan;
    p.spacetimes = {Spacetime::DeSitter};
    p.boundaries.clear();
    return FigureCurve{tag + "_ds", p};
  };

  std::vector<FigureCurve> curves;
  const auto add_ads_family = [&](const std::string& tag, const SweepPlan& plan,
                                  bool with_ds) {
    for (int z : {1, 0, -1}) curves.push_back(ads_curve(tag, plan, z));
    if (with_ds) curves.push_back(ds_curve(tag, plan));
  };

  const auto accel_plan = [&](double omega0_ell, double lo) {
    SweepPlan p = base;
    p.param = "a_ell";
    p.lo = lo;
    p.hi = req.a_ell_max;
    p.count = req.points_accel;
    p.theta = theta0;
    p.omega0_ell = omega0_ell;
    return p;
  };
  const auto theta_plan = [&](double omega0_ell, double a_ell) {
    SweepPlan p = base;
    p.param = "theta";
    p.lo = th_lo;
    p.hi = th_hi;
    p.count = req.points_theta;
    p.a_ell = a_ell;
    p.omega0_ell = omega0_ell;
    return p;
  };

  if (req.id == "fig1a") {
    add_ads_family("fig1a", accel_plan(0.1, 1.0), false);
  } else if (req.id == "fig1b") {
    add_ads_family("fig1b", accel_plan(10.0, 1.0), false);
  } else if (req.id == "fig2a") {
    add_ads_family("fig2a", theta_plan(0.5, 5.0), false);
  } else if (req.id == "fig2b") {
    add_ads_family("fig2b", theta_plan(0.5, 10.0), false);
  } else if (req.id == "fig2c") {
    add_ads_family("fig2c", theta_plan(5.0, 5.0), false);
  } else if (req.id == "fig2d") {
    add_ads_family("fig2d", theta_plan(5.0, 10.0), false);
  } else if (req.id == "fig3") {
    add_ads_family("fig3_omega0ell0.2", accel_plan(0.2, 0.0), true);
    add_ads_family("fig3_omega0ell5", accel_plan(5.0, 0.0), true);
  } else if (req.id == "fig4") {
    add_ads_family("fig4_aell1.5", theta_plan(1.0, 1.5), true);
    add_ads_family("fig4_aell10", theta_plan(1.0, 10.0), true);
  } else {
    throw ValidationError("unknown figure preset '" + req.id + "'");
  }
  return curves;
}

}  // namespace

std::vector<std::string> cmd_figure(const FigureRequest& req) {
  namespace fs = std::filesystem;
  if (req.outdir.empty()) throw ValidationError("figure requires --outdir");
  std::error_code ec;
  fs::create_directories(req.outdir, ec);
  if (ec) throw Error("cannot create output directory '" + req.outdir + "'");

  std::vector<std::string> written;
  for (const FigureCurve& curve : figure_curves(req)) {
    const std::vector<SweepRow> rows = evaluate_sweep(curve.plan);
    const std::string ext = req.format == OutputFormat::Csv ? ".csv" : ".jsonl";
    const fs::path path = fs::path(req.outdir) / (curve.file_tag + ext);
    std::ofstream os(path);
    if (!os) throw Error("cannot open output file '" + path.string() + "'");
    CurveMeta meta = sweep_meta(curve.plan);
    meta.command = "figure " + req.id;
    write_rows(os, meta, curve.plan.param, rows, req.format, false);
    os.flush();
    if (!os) throw Error("write failed for '" + path.string() + "'");
    written.push_back(path.string());
  }
  return written;
}

int cmd_validate(const std::string& only, std::uint64_t seed, std::ostream& out) {
  const auto results = validation::run_checks(only, seed);
  if (results.empty()) {
    out << "no checks match '" << only << "'\n";
    return 1;
  }
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
    for (std::size_t i = r.name.size(); i < 24; ++i) out << ' ';
    out << r.detail << "\n";
    all = all && r.passed;
  }
  out << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
  return all ? 0 : 1;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"geometric phase of uniformly accelerated two-level atoms in AdS and dS"};
  app.require_subcommand(1);

  PhaseOptions ph;
  std::string ph_spacetime = "ads", ph_boundary = "transparent";
  double ph_time = 0.0;
  auto* phase_cmd = app.add_subcommand("phase", "evaluate a single scenario");
  phase_cmd->add_option("--spacetime", ph_spacetime, "ads | ds | minkowski")->required();
  phase_cmd->add_option("--boundary", ph_boundary, "dirichlet | transparent | neumann");
  phase_cmd->add_option("--ell", ph.ell, "curvature radius");
  phase_cmd->add_option("--accel", ph.accel, "proper acceleration");
  phase_cmd->add_option("--omega0", ph.omega0, "atomic energy gap")->required();
  phase_cmd->add_option("--mu", ph.mu, "coupling constant (default 0.1)");
  phase_cmd->add_option("--theta", ph.theta, "weight angle in [0, pi]")->required();
  auto* time_opt = phase_cmd->add_option("--time", ph_time, "evolution time (default one period)");
  phase_cmd->add_option("--method", ph.method, "exact | perturbative");

  SweepPlan plan;
  std::vector<std::string> sw_spacetimes{"ads"};
  std::vector<std::string> sw_boundaries{"dirichlet", "transparent", "neumann"};
  std::string sw_format = "csv";
  auto* sweep_cmd = app.add_subcommand("sweep", "sweep one dimensionless group");
  sweep_cmd->add_option("--param", plan.param, "a_ell | omega0_ell | theta")->required();
  sweep_cmd->add_option("--lo", plan.lo)->required();
  sweep_cmd->add_option("--hi", plan.hi)->required();
  sweep_cmd->add_option("--count", plan.count)->required();
  sweep_cmd->add_option("--scale", plan.scale, "linear | log");
  sweep_cmd->add_option("--theta", plan.theta, "fixed weight angle");
  sweep_cmd->add_option("--a-ell", plan.a_ell, "fixed a*ell");
  sweep_cmd->add_option("--omega0-ell", plan.omega0_ell, "fixed omega0*ell");
  sweep_cmd->add_option("--mu", plan.mu);
  sweep_cmd->add_option("--spacetime", sw_spacetimes, "spacetimes to evaluate");
  sweep_cmd->add_option("--boundary", sw_boundaries, "AdS boundary conditions");
  sweep_cmd->add_option("--output", plan.output, "output file")->required();
  sweep_cmd->add_option("--format", sw_format, "csv | jsonl");

  FigureRequest fig;
  std::string fig_format = "csv";
  auto* figure_cmd = app.add_subcommand("figure", "regenerate figure data");
  figure_cmd->add_option("--id", fig.id,
                         "fig1a fig1b fig2a fig2b fig2c fig2d fig3 fig4")->required();
  figure_cmd->add_option("--outdir", fig.outdir, "output directory")->required();
  figure_cmd->add_option("--points-accel", fig.points_accel, "a*ell grid size");
  figure_cmd->add_option("--points-theta", fig.points_theta, "theta grid size");
  figure_cmd->add_option("--a-ell-max", fig.a_ell_max, "upper end of a*ell sweeps");
  figure_cmd->add_option("--mu", fig.mu);
  figure_cmd->add_option("--format", fig_format, "csv | jsonl");

  std::string va_only;
  std::uint64_t va_seed = 12345;
  auto* validate_cmd = app.add_subcommand("validate", "run the validation suites");
  validate_cmd->add_option("--only", va_only, "run only checks whose name contains this");
  validate_cmd->add_option("--seed", va_seed, "seed of the randomized grids");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (phase_cmd->parsed()) {
      ph.spacetime = parse_spacetime(ph_spacetime);
      ph.zeta = parse_boundary(ph_boundary);
      if (time_opt->count() > 0) ph.time = ph_time;
      cmd_phase(ph, out);
      return 0;
    }
    if (sweep_cmd->parsed()) {
      plan.spacetimes.clear();
      for (const auto& s : sw_spacetimes) plan.spacetimes.push_back(parse_spacetime(s));
      plan.boundaries.clear();
      for (const auto& b : sw_boundaries) plan.boundaries.push_back(parse_boundary(b));
      if (sw_format == "jsonl")
        plan.format = OutputFormat::JsonLines;
      else if (sw_format != "csv")
        throw ValidationError("format must be csv or jsonl");
      cmd_sweep(plan);
      return 0;
    }
    if (figure_cmd->parsed()) {
      if (fig_format == "jsonl")
        fig.format = OutputFormat::JsonLines;
      else if (fig_format != "csv")
        throw ValidationError("format must be csv or jsonl");
      for (const auto& path : cmd_figure(fig)) out << path << "\n";
      return 0;
    }
    if (validate_cmd->parsed()) return cmd_validate(va_only, va_seed, out);
  } catch (const Error& e) {
    err << e.kind() << ": " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace adsgp::cli
