#include "vhpm/cli/commands.hpp"

#include <fstream>
#include <future>
#include <sstream>

#include <CLI11.hpp>

#include "vhpm/cli/report.hpp"
#include "vhpm/errors.hpp"

namespace vhpm::cli {

namespace {

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw config_error("output: cannot write '" + cfg.out_path + "'");
  file << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

const std::vector<double> kDefaultEpsGrid{0.1, 1.0, 10.0};
const std::vector<double> kDefaultAmpGrid{0.5, 1.0, 2.0};

}  // namespace

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const OscillatorProblem p = build_problem(cfg);
  const TrialSpace space = build_space(cfg);
  const auto points = solve_stationary(p, space, build_audit_options(cfg).solver);
  switch (cfg.format.value_or(OutputFormat::json)) {
    case OutputFormat::csv:
      emit(cfg, out, analysis_csv(points));
      break;
    case OutputFormat::md:
      emit(cfg, out, analysis_markdown(p, space, points));
      break;
    case OutputFormat::json:
      emit(cfg, out, dump(analysis_document(p, space, points)));
      break;
  }
  return kExitOk;
}

int cmd_audit(const RunConfig& cfg, std::ostream& out) {
  const OscillatorProblem p = build_problem(cfg);
  const TrialSpace space = build_space(cfg);
  const AuditReport report = full_audit(p, space, build_audit_options(cfg));
  switch (cfg.format.value_or(OutputFormat::json)) {
    case OutputFormat::csv:
      emit(cfg, out, audit_csv(report));
      break;
    case OutputFormat::md:
      emit(cfg, out, audit_markdown(report));
      break;
    case OutputFormat::json:
      emit(cfg, out, dump(audit_document(report, space)));
      break;
  }
  return cfg.fail_on_findings && !report.findings.empty() ? kExitFindings : kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto& eps_grid = cfg.eps_grid.empty() ? kDefaultEpsGrid : cfg.eps_grid;
  const auto& amp_grid = cfg.amp_grid.empty() ? kDefaultAmpGrid : cfg.amp_grid;
  const TrialSpace space = build_space(cfg);
  const AuditOptions opts = build_audit_options(cfg);

  std::vector<OscillatorProblem> problems;
  for (double eps : eps_grid) {
    for (double a : amp_grid) {
      RunConfig row_cfg = cfg;
      row_cfg.epsilon = eps;
      row_cfg.amplitude = a;
      problems.push_back(build_problem(row_cfg));
    }
  }
  // Rows run concurrently and are collected in grid order.
  std::vector<std::future<AuditReport>> jobs;
  for (const auto& p : problems)
    jobs.push_back(std::async(std::launch::async, [&space, &opts, p] { return full_audit(p, space, opts); }));
  std::vector<SweepRow> rows;
  bool any_findings = false;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const AuditReport r = jobs[i].get();
    any_findings = any_findings || !r.findings.empty();
    rows.push_back(sweep_row(problems[i].epsilon, problems[i].amplitude, r));
  }

  switch (cfg.format.value_or(OutputFormat::csv)) {
    case OutputFormat::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const SweepRow& row : rows) {
        auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
        arr.push_back({{"eps", row.eps},
                       {"A", row.amplitude},
                       {"omega_solver", opt(row.omega_solver)},
                       {"omega_eq13", opt(row.omega_eq13)},
                       {"omega_eq15", opt(row.omega_eq15)},
                       {"omega_exact", opt(row.omega_exact)},
                       {"rel_err_solver", opt(row.rel_err_solver)},
                       {"rel_err_eq13", opt(row.rel_err_eq13)},
                       {"rel_err_eq15", opt(row.rel_err_eq15)},
                       {"trivial", row.trivial},
                       {"u1_at_0", opt(row.u1_at_0)}});
      }
      emit(cfg, out,
           dump({{"trial_space", to_json(space)}, {"rows", arr}, {"versions", {{"schema", kSchemaVersion}}}}));
      break;
    }
    case OutputFormat::md: {
      std::ostringstream os;
      os << "# Sweep: " << space.name() << "\n\n```csv\n" << sweep_csv(rows) << "```\n";
      emit(cfg, out, os.str());
      break;
    }
    case OutputFormat::csv:
      emit(cfg, out, sweep_csv(rows));
      break;
  }
  return cfg.fail_on_findings && any_findings ? kExitFindings : kExitOk;
}

int cmd_exact(const RunConfig& cfg, std::ostream& out) {
  const OscillatorProblem p = build_problem(cfg);
  const ExactResult quad = exact_period_quadrature(p);
  const ExactResult ode = exact_period_ode(p);
  const double agreement = std::abs(quad.period - ode.period) / quad.period;
  switch (cfg.format.value_or(OutputFormat::json)) {
    case OutputFormat::csv: {
      std::ostringstream os;
      os << "method,period,frequency,est_error\n";
      for (const ExactResult& r : {quad, ode})
        os << to_string(r.method) << ',' << format_double(r.period) << ','
           << format_double(r.frequency) << ',' << format_double(r.est_error) << '\n';
      emit(cfg, out, os.str());
      break;
    }
    case OutputFormat::md: {
      std::ostringstream os;
      os << "# Exact frequency\n\n| method | period | frequency |\n|---|---|---|\n";
      for (const ExactResult& r : {quad, ode})
        os << "| " << to_string(r.method) << " | " << format_double(r.period) << " | "
           << format_double(r.frequency) << " |\n";
      os << "\nRelative agreement: " << format_double(agreement) << "\n";
      emit(cfg, out, os.str());
      break;
    }
    case OutputFormat::json:
      emit(cfg, out,
           dump({{"problem", to_json(p)},
                 {"exact", {{"quadrature", to_json(quad)}, {"ode", to_json(ode)}, {"relative_agreement", agreement}}},
                 {"versions", {{"schema", kSchemaVersion}}}}));
      break;
  }
  return kExitOk;
}

namespace {

struct Flags {
  std::string config;
  std::optional<std::string> amplitude, eps, omega0sq, poly, space, shapes, format, out, bracket,
      eps_grid, amp_grid, rho, convention;
  bool fail_on_findings = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "Config file (key = value with [sections])");
  cmd->add_option("--A", f.amplitude, "Amplitude A > 0");
  cmd->add_option("--eps", f.eps, "Nonlinearity strength");
  cmd->add_option("--omega0sq", f.omega0sq, "Linear stiffness omega0^2");
  cmd->add_option("--poly", f.poly, "Nonlinearity as POWER:COEFF list, e.g. 3:1,5:0.5");
  cmd->add_option("--preset", [&f](const CLI::results_t& r) {
    if (r.at(0) != "duffing") return false;
    f.omega0sq = "1";
    f.poly = "3:1";
    return true;
  }, "Problem preset (duffing)");
  cmd->add_option("--space", f.space, "al-single | al-double | custom");
  cmd->add_option("--shapes", f.shapes, "Custom shapes: HARMONIC:COEFF,...;HARMONIC:COEFF,...");
  cmd->add_option("--format", f.format, "json | csv | md");
  cmd->add_option("--out", f.out, "Output path (default stdout)");
  cmd->add_option("--bracket", f.bracket, "Frequency bracket LO:HI");
  cmd->add_option("--rho", f.rho, "rho definition: eps*A^2 | eps");
  cmd->add_option("--convention", f.convention, "dJ/domega period convention: moving | fixed");
  cmd->add_flag("--fail-on-findings", f.fail_on_findings, "Exit 4 when the audit has findings");
}

RunConfig resolve(const Flags& f) {
  RunConfig cfg = f.config.empty() ? RunConfig{} : load_config_file(f.config);
  if (f.amplitude) cfg.amplitude = parse_number(*f.amplitude, "--A");
  if (f.eps) cfg.epsilon = parse_number(*f.eps, "--eps");
  if (f.omega0sq) cfg.omega0_sq = parse_number(*f.omega0sq, "--omega0sq");
  if (f.poly) cfg.nonlinearity = parse_polynomial(*f.poly, "--poly");
  if (f.space) cfg.space = *f.space;
  if (f.shapes) cfg.custom_shapes = parse_shapes(*f.shapes, "--shapes");
  if (f.format) cfg.format = parse_format(*f.format, "--format");
  if (f.out) cfg.out_path = *f.out;
  if (f.bracket) cfg.bracket = parse_bracket(*f.bracket, "--bracket");
  if (f.rho) cfg.rho = parse_rho(*f.rho, "--rho");
  if (f.convention) cfg.convention = parse_convention(*f.convention, "--convention");
  if (f.eps_grid) cfg.eps_grid = parse_list(*f.eps_grid, "--eps-grid");
  if (f.amp_grid) cfg.amp_grid = parse_list(*f.amp_grid, "--A-grid");
  if (f.fail_on_findings) cfg.fail_on_findings = true;
  return cfg;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Variational homotopy perturbation analysis and audit for nonlinear oscillators"};
  app.require_subcommand(1);
  Flags flags;
  CLI::App* analyze = app.add_subcommand("analyze", "List stationary points of the first-order action");
  CLI::App* audit = app.add_subcommand("audit", "Audit boundary conditions, triviality and frequencies");
  CLI::App* sweep = app.add_subcommand("sweep", "Audit over an (eps, A) grid, one CSV row per point");
  CLI::App* exact = app.add_subcommand("exact", "Exact period by quadrature and by ODE integration");
  for (CLI::App* cmd : {analyze, audit, sweep, exact}) add_common(cmd, flags);
  sweep->add_option("--eps-grid", flags.eps_grid, "Comma-separated eps values");
  sweep->add_option("--A-grid", flags.amp_grid, "Comma-separated A values");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    const RunConfig cfg = resolve(flags);
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (audit->parsed()) return cmd_audit(cfg, out);
    if (sweep->parsed()) return cmd_sweep(cfg, out);
    return cmd_exact(cfg, out);
  } catch (const config_error& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const numeric_domain_error& e) {
    err << "numeric domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace vhpm::cli
