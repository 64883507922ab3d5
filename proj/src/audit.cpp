#include "vhpm/audit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vhpm/errors.hpp"
#include "vhpm/hierarchy.hpp"

namespace vhpm {

BoundaryResidual check_boundary(const TrigSeries& u1) {
  return {u1.evaluate(0.0), differentiate(u1).evaluate(0.0)};
}

bool classify_triviality(const Eigen::VectorXd& amplitudes, double amplitude, double tol) {
  if (!(amplitude > 0.0)) throw std::invalid_argument("classify_triviality: amplitude must be > 0");
  const double largest = amplitudes.size() ? amplitudes.cwiseAbs().maxCoeff() : 0.0;
  return largest <= tol * amplitude;
}

double eq13_frequency(const OscillatorProblem& p) {
  const double radicand = fundamental_frequency_sq(p);
  if (radicand < 0.0) throw numeric_domain_error("eq13_frequency: negative radicand");
  return std::sqrt(radicand);
}

double eq15_frequency(double rho) {
  const double inner = 510237.0 * rho * rho + 1416576.0 * rho + 984064.0;
  if (inner < 0.0) throw numeric_domain_error("eq15_frequency: negative inner radicand");
  const double outer = std::sqrt(inner) - 357.0 * rho - 496.0;
  if (!(outer > 0.0)) throw numeric_domain_error("eq15_frequency: non-positive outer radicand");
  return std::sqrt(31.0) / 124.0 * std::sqrt(outer);
}

Eq16Coefficients eq16_coefficients(double amplitude, double rho, double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("eq16_coefficients: omega must be > 0");
  const double w2 = omega * omega;
  return {amplitude * (357.0 * rho - 496.0 * (w2 - 1.0)) / (96.0 * w2),
          49.0 * amplitude * (3.0 * rho - 4.0 * (w2 - 1.0)) / (96.0 * w2)};
}

double eq16_u1_at_zero(double amplitude, double rho, double omega) {
  const double w2 = omega * omega;
  return -amplitude * (68.0 * w2 - 49.0 * rho - 68.0) / (16.0 * w2);
}

double rho_of(const OscillatorProblem& p, RhoDefinition definition) {
  switch (definition) {
    case RhoDefinition::eps:
      return p.epsilon;
    case RhoDefinition::eps_a2:
    default:
      return p.epsilon * p.amplitude * p.amplitude;
  }
}

std::string to_string(RhoDefinition definition) {
  return definition == RhoDefinition::eps ? "eps" : "eps*A^2";
}

bool AuditReport::has_finding(const std::string& code) const {
  return std::any_of(findings.begin(), findings.end(),
                     [&](const Finding& f) { return f.code == code; });
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

double relative(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

}  // namespace

AuditReport full_audit(const OscillatorProblem& p, const TrialSpace& space,
                       const AuditOptions& options) {
  AuditReport r;
  r.problem = p;
  r.space_name = space.name();
  r.preset = identify_preset(space);
  r.rho_definition = options.rho;
  r.rho = rho_of(p, options.rho);
  r.trivial_threshold = options.solver.triviality_tol * p.amplitude;
  const bool duffing_shape = is_duffing(p);

  try {
    r.stationary_points = solve_stationary(p, space, options.solver);
  } catch (const numeric_domain_error& e) {
    throw numeric_domain_error(std::string("audit: stationarity solver failed: ") + e.what());
  }
  r.selected = preferred_branch(r.stationary_points);

  std::optional<double> exact;
  FreqRow exact_row{"exact", std::nullopt, std::nullopt, ""};
  try {
    const ExactResult oracle = exact_period_quadrature(p);
    exact = oracle.frequency;
    exact_row.omega = oracle.frequency;
    exact_row.rel_err_vs_exact = 0.0;
  } catch (const numeric_domain_error& e) {
    exact_row.note = e.what();
  }
  auto row = [&](std::string source, double omega) {
    FreqRow fr{std::move(source), omega, std::nullopt, ""};
    if (exact) fr.rel_err_vs_exact = (omega - *exact) / *exact;
    return fr;
  };

  if (r.selected) {
    const StationaryPoint& sp = *r.selected;
    const TrigSeries u0 = order0_solution(p, sp.omega);
    r.correction = space.correction(sp.amplitudes, sp.omega);
    const BoundaryResidual bc = check_boundary(*r.correction);
    r.bc_u1_at_0 = bc.value;
    r.bc_du1_at_0 = bc.derivative;
    // u_app(0) - A grouped as (u0(0) - A) + u1(0); u0(0) == A exactly.
    r.amplitude_mismatch = (u0.evaluate(0.0) - p.amplitude) + bc.value;
    r.u_app_at_0 = u0.evaluate(0.0) + bc.value;
    r.trivial = classify_triviality(sp.amplitudes, p.amplitude, options.solver.triviality_tol);
    r.freq_table.push_back(row("solver", sp.omega));
  } else {
    r.freq_table.push_back({"solver", std::nullopt, std::nullopt, "no stationary point in bracket"});
  }

  try {
    r.freq_table.push_back(row("eq13", eq13_frequency(p)));
  } catch (const numeric_domain_error& e) {
    r.freq_table.push_back({"eq13", std::nullopt, std::nullopt, e.what()});
  }
  std::optional<double> eq15;
  if (duffing_shape) {
    try {
      eq15 = eq15_frequency(r.rho);
      r.freq_table.push_back(row("eq15", *eq15));
    } catch (const numeric_domain_error& e) {
      r.freq_table.push_back({"eq15", std::nullopt, std::nullopt, e.what()});
    }
  } else {
    r.freq_table.push_back(
        {"eq15", std::nullopt, std::nullopt, "closed form applies to u'' + u + eps u^3 only"});
  }
  r.freq_table.push_back(exact_row);

  if (r.selected) {
    const StationaryPoint& sp = *r.selected;
    if (r.preset == TrialPreset::al_single) {
      try {
        r.closed_form.omega_vs_eq13 = relative(sp.omega, eq13_frequency(p));
      } catch (const numeric_domain_error&) {
      }
    }
    if (r.preset == TrialPreset::al_double && duffing_shape) {
      if (eq15) r.closed_form.omega_vs_eq15 = std::abs(sp.omega - *eq15) / sp.omega;
      const Eq16Coefficients c = eq16_coefficients(p.amplitude, r.rho, sp.omega);
      double worst = 0.0;
      const double ref[2] = {c.b1, c.b3};
      for (int i = 0; i < 2; ++i) {
        const double scale_ref = std::max(std::abs(ref[i]), r.trivial_threshold);
        worst = std::max(worst, std::abs(sp.amplitudes[i] - ref[i]) / scale_ref);
      }
      r.closed_form.b_vs_eq16 = worst;
      const double formula = eq16_u1_at_zero(p.amplitude, r.rho, sp.omega);
      r.closed_form.u1_at_0_formula = formula;
      r.closed_form.u1_at_0_vs_formula =
          std::abs(r.bc_u1_at_0 - formula) / std::max(std::abs(formula), r.trivial_threshold);
    }
  }

  if (options.compare_conventions && r.selected) {
    SolverOptions fixed = options.solver;
    fixed.convention = PeriodConvention::fixed_limit;
    try {
      if (auto pt = preferred_branch(solve_stationary(p, space, fixed)))
        r.conventions.omega_fixed_limit = pt->omega;
      r.conventions.d_omega_fixed_at_solution =
          d_omega(p, space, r.selected->omega, r.selected->amplitudes,
                  PeriodConvention::fixed_limit);
    } catch (const numeric_domain_error&) {
    }
  }

  // Findings, in a fixed order.
  if (!r.selected) {
    r.findings.push_back({"NO_STATIONARY_POINT",
                          "No joint stationary point of the action was found in the bracket.",
                          {}});
  }
  if (r.selected && r.trivial) {
    const double largest =
        r.selected->amplitudes.size() ? r.selected->amplitudes.cwiseAbs().maxCoeff() : 0.0;
    r.findings.push_back(
        {"TRIVIAL_CORRECTION",
         "Every trial amplitude vanishes at the stationary point (max |B| = " + fmt(largest) +
             "), so the first-order correction u1 is identically zero and only the frequency "
             "carries information.",
         {{"max_abs_B", largest}, {"threshold", r.trivial_threshold}}});
  }
  const double bc_limit = options.bc_tol * p.amplitude;
  if (r.selected && (std::abs(r.bc_u1_at_0) > bc_limit || std::abs(r.bc_du1_at_0) > bc_limit)) {
    r.findings.push_back(
        {"BC_VIOLATION",
         "The correction does not meet its initial conditions u1(0) = u1'(0) = 0: u1(0) = " +
             fmt(r.bc_u1_at_0) + ", u1'(0) = " + fmt(r.bc_du1_at_0) + ".",
         {{"u1_at_0", r.bc_u1_at_0}, {"du1_at_0", r.bc_du1_at_0}, {"threshold", bc_limit}}});
  }
  if (r.selected && std::abs(r.amplitude_mismatch) > bc_limit) {
    r.findings.push_back(
        {"AMPLITUDE_MISMATCH",
         "u0 + u1 starts at " + fmt(r.u_app_at_0) + " rather than at the amplitude A = " +
             fmt(p.amplitude) + " that enters the frequency estimate.",
         {{"u_app_at_0", r.u_app_at_0},
          {"amplitude", p.amplitude},
          {"mismatch", r.amplitude_mismatch}}});
  }
  auto closed_form_check = [&](const std::string& name, const std::optional<double>& dev,
                               double closed, double solver) {
    if (dev && *dev > options.closed_form_tol) {
      r.findings.push_back({"CLOSED_FORM_MISMATCH",
                            "Solver result deviates from the " + name + " closed form by " +
                                fmt(*dev) + " (relative).",
                            {{"closed_form", closed}, {"solver", solver}, {"deviation", *dev}}});
    }
  };
  if (r.selected) {
    const StationaryPoint& sp = *r.selected;
    if (r.closed_form.omega_vs_eq13) closed_form_check("eq13 frequency", r.closed_form.omega_vs_eq13,
                                                       eq13_frequency(p), sp.omega);
    if (r.closed_form.omega_vs_eq15)
      closed_form_check("eq15 frequency", r.closed_form.omega_vs_eq15, *eq15, sp.omega);
    if (r.closed_form.b_vs_eq16) {
      const Eq16Coefficients c = eq16_coefficients(p.amplitude, r.rho, sp.omega);
      closed_form_check("eq16 B1", r.closed_form.b_vs_eq16, c.b1, sp.amplitudes[0]);
    }
  }
  if (exact) {
    std::vector<std::pair<std::string, double>> values{{"omega_exact", *exact}};
    bool inaccurate = false;
    for (const FreqRow& fr : r.freq_table) {
      if (fr.source == "exact" || !fr.rel_err_vs_exact) continue;
      values.emplace_back("rel_err_" + fr.source, *fr.rel_err_vs_exact);
      inaccurate = inaccurate || std::abs(*fr.rel_err_vs_exact) > options.freq_tol;
    }
    if (inaccurate) {
      std::string msg = "Approximate frequencies differ from the exact value " + fmt(*exact) + ":";
      for (std::size_t i = 1; i < values.size(); ++i)
        msg += " " + values[i].first.substr(8) + " " + fmt(100.0 * values[i].second) + "%";
      r.findings.push_back({"FREQ_ACCURACY", msg, std::move(values)});
    }
  }
  return r;
}

}  // namespace vhpm
