#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "vhpm/action.hpp"
#include "vhpm/exact_period.hpp"
#include "vhpm/oscillator.hpp"
#include "vhpm/trig_series.hpp"

namespace vhpm {

struct BoundaryResidual {
  double value;       // u1(0)
  double derivative;  // u1'(0)
};

BoundaryResidual check_boundary(const TrigSeries& u1);

/// max |B_i| <= tol * A.
bool classify_triviality(const Eigen::VectorXd& amplitudes, double amplitude, double tol = 1e-10);

/// Frequency that removes the cos(omega t) harmonic from the first-order
/// forcing: sqrt(omega0^2 + eps c1[f(A cos)] / A), which is
/// sqrt(1 + 3 eps A^2 / 4) for Duffing.
double eq13_frequency(const OscillatorProblem& p);

/// Closed-form frequency of the two-shape Duffing correction,
///   sqrt(31)/124 * sqrt( sqrt(510237 rho^2 + 1416576 rho + 984064) - 357 rho - 496 ).
double eq15_frequency(double rho);

struct Eq16Coefficients {
  double b1;
  double b3;
};

/// B1 = A [357 rho - 496 (w^2 - 1)] / (96 w^2),  B3 = 49 A [3 rho - 4 (w^2 - 1)] / (96 w^2).
Eq16Coefficients eq16_coefficients(double amplitude, double rho, double omega);

/// u1(0) = -A (68 w^2 - 49 rho - 68) / (16 w^2) for the two-shape correction.
double eq16_u1_at_zero(double amplitude, double rho, double omega);

/// How the combined nonlinearity parameter rho is formed from (eps, A).
enum class RhoDefinition { eps_a2, eps };

double rho_of(const OscillatorProblem& p, RhoDefinition definition);
std::string to_string(RhoDefinition definition);

struct FreqRow {
  std::string source;  // solver | eq13 | eq15 | exact
  std::optional<double> omega;
  std::optional<double> rel_err_vs_exact;
  std::string note;  // reason when unavailable
};

struct Finding {
  std::string code;
  std::string message;
  std::vector<std::pair<std::string, double>> values;
};

struct ClosedFormResiduals {
  std::optional<double> omega_vs_eq13;     // |w_solver - w_eq13| / w_solver
  std::optional<double> omega_vs_eq15;     // |w_solver - w_eq15| / w_solver
  std::optional<double> b_vs_eq16;         // max_i |B_i - B_i^eq16| / |B_i^eq16|
  std::optional<double> u1_at_0_formula;   // -A (68 w^2 - 49 rho - 68) / (16 w^2)
  std::optional<double> u1_at_0_vs_formula;
};

/// Stationary point obtained when the upper limit T is held fixed in dJ/domega.
struct ConventionComparison {
  std::optional<double> omega_fixed_limit;
  std::optional<double> d_omega_fixed_at_solution;
};

struct AuditOptions {
  SolverOptions solver;
  RhoDefinition rho = RhoDefinition::eps_a2;
  double bc_tol = 1e-10;           // relative to A
  double closed_form_tol = 1e-6;   // relative
  double freq_tol = 1e-10;         // relative error that counts as a finding
  bool compare_conventions = true;
};

struct AuditReport {
  OscillatorProblem problem;
  std::string space_name;
  TrialPreset preset = TrialPreset::custom;
  double rho = 0.0;
  RhoDefinition rho_definition = RhoDefinition::eps_a2;

  std::vector<StationaryPoint> stationary_points;
  std::optional<StationaryPoint> selected;
  std::optional<TrigSeries> correction;

  double bc_u1_at_0 = 0.0;
  double bc_du1_at_0 = 0.0;
  bool trivial = false;
  double trivial_threshold = 0.0;  // absolute, tol * A
  double amplitude_mismatch = 0.0;  // u_app(0) - A
  double u_app_at_0 = 0.0;

  std::vector<FreqRow> freq_table;
  ClosedFormResiduals closed_form;
  ConventionComparison conventions;
  std::vector<Finding> findings;

  bool has_finding(const std::string& code) const;
};

AuditReport full_audit(const OscillatorProblem& p, const TrialSpace& space,
                       const AuditOptions& options = {});

}  // namespace vhpm
