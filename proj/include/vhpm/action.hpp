#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vhpm/oscillator.hpp"
#include "vhpm/trig_series.hpp"

namespace vhpm {

/// Fixed combination of cosine harmonics, instantiated at a base frequency on demand.
struct BasisShape {
  std::map<int, double> cos_harmonics;

  TrigSeries at(double omega) const;
  bool operator==(const BasisShape&) const = default;
};

/// Ordered, linearly independent set of basis shapes; the correction is
/// u1 = sum_i B_i phi_i(omega t).
class TrialSpace {
 public:
  /// Throws std::invalid_argument for an empty basis, an all-zero shape, or a
  /// rank-deficient set of shapes.
  TrialSpace(std::string name, std::vector<BasisShape> basis);

  const std::string& name() const { return name_; }
  const std::vector<BasisShape>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }

  /// u1 for the given amplitudes.
  TrigSeries correction(const Eigen::VectorXd& amplitudes, double omega) const;

 private:
  std::string name_;
  std::vector<BasisShape> basis_;
};

/// B [cos(wt) - cos(5wt)/3]
TrialSpace al_single();
/// B1 [cos(wt) - cos(3wt)/5] + B3 [cos(3wt)/5 - cos(5wt)/7]
TrialSpace al_double();

enum class TrialPreset { custom, al_single, al_double };

/// Identifies a preset by basis content, independent of the label.
TrialPreset identify_preset(const TrialSpace& space);

/// J(B) = B^T M B / 2 + g^T B.
struct QuadraticForm {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd linear;

  double value(const Eigen::VectorXd& b) const;
  Eigen::VectorXd gradient(const Eigen::VectorXd& b) const;
};

/// Closed-form assembly of the first-order action
///
///   J(u1) = int_0^T [ -u1'^2/2 + omega^2 u1^2/2 + forcing1 u1 ] dt,  T = 2 pi / omega
///
///   M_ij = int_0^T [ -phi_i' phi_j' + omega^2 phi_i phi_j ] dt
///   g_i  = int_0^T forcing1 phi_i dt
QuadraticForm assemble(const OscillatorProblem& p, const TrialSpace& space, double omega);

/// Solves M B = -g. Throws numeric_domain_error when M is singular.
Eigen::VectorXd solve_B(const QuadraticForm& q);

/// J at (omega, B).
double action_value(const OscillatorProblem& p, const TrialSpace& space, double omega,
                    const Eigen::VectorXd& amplitudes);

/// Integrand of J at time t; used to convert between period conventions.
double action_integrand(const OscillatorProblem& p, const TrialSpace& space, double omega,
                        const Eigen::VectorXd& amplitudes, double t);

/// moving_limit: T = 2 pi / omega moves with omega (default).
/// fixed_limit:  the upper limit is frozen at its current value while differentiating.
enum class PeriodConvention { moving_limit, fixed_limit };

/// dJ/domega at fixed B. Central differences with h = 1e-5 omega and one
/// Richardson level for the moving limit; the fixed-limit value adds the
/// boundary term (2 pi / omega^2) * integrand(0). Throws numeric_domain_error
/// when the step underflows.
double d_omega(const OscillatorProblem& p, const TrialSpace& space, double omega,
               const Eigen::VectorXd& amplitudes,
               PeriodConvention convention = PeriodConvention::moving_limit);

struct Bracket {
  double lo;
  double hi;
};

/// [0.5, 3] times sqrt(fundamental_frequency_sq(p)).
Bracket default_bracket(const OscillatorProblem& p);

struct SolverOptions {
  std::optional<Bracket> bracket;
  int grid_points = 512;
  double omega_rel_tol = 1e-12;
  double grad_tol = 1e-10;
  double triviality_tol = 1e-10;
  int continuation_steps = 8;
  PeriodConvention convention = PeriodConvention::moving_limit;
};

struct StationaryPoint {
  double omega;
  Eigen::VectorXd amplitudes;
  double action;
  double grad_norm;
  std::string branch;  // "trivial-B", "continued-from-linear" or "isolated"
  bool continued_from_linear = false;
};

/// All joint solutions of {M(omega) B + g(omega) = 0, dJ/domega = 0} in the
/// bracket, sorted by omega. Scans B(omega) = solve_B on a uniform grid for
/// sign changes of dJ/domega and also the B = 0 ray, where all g_i(omega)
/// must vanish together. The point reached by continuation in epsilon from
/// the linear oscillator (B = 0, omega = omega0) is flagged.
std::vector<StationaryPoint> solve_stationary(const OscillatorProblem& p, const TrialSpace& space,
                                              const SolverOptions& options = {});

std::vector<StationaryPoint> solve_stationary(const OscillatorProblem& p, const TrialSpace& space,
                                              Bracket bracket, SolverOptions options = {});

/// The continued-from-linear point if flagged, else the first point, else nullopt.
std::optional<StationaryPoint> preferred_branch(const std::vector<StationaryPoint>& points);

}  // namespace vhpm
