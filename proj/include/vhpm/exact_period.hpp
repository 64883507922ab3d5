#pragma once

#include <optional>
#include <string>

#include "vhpm/oscillator.hpp"

namespace vhpm {

enum class PeriodMethod { quadrature, ode_event };

std::string to_string(PeriodMethod method);

/// Extra measurements from the ODE route.
struct TrajectoryCheck {
  double quarter_time;        // first zero crossing of u
  double energy_drift;        // |E(T) - E(0)| / E(0)
  double half_period_value;   // u(T/2), equals -A for a symmetric well
};

struct ExactResult {
  double period;
  double frequency;  // 2 pi / period
  PeriodMethod method;
  double est_error;  // relative
  std::optional<TrajectoryCheck> trajectory;
};

/// Throws numeric_domain_error unless f is odd and V(A) > V(u) on [0, A).
void require_oscillatory(const OscillatorProblem& p);

/// T = 4 int_0^A du / sqrt(2 (V(A) - V(u))), with u = A sin(theta) and the
/// difference V(A) - V(u) factored through (A - u) so the integrand is
/// smooth. Gauss-Legendre with 16, 32, ... 1024 nodes until successive
/// estimates agree to 1e-13 relative.
ExactResult exact_period_quadrature(const OscillatorProblem& p);

/// Dormand-Prince 5(4) with dense output at 1e-12 tolerance from (A, 0);
/// T = 4 * (first zero crossing of u), refined by bisection on the dense
/// output. Throws numeric_domain_error if no crossing within 100 nominal periods.
ExactResult exact_period_ode(const OscillatorProblem& p);

}  // namespace vhpm
