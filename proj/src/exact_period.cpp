#include "vhpm/exact_period.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/numeric/odeint.hpp>

#include "vhpm/errors.hpp"
#include "vhpm/quadrature.hpp"

namespace vhpm {

namespace odeint = boost::numeric::odeint;

std::string to_string(PeriodMethod method) {
  return method == PeriodMethod::quadrature ? "quadrature" : "ode-event";
}

namespace {

// (V(A) - V(u)) / (A - u), expanded term by term; V'(A) at u = A.
double secant_slope(const Polynomial& v, double a, double u) {
  double sum = 0.0;
  for (const auto& [n, c] : v.coefficients()) {
    double term = 0.0;
    double a_pow = std::pow(a, n - 1);
    double u_pow = 1.0;
    for (int j = 0; j < n; ++j) {
      term += a_pow * u_pow;
      u_pow *= u;
      a_pow = a != 0.0 ? a_pow / a : 0.0;
    }
    sum += c * term;
  }
  return sum;
}

double nominal_period(const OscillatorProblem& p) {
  const double w2 = fundamental_frequency_sq(p);
  if (w2 > 0.0) return 2.0 * std::numbers::pi / std::sqrt(w2);
  const Polynomial v = total_potential(p);
  return 2.0 * std::numbers::pi / std::sqrt(v.derivative().evaluate(p.amplitude) / p.amplitude);
}

}  // namespace

void require_oscillatory(const OscillatorProblem& p) {
  if (!p.nonlinearity.is_odd())
    throw numeric_domain_error("oracle: nonlinearity must be odd (symmetric well)");
  if (!(p.amplitude > 0.0)) throw numeric_domain_error("oracle: amplitude must be > 0");
  const Polynomial v = total_potential(p);
  constexpr int kChecks = 256;
  for (int i = 0; i <= kChecks; ++i) {
    const double u = p.amplitude * i / kChecks;
    if (!(secant_slope(v, p.amplitude, u) > 0.0))
      throw numeric_domain_error("oracle: V(A) <= V(u) inside [0, A); no oscillation of amplitude A");
  }
}

ExactResult exact_period_quadrature(const OscillatorProblem& p) {
  require_oscillatory(p);
  const Polynomial v = total_potential(p);
  const double a = p.amplitude;
  auto integrand = [&](double theta) {
    const double s = std::sin(theta);
    return std::sqrt(a * (1.0 + s) / (2.0 * secant_slope(v, a, a * s)));
  };

  double previous = 4.0 * integrate(gauss_legendre(16), integrand, 0.0, 0.5 * std::numbers::pi);
  double current = previous;
  double diff = std::numeric_limits<double>::infinity();
  for (int nodes = 32; nodes <= 1024; nodes *= 2) {
    current = 4.0 * integrate(gauss_legendre(nodes), integrand, 0.0, 0.5 * std::numbers::pi);
    diff = std::abs(current - previous) / std::abs(current);
    if (diff < 1e-13) break;
    previous = current;
  }
  return {current, 2.0 * std::numbers::pi / current, PeriodMethod::quadrature, diff, std::nullopt};
}

ExactResult exact_period_ode(const OscillatorProblem& p) {
  require_oscillatory(p);
  using State = std::array<double, 2>;
  const Polynomial v = total_potential(p);
  auto rhs = [&p](const State& x, State& dxdt, double) {
    dxdt[0] = x[1];
    dxdt[1] = -p.omega0_sq * x[0] - p.epsilon * p.nonlinearity.evaluate(x[0]);
  };
  auto energy = [&v](const State& x) { return 0.5 * x[1] * x[1] + v.evaluate(x[0]); };

  constexpr double kTol = 1e-12;
  const double t_max = 100.0 * nominal_period(p);
  const State start{p.amplitude, 0.0};
  auto stepper = odeint::make_dense_output(kTol, kTol, odeint::runge_kutta_dopri5<State>());
  stepper.initialize(start, 0.0, 1e-3 * nominal_period(p));

  double quarter = -1.0;
  while (stepper.current_time() < t_max) {
    const double t0 = stepper.current_time();
    const double u0 = stepper.current_state()[0];
    stepper.do_step(rhs);
    if (stepper.current_state()[0] > 0.0) continue;
    // u went from > 0 to <= 0 in [t0, t1]; bisect on the dense output.
    double lo = t0, hi = stepper.current_time();
    if (u0 <= 0.0) hi = t0;
    State x;
    while (hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi) {
      const double mid = 0.5 * (lo + hi);
      stepper.calc_state(mid, x);
      (x[0] > 0.0 ? lo : hi) = mid;
    }
    quarter = 0.5 * (lo + hi);
    break;
  }
  if (quarter <= 0.0)
    throw numeric_domain_error("oracle: no zero crossing within 100 nominal periods");
  const double period = 4.0 * quarter;

  // Integrate one full period, sampling the half period on the way.
  State x = start;
  auto controlled = odeint::make_controlled(kTol, kTol, odeint::runge_kutta_dopri5<State>());
  odeint::integrate_adaptive(controlled, rhs, x, 0.0, 0.5 * period, 1e-3 * period);
  const double half_value = x[0];
  odeint::integrate_adaptive(controlled, rhs, x, 0.5 * period, period, 1e-3 * period);
  const double e0 = energy(start);
  const double drift = std::abs(energy(x) - e0) / std::abs(e0);

  return {period, 2.0 * std::numbers::pi / period, PeriodMethod::ode_event, kTol,
          TrajectoryCheck{quarter, drift, half_value}};
}

}  // namespace vhpm
