#include "vhpm/oscillator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vhpm {

OscillatorProblem make_oscillator(double omega0_sq, double epsilon, Polynomial nonlinearity,
                                  double amplitude) {
  if (!(amplitude > 0.0) || !std::isfinite(amplitude))
    throw std::invalid_argument("oscillator: amplitude must be > 0");
  if (!(omega0_sq >= 0.0) || !std::isfinite(omega0_sq))
    throw std::invalid_argument("oscillator: omega0^2 must be >= 0");
  if (!std::isfinite(epsilon)) throw std::invalid_argument("oscillator: epsilon must be finite");
  for (const auto& [power, c] : nonlinearity.coefficients()) {
    if (power % 2 == 0 || power < 3) {
      throw std::invalid_argument("oscillator: nonlinearity power " + std::to_string(power) +
                                  " is not an odd power >= 3");
    }
    if (!std::isfinite(c)) throw std::invalid_argument("oscillator: non-finite coefficient");
  }
  return OscillatorProblem{omega0_sq, epsilon, std::move(nonlinearity), amplitude};
}

OscillatorProblem duffing(double amplitude, double epsilon) {
  return make_oscillator(1.0, epsilon, Polynomial::monomial(3), amplitude);
}

Polynomial potential(const Polynomial& f) { return f.antiderivative(); }

Polynomial total_potential(const OscillatorProblem& p) {
  return Polynomial::monomial(2, 0.5 * p.omega0_sq) + potential(p.nonlinearity) * p.epsilon;
}

bool is_duffing(const OscillatorProblem& p) {
  return p.omega0_sq == 1.0 && p.nonlinearity == Polynomial::monomial(3);
}

double fundamental_frequency_sq(const OscillatorProblem& p) {
  const TrigSeries u0 = TrigSeries::cosine(1.0, 1, p.amplitude);
  const TrigSeries fu = p.nonlinearity.compose(u0);
  return p.omega0_sq + p.epsilon * fu.cos_coeff(1) / p.amplitude;
}

}  // namespace vhpm
