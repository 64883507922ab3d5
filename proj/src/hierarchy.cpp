#include "vhpm/hierarchy.hpp"

#include <stdexcept>

#include "vhpm/errors.hpp"

namespace vhpm {

namespace {

void require_positive_omega(double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("hierarchy: omega must be > 0");
}

TrigSeries linear_operator(const TrigSeries& u, double omega) {
  return differentiate(differentiate(u)) + scale(u, omega * omega);
}

}  // namespace

HomotopyHierarchy make_hierarchy(const OscillatorProblem& p, double omega) {
  return HomotopyHierarchy{p, omega, order0_solution(p, omega), order1_forcing(p, omega)};
}

TrigSeries order0_solution(const OscillatorProblem& p, double omega) {
  require_positive_omega(omega);
  return TrigSeries::cosine(omega, 1, p.amplitude);
}

TrigSeries order1_forcing(const OscillatorProblem& p, double omega) {
  const TrigSeries u0 = order0_solution(p, omega);
  return scale(p.nonlinearity.compose(u0), p.epsilon) +
         scale(u0, p.omega0_sq - omega * omega);
}

TrigSeries order1_residual(const HomotopyHierarchy& h, const TrigSeries& u1) {
  if (u1.base_freq() != h.omega) {
    throw frequency_mismatch("order1_residual: u1 base frequency differs from hierarchy omega");
  }
  return linear_operator(u1, h.omega) + h.forcing1;
}

TrigSeries deformed_residual(const OscillatorProblem& p, const TrigSeries& u, double pbar,
                             double omega) {
  if (!(pbar >= 0.0 && pbar <= 1.0))
    throw std::invalid_argument("deformed_residual: embedding parameter outside [0, 1]");
  require_positive_omega(omega);
  if (u.base_freq() != omega)
    throw frequency_mismatch("deformed_residual: u base frequency differs from omega");
  const TrigSeries perturbation =
      scale(p.nonlinearity.compose(u), p.epsilon) + scale(u, p.omega0_sq - omega * omega);
  return linear_operator(u, omega) + scale(perturbation, pbar);
}

ResidualNorms residual_norms(const TrigSeries& r) { return {max_abs_coefficient(r), l2_norm(r)}; }

}  // namespace vhpm
