#pragma once

#include "vhpm/polynomial.hpp"

namespace vhpm {

/// u'' + omega0^2 u + epsilon f(u) = 0,  u(0) = A, u'(0) = 0,
/// with f an odd polynomial built from powers >= 3.
struct OscillatorProblem {
  double omega0_sq = 1.0;
  double epsilon = 0.0;
  Polynomial nonlinearity;
  double amplitude = 1.0;
};

/// Validates and builds a problem. Throws std::invalid_argument when
/// A <= 0, omega0^2 < 0, or f has an even power or a power below 3.
OscillatorProblem make_oscillator(double omega0_sq, double epsilon, Polynomial nonlinearity,
                                  double amplitude);

/// u'' + u + eps u^3 = 0 with u(0) = A.
OscillatorProblem duffing(double amplitude, double epsilon);

/// F with dF/du = f and F(0) = 0.
Polynomial potential(const Polynomial& f);

/// V(u) = omega0^2 u^2 / 2 + epsilon F(u).
Polynomial total_potential(const OscillatorProblem& p);

/// True for omega0^2 == 1 and f == u^3 exactly.
bool is_duffing(const OscillatorProblem& p);

/// omega0^2 plus epsilon times the cos(theta) Fourier coefficient of
/// f(A cos theta), divided by A. For Duffing this is 1 + 3 eps A^2 / 4.
double fundamental_frequency_sq(const OscillatorProblem& p);

}  // namespace vhpm
