#pragma once

#include "vhpm/oscillator.hpp"
#include "vhpm/trig_series.hpp"

namespace vhpm {

// Homotopy deformation of u'' + omega0^2 u + eps f(u) = 0 around a linear
// oscillator with trial frequency omega:
//
//   u'' + omega^2 u + p [eps f(u) + (omega0^2 - omega^2) u] = 0
//
// Expanding u = u0 + p u1 + ... gives
//   order 0:  u0'' + omega^2 u0 = 0,                  u0 = A cos(omega t)
//   order 1:  u1'' + omega^2 u1 + eps f(u0) + (omega0^2 - omega^2) u0 = 0
// Only these two orders are materialized.

struct HomotopyHierarchy {
  OscillatorProblem problem;
  double omega;
  TrigSeries order0;
  TrigSeries forcing1;
};

HomotopyHierarchy make_hierarchy(const OscillatorProblem& p, double omega);

/// A cos(omega t).
TrigSeries order0_solution(const OscillatorProblem& p, double omega);

/// eps f(u0) + (omega0^2 - omega^2) u0.
TrigSeries order1_forcing(const OscillatorProblem& p, double omega);

/// u1'' + omega^2 u1 + forcing1. Throws frequency_mismatch if u1 is not on h.omega.
TrigSeries order1_residual(const HomotopyHierarchy& h, const TrigSeries& u1);

/// Residual of the deformed equation at embedding value pbar in [0, 1].
/// At pbar = 1 this is the residual of the original oscillator equation.
TrigSeries deformed_residual(const OscillatorProblem& p, const TrigSeries& u, double pbar,
                             double omega);

struct ResidualNorms {
  double max_abs;
  double l2;
};

ResidualNorms residual_norms(const TrigSeries& r);

}  // namespace vhpm
