#pragma once

#include <stdexcept>
#include <string>

namespace vhpm {

/// Two series with different base frequencies were combined.
class frequency_mismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A harmonic index beyond TrigSeries::kMaxHarmonic was requested or produced.
class harmonic_overflow : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Numerical domain failure: negative radicand, singular system, non-oscillatory
/// potential, integrator divergence, finite-difference step underflow.
class numeric_domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace vhpm
