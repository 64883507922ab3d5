#pragma once

#include <map>
#include <string>

#include "vhpm/trig_series.hpp"

namespace vhpm {

/// Real polynomial in one variable, stored sparsely as power -> coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::map<int, double> coefficients);

  static Polynomial monomial(int power, double coefficient = 1.0);

  const std::map<int, double>& coefficients() const { return coeffs_; }
  double coefficient(int power) const;
  int degree() const;
  bool is_zero() const;

  /// True when every nonzero coefficient sits on an odd power.
  bool is_odd() const;

  double evaluate(double u) const;

  Polynomial derivative() const;

  /// Antiderivative normalized to vanish at u = 0.
  Polynomial antiderivative() const;

  /// f(u(t)) expanded as a trigonometric polynomial.
  TrigSeries compose(const TrigSeries& u) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(double factor) const;
  bool operator==(const Polynomial& other) const = default;

  /// "3:1,5:0.5" style rendering, ordered by power.
  std::string to_string() const;

 private:
  std::map<int, double> coeffs_;
};

}  // namespace vhpm
