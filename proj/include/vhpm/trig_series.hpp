#pragma once

#include <map>

namespace vhpm {

/// Finite trigonometric polynomial on a single base frequency omega:
///
///   u(t) = sum_k c_k cos(k omega t) + sum_k s_k sin(k omega t)
///
/// Harmonics that are not stored are zero. Products keep every structurally
/// produced harmonic, including coefficients that cancel to 0.0; use pruned()
/// to drop small terms explicitly.
class TrigSeries {
 public:
  static constexpr int kMaxHarmonic = 64;

  explicit TrigSeries(double base_freq);

  static TrigSeries constant(double base_freq, double value);
  static TrigSeries cosine(double base_freq, int harmonic, double amplitude = 1.0);
  static TrigSeries sine(double base_freq, int harmonic, double amplitude = 1.0);

  double base_freq() const { return base_freq_; }

  double cos_coeff(int harmonic) const;
  double sin_coeff(int harmonic) const;
  const std::map<int, double>& cos_terms() const { return cos_; }
  const std::map<int, double>& sin_terms() const { return sin_; }

  /// Accumulates into the stored coefficient (creates it if absent).
  void add_cos(int harmonic, double value);
  void add_sin(int harmonic, double value);

  /// Largest stored harmonic index, 0 for an empty or constant series.
  int max_harmonic() const;
  bool empty() const { return cos_.empty() && sin_.empty(); }

  double evaluate(double t) const;

  TrigSeries pruned(double threshold) const;

  TrigSeries& operator+=(const TrigSeries& other);
  TrigSeries& operator-=(const TrigSeries& other);
  TrigSeries& operator*=(double factor);

 private:
  double base_freq_;
  std::map<int, double> cos_;
  std::map<int, double> sin_;
};

TrigSeries add(const TrigSeries& a, const TrigSeries& b);
TrigSeries multiply(const TrigSeries& a, const TrigSeries& b);
TrigSeries scale(const TrigSeries& a, double factor);
TrigSeries power(const TrigSeries& a, int n);
TrigSeries differentiate(const TrigSeries& a);

/// Exact integral over one period T = 2 pi / omega, i.e. T * c_0.
double integrate_over_period(const TrigSeries& a);

inline double evaluate(const TrigSeries& a, double t) { return a.evaluate(t); }

TrigSeries operator+(const TrigSeries& a, const TrigSeries& b);
TrigSeries operator-(const TrigSeries& a, const TrigSeries& b);
TrigSeries operator-(const TrigSeries& a);
TrigSeries operator*(const TrigSeries& a, const TrigSeries& b);
TrigSeries operator*(double factor, const TrigSeries& a);
TrigSeries operator*(const TrigSeries& a, double factor);

/// Largest absolute coefficient over both channels.
double max_abs_coefficient(const TrigSeries& a);

/// sqrt of the integral of a(t)^2 over one period (Parseval, closed form).
double l2_norm(const TrigSeries& a);

}  // namespace vhpm
