#include "vhpm/trig_series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "vhpm/errors.hpp"

namespace vhpm {

namespace {

void check_index(int k, int lowest) {
  if (k < lowest) {
    throw std::invalid_argument("TrigSeries: harmonic index " + std::to_string(k) +
                                " below " + std::to_string(lowest));
  }
  if (k > TrigSeries::kMaxHarmonic) {
    throw harmonic_overflow("TrigSeries: harmonic index " + std::to_string(k) +
                            " exceeds limit " + std::to_string(TrigSeries::kMaxHarmonic));
  }
}

void check_same_freq(const TrigSeries& a, const TrigSeries& b) {
  if (a.base_freq() != b.base_freq()) {
    throw frequency_mismatch("TrigSeries: base frequencies differ (" +
                             std::to_string(a.base_freq()) + " vs " +
                             std::to_string(b.base_freq()) + ")");
  }
}

}  // namespace

TrigSeries::TrigSeries(double base_freq) : base_freq_(base_freq) {
  if (!(base_freq > 0.0) || !std::isfinite(base_freq)) {
    throw std::invalid_argument("TrigSeries: base frequency must be finite and > 0");
  }
}

TrigSeries TrigSeries::constant(double base_freq, double value) {
  TrigSeries s(base_freq);
  s.add_cos(0, value);
  return s;
}

TrigSeries TrigSeries::cosine(double base_freq, int harmonic, double amplitude) {
  TrigSeries s(base_freq);
  s.add_cos(harmonic, amplitude);
  return s;
}

TrigSeries TrigSeries::sine(double base_freq, int harmonic, double amplitude) {
  TrigSeries s(base_freq);
  s.add_sin(harmonic, amplitude);
  return s;
}

double TrigSeries::cos_coeff(int harmonic) const {
  auto it = cos_.find(harmonic);
  return it == cos_.end() ? 0.0 : it->second;
}

double TrigSeries::sin_coeff(int harmonic) const {
  auto it = sin_.find(harmonic);
  return it == sin_.end() ? 0.0 : it->second;
}

void TrigSeries::add_cos(int harmonic, double value) {
  check_index(harmonic, 0);
  cos_[harmonic] += value;
}

void TrigSeries::add_sin(int harmonic, double value) {
  check_index(harmonic, 1);
  sin_[harmonic] += value;
}

int TrigSeries::max_harmonic() const {
  int k = 0;
  if (!cos_.empty()) k = cos_.rbegin()->first;
  if (!sin_.empty()) k = std::max(k, sin_.rbegin()->first);
  return k;
}

double TrigSeries::evaluate(double t) const {
  double sum = 0.0;
  for (const auto& [k, c] : cos_) sum += c * std::cos(k * base_freq_ * t);
  for (const auto& [k, s] : sin_) sum += s * std::sin(k * base_freq_ * t);
  return sum;
}

TrigSeries TrigSeries::pruned(double threshold) const {
  TrigSeries out(base_freq_);
  for (const auto& [k, c] : cos_)
    if (std::abs(c) > threshold) out.cos_[k] = c;
  for (const auto& [k, s] : sin_)
    if (std::abs(s) > threshold) out.sin_[k] = s;
  return out;
}

TrigSeries& TrigSeries::operator+=(const TrigSeries& other) {
  check_same_freq(*this, other);
  for (const auto& [k, c] : other.cos_) cos_[k] += c;
  for (const auto& [k, s] : other.sin_) sin_[k] += s;
  return *this;
}

TrigSeries& TrigSeries::operator-=(const TrigSeries& other) {
  check_same_freq(*this, other);
  for (const auto& [k, c] : other.cos_) cos_[k] -= c;
  for (const auto& [k, s] : other.sin_) sin_[k] -= s;
  return *this;
}

TrigSeries& TrigSeries::operator*=(double factor) {
  for (auto& [k, c] : cos_) c *= factor;
  for (auto& [k, s] : sin_) s *= factor;
  return *this;
}

TrigSeries add(const TrigSeries& a, const TrigSeries& b) {
  TrigSeries out = a;
  out += b;
  return out;
}

// Product-to-sum:
//   cos m cos n = (cos(m-n) + cos(m+n)) / 2
//   cos m sin n = (sin(n+m) + sin(n-m)) / 2
//   sin m sin n = (cos(m-n) - cos(m+n)) / 2
// sin of a negative index flips sign; sin(0) vanishes structurally.
TrigSeries multiply(const TrigSeries& a, const TrigSeries& b) {
  check_same_freq(a, b);
  const int top = a.max_harmonic() + b.max_harmonic();
  if (top > TrigSeries::kMaxHarmonic) {
    throw harmonic_overflow("multiply: product reaches harmonic " + std::to_string(top) +
                            ", limit is " + std::to_string(TrigSeries::kMaxHarmonic));
  }
  TrigSeries out(a.base_freq());
  auto add_signed_sin = [&out](int k, double v) {
    if (k > 0) out.add_sin(k, v);
    else if (k < 0) out.add_sin(-k, -v);
  };
  for (const auto& [m, x] : a.cos_terms()) {
    for (const auto& [n, y] : b.cos_terms()) {
      const double h = 0.5 * x * y;
      out.add_cos(std::abs(m - n), h);
      out.add_cos(m + n, h);
    }
    for (const auto& [n, y] : b.sin_terms()) {
      const double h = 0.5 * x * y;
      add_signed_sin(n + m, h);
      add_signed_sin(n - m, h);
    }
  }
  for (const auto& [m, x] : a.sin_terms()) {
    for (const auto& [n, y] : b.cos_terms()) {
      const double h = 0.5 * x * y;
      add_signed_sin(m + n, h);
      add_signed_sin(m - n, h);
    }
    for (const auto& [n, y] : b.sin_terms()) {
      const double h = 0.5 * x * y;
      out.add_cos(std::abs(m - n), h);
      out.add_cos(m + n, -h);
    }
  }
  return out;
}

TrigSeries scale(const TrigSeries& a, double factor) {
  TrigSeries out = a;
  out *= factor;
  return out;
}

TrigSeries power(const TrigSeries& a, int n) {
  if (n < 0) throw std::invalid_argument("power: exponent must be non-negative");
  TrigSeries out = TrigSeries::constant(a.base_freq(), 1.0);
  for (int i = 0; i < n; ++i) out = multiply(out, a);
  return out;
}

TrigSeries differentiate(const TrigSeries& a) {
  const double w = a.base_freq();
  TrigSeries out(w);
  for (const auto& [k, c] : a.cos_terms())
    if (k > 0) out.add_sin(k, -k * w * c);
  for (const auto& [k, s] : a.sin_terms()) out.add_cos(k, k * w * s);
  return out;
}

double integrate_over_period(const TrigSeries& a) {
  return 2.0 * std::numbers::pi / a.base_freq() * a.cos_coeff(0);
}

TrigSeries operator+(const TrigSeries& a, const TrigSeries& b) { return add(a, b); }

TrigSeries operator-(const TrigSeries& a, const TrigSeries& b) {
  TrigSeries out = a;
  out -= b;
  return out;
}

TrigSeries operator-(const TrigSeries& a) { return scale(a, -1.0); }
TrigSeries operator*(const TrigSeries& a, const TrigSeries& b) { return multiply(a, b); }
TrigSeries operator*(double factor, const TrigSeries& a) { return scale(a, factor); }
TrigSeries operator*(const TrigSeries& a, double factor) { return scale(a, factor); }

double max_abs_coefficient(const TrigSeries& a) {
  double m = 0.0;
  for (const auto& [k, c] : a.cos_terms()) m = std::max(m, std::abs(c));
  for (const auto& [k, s] : a.sin_terms()) m = std::max(m, std::abs(s));
  return m;
}

double l2_norm(const TrigSeries& a) {
  // Mean square: c0^2 + (1/2) sum_{k>=1} (c_k^2 + s_k^2).
  double mean_sq = 0.0;
  for (const auto& [k, c] : a.cos_terms()) mean_sq += (k == 0 ? 1.0 : 0.5) * c * c;
  for (const auto& [k, s] : a.sin_terms()) mean_sq += 0.5 * s * s;
  return std::sqrt(mean_sq * 2.0 * std::numbers::pi / a.base_freq());
}

}  // namespace vhpm
