#include "vhpm/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vhpm {

Polynomial::Polynomial(std::map<int, double> coefficients) {
  for (const auto& [p, c] : coefficients) {
    if (p < 0) throw std::invalid_argument("Polynomial: negative power");
    if (c != 0.0) coeffs_[p] = c;
  }
}

Polynomial Polynomial::monomial(int power, double coefficient) {
  return Polynomial({{power, coefficient}});
}

double Polynomial::coefficient(int power) const {
  auto it = coeffs_.find(power);
  return it == coeffs_.end() ? 0.0 : it->second;
}

int Polynomial::degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

bool Polynomial::is_zero() const { return coeffs_.empty(); }

bool Polynomial::is_odd() const {
  for (const auto& [p, c] : coeffs_)
    if (p % 2 == 0) return false;
  return true;
}

double Polynomial::evaluate(double u) const {
  // Horner over the dense range; degrees here are small.
  double acc = 0.0;
  for (int p = degree(); p >= 0; --p) acc = acc * u + coefficient(p);
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::map<int, double> out;
  for (const auto& [p, c] : coeffs_)
    if (p > 0) out[p - 1] = p * c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative() const {
  std::map<int, double> out;
  for (const auto& [p, c] : coeffs_) out[p + 1] = c / (p + 1);
  return Polynomial(std::move(out));
}

TrigSeries Polynomial::compose(const TrigSeries& u) const {
  TrigSeries out(u.base_freq());
  TrigSeries u_pow = TrigSeries::constant(u.base_freq(), 1.0);
  int current = 0;
  for (const auto& [p, c] : coeffs_) {
    for (; current < p; ++current) u_pow = multiply(u_pow, u);
    out += scale(u_pow, c);
  }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::map<int, double> out = coeffs_;
  for (const auto& [p, c] : other.coeffs_) out[p] += c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(double factor) const {
  std::map<int, double> out;
  for (const auto& [p, c] : coeffs_) out[p] = c * factor;
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [p, c] : coeffs_) {
    if (!first) os << ',';
    os << p << ':' << c;
    first = false;
  }
  return os.str();
}

}  // namespace vhpm
