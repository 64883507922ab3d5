#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "vhpm/oscillator.hpp"

using namespace vhpm;

TEST_CASE("duffing preset") {
  const OscillatorProblem p = duffing(1.0, 1.0);
  CHECK(p.omega0_sq == 1.0);
  CHECK(p.epsilon == 1.0);
  CHECK(p.amplitude == 1.0);
  CHECK(p.nonlinearity == Polynomial::monomial(3));
  CHECK(is_duffing(p));

  const OscillatorProblem linear = duffing(1.0, 0.0);
  CHECK(fundamental_frequency_sq(linear) == 1.0);

  CHECK_THROWS_AS(duffing(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(duffing(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("make_oscillator rejects non-odd or low powers") {
  CHECK_THROWS_AS(make_oscillator(1.0, 1.0, Polynomial::monomial(2), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_oscillator(1.0, 1.0, Polynomial::monomial(1), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_oscillator(-0.5, 1.0, Polynomial::monomial(3), 1.0), std::invalid_argument);
  CHECK_NOTHROW(make_oscillator(0.0, 1.0, Polynomial({{3, 1.0}, {5, 2.0}}), 1.0));
}

TEST_CASE("potential") {
  CHECK(potential(Polynomial::monomial(3)) == Polynomial::monomial(4, 0.25));
  CHECK(potential(Polynomial()).is_zero());
  const Polynomial F = potential(Polynomial({{3, 1.0}, {5, 2.0}}));
  CHECK(F.coefficient(4) == 0.25);
  CHECK(F.coefficient(6) == doctest::Approx(1.0 / 3.0));
  CHECK(F.evaluate(0.0) == 0.0);
}

TEST_CASE("total_potential") {
  const Polynomial v = total_potential(duffing(1.3, 0.7));
  CHECK(v.coefficient(2) == 0.5);
  CHECK(v.coefficient(4) == doctest::Approx(0.7 / 4.0));

  CHECK(total_potential(duffing(2.0, 0.0)) == Polynomial::monomial(2, 0.5));

  const Polynomial v5 = total_potential(make_oscillator(1.0, 2.0, Polynomial::monomial(5), 1.0));
  CHECK(v5.coefficient(2) == 0.5);
  CHECK(v5.coefficient(6) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("property: d/du potential(f) == f, total potential even") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> c(-3.0, 3.0);
  for (int trial = 0; trial < 25; ++trial) {
    const Polynomial f({{3, c(rng)}, {5, c(rng)}, {7, c(rng)}});
    const Polynomial back = potential(f).derivative();
    for (int power : {3, 5, 7}) CHECK(back.coefficient(power) == doctest::Approx(f.coefficient(power)));
    const OscillatorProblem p = make_oscillator(1.5, c(rng), f, 1.0);
    const Polynomial v = total_potential(p);
    for (const auto& [power, coeff] : v.coefficients()) CHECK(power % 2 == 0);
    for (double u : {0.1, 0.7, 1.3}) CHECK(v.evaluate(u) == doctest::Approx(v.evaluate(-u)));
  }
}

TEST_CASE("fundamental frequency: Duffing and quintic") {
  const OscillatorProblem p = duffing(2.0, 0.5);
  CHECK(fundamental_frequency_sq(p) == doctest::Approx(1.0 + 0.75 * 0.5 * 4.0));
  // cos^5 = (10 cos + 5 cos 3 + cos 5) / 16
  const OscillatorProblem q = make_oscillator(2.0, 3.0, Polynomial::monomial(5), 1.5);
  CHECK(fundamental_frequency_sq(q) == doctest::Approx(2.0 + 3.0 * 10.0 / 16.0 * std::pow(1.5, 4)));
}

TEST_CASE("polynomial compose") {
  const TrigSeries u = TrigSeries::cosine(1.0, 1, 2.0);
  const TrigSeries fu = Polynomial({{3, 1.0}, {5, 1.0}}).compose(u);
  for (double t : {0.0, 0.4, 1.9}) {
    const double x = u.evaluate(t);
    CHECK(fu.evaluate(t) == doctest::Approx(x * x * x + std::pow(x, 5)));
  }
  CHECK(Polynomial({{3, 1.5}, {5, -2.0}}).to_string() == "3:1.5,5:-2");
}
