#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "vhpm/errors.hpp"
#include "vhpm/trig_series.hpp"

using namespace vhpm;

namespace {

constexpr double kPi = std::numbers::pi;

TrigSeries random_series(std::mt19937& rng, double w, int max_k) {
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::uniform_int_distribution<int> k_dist(0, max_k);
  TrigSeries s(w);
  for (int i = 0; i < 5; ++i) {
    s.add_cos(k_dist(rng), coeff(rng));
    const int k = k_dist(rng);
    if (k > 0) s.add_sin(k, coeff(rng));
  }
  return s;
}

}  // namespace

TEST_CASE("add") {
  const double w = 1.7;
  const TrigSeries c1 = TrigSeries::cosine(w, 1);

  CHECK((c1 + c1).cos_coeff(1) == 2.0);
  const TrigSeries sum = c1 + TrigSeries(w);
  CHECK(sum.cos_coeff(1) == 1.0);
  CHECK(sum.cos_terms().size() == 1);
  const TrigSeries mixed = c1 + TrigSeries::sine(w, 1);
  CHECK(mixed.cos_coeff(1) == 1.0);
  CHECK(mixed.sin_coeff(1) == 1.0);

  CHECK_THROWS_AS(add(c1, TrigSeries::cosine(1.7000000000000002, 1)), frequency_mismatch);
}

TEST_CASE("multiply: product-to-sum") {
  const double w = 0.9;
  const TrigSeries sq = TrigSeries::cosine(w, 1) * TrigSeries::cosine(w, 1);
  CHECK(sq.cos_coeff(0) == 0.5);
  CHECK(sq.cos_coeff(2) == 0.5);

  const TrigSeries p15 = TrigSeries::cosine(w, 1) * TrigSeries::cosine(w, 5);
  CHECK(p15.cos_coeff(4) == 0.5);
  CHECK(p15.cos_coeff(6) == 0.5);
  CHECK(p15.max_harmonic() == 6);

  const TrigSeries zero = TrigSeries::cosine(w, 3, 2.0) * TrigSeries(w);
  CHECK(zero.empty());

  // sin(2x) cos(x) = (sin 3x + sin x) / 2 ; sin x sin x = (1 - cos 2x) / 2
  const TrigSeries sc = TrigSeries::sine(w, 2) * TrigSeries::cosine(w, 1);
  CHECK(sc.sin_coeff(3) == doctest::Approx(0.5));
  CHECK(sc.sin_coeff(1) == doctest::Approx(0.5));
  const TrigSeries ss = TrigSeries::sine(w, 1) * TrigSeries::sine(w, 1);
  CHECK(ss.cos_coeff(0) == doctest::Approx(0.5));
  CHECK(ss.cos_coeff(2) == doctest::Approx(-0.5));
  // cos x sin x carries no sin(0) term.
  const TrigSeries cs = TrigSeries::cosine(w, 1) * TrigSeries::sine(w, 1);
  CHECK(cs.sin_terms().size() == 1);
  CHECK(cs.sin_coeff(2) == doctest::Approx(0.5));

  CHECK_THROWS_AS(TrigSeries::cosine(w, 1) * TrigSeries::cosine(2 * w, 1), frequency_mismatch);
}

TEST_CASE("harmonic index bound") {
  const double w = 1.0;
  CHECK_NOTHROW(TrigSeries::cosine(w, 64));
  CHECK(multiply(TrigSeries::cosine(w, 32), TrigSeries::cosine(w, 32)).cos_coeff(64) == 0.5);
  CHECK_THROWS_AS(TrigSeries::cosine(w, 65), harmonic_overflow);
  CHECK_THROWS_AS(multiply(TrigSeries::cosine(w, 40), TrigSeries::sine(w, 30)), harmonic_overflow);
  CHECK_THROWS_AS(power(TrigSeries::cosine(w, 9), 8), harmonic_overflow);
  CHECK_THROWS_AS(TrigSeries::sine(w, 0), std::invalid_argument);
  CHECK_THROWS_AS(TrigSeries(0.0), std::invalid_argument);
  CHECK_THROWS_AS(TrigSeries(-1.0), std::invalid_argument);
}

TEST_CASE("power") {
  const double w = 2.3, a = 1.6;
  const TrigSeries cube = power(TrigSeries::cosine(w, 1, a), 3);
  CHECK(cube.cos_coeff(1) == doctest::Approx(0.75 * a * a * a).epsilon(1e-15));
  CHECK(cube.cos_coeff(3) == doctest::Approx(0.25 * a * a * a).epsilon(1e-15));
  CHECK(cube.cos_coeff(0) == 0.0);
  CHECK(cube.cos_coeff(2) == 0.0);

  const TrigSeries s = TrigSeries::cosine(w, 2, 3.0) + TrigSeries::sine(w, 1, -1.0);
  const TrigSeries zeroth = power(s, 0);
  CHECK(zeroth.cos_coeff(0) == 1.0);
  CHECK(zeroth.max_harmonic() == 0);
  const TrigSeries first = power(s, 1);
  CHECK(first.cos_coeff(2) == 3.0);
  CHECK(first.sin_coeff(1) == -1.0);
  CHECK_THROWS_AS(power(s, -1), std::invalid_argument);
}

TEST_CASE("differentiate") {
  const double w = 1.25;
  const TrigSeries d1 = differentiate(TrigSeries::cosine(w, 1));
  CHECK(d1.sin_coeff(1) == -w);
  CHECK(d1.cos_terms().empty());
  CHECK(differentiate(TrigSeries::constant(w, 4.0)).empty());
  CHECK(differentiate(TrigSeries::sine(w, 3)).cos_coeff(3) == 3.0 * w);
}

TEST_CASE("integrate_over_period") {
  const double w = 0.8;
  CHECK(integrate_over_period(TrigSeries::cosine(w, 2) * TrigSeries::cosine(w, 5)) == 0.0);
  CHECK(integrate_over_period(TrigSeries::cosine(w, 1) * TrigSeries::cosine(w, 1)) ==
        doctest::Approx(kPi / w).epsilon(1e-15));
  CHECK(integrate_over_period(TrigSeries::constant(w, 3.0)) ==
        doctest::Approx(3.0 * 2.0 * kPi / w).epsilon(1e-15));
}

TEST_CASE("evaluate") {
  const double w = 1.9, a = 0.7;
  CHECK(TrigSeries::cosine(w, 1).evaluate(0.0) == 1.0);
  CHECK(evaluate(TrigSeries::sine(w, 5), 0.0) == 0.0);
  const double half_period = kPi / w;
  CHECK(TrigSeries::cosine(w, 1, a).evaluate(half_period) == doctest::Approx(-a).epsilon(1e-15));
}

TEST_CASE("pruning is opt-in") {
  const double w = 1.0;
  TrigSeries s = TrigSeries::cosine(w, 1) - TrigSeries::cosine(w, 1);
  s.add_cos(3, 1e-14);
  CHECK(s.cos_terms().size() == 2);
  CHECK(s.pruned(0.0).cos_terms().size() == 1);
  CHECK(s.pruned(1e-12).empty());
}

TEST_CASE("property: orthogonality up to harmonic 12") {
  const double w = 1.37;
  for (int k = 0; k <= 12; ++k) {
    for (int m = 0; m <= 12; ++m) {
      const double cc =
          integrate_over_period(TrigSeries::cosine(w, k) * TrigSeries::cosine(w, m));
      double expected = 0.0;
      if (k == m) expected = k == 0 ? 2.0 * kPi / w : kPi / w;
      CHECK(cc == doctest::Approx(expected).epsilon(1e-14));
      if (k >= 1 && m >= 1) {
        const double ss = integrate_over_period(TrigSeries::sine(w, k) * TrigSeries::sine(w, m));
        CHECK(ss == doctest::Approx(k == m ? kPi / w : 0.0).epsilon(1e-14));
      }
      if (m >= 1) {
        CHECK(integrate_over_period(TrigSeries::cosine(w, k) * TrigSeries::sine(w, m)) == 0.0);
      }
    }
  }
}

TEST_CASE("property: evaluation homomorphism") {
  std::mt19937 rng(20240611);
  std::uniform_real_distribution<double> freq(0.3, 4.0);
  std::uniform_real_distribution<double> time(-10.0, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double w = freq(rng);
    const TrigSeries a = random_series(rng, w, 12);
    const TrigSeries b = random_series(rng, w, 12);
    const TrigSeries ab = a * b;
    for (int i = 0; i < 32; ++i) {
      const double t = time(rng);
      const double expected = a.evaluate(t) * b.evaluate(t);
      CHECK(std::abs(ab.evaluate(t) - expected) <= 1e-12 * (1.0 + std::abs(expected)));
    }
  }
}

TEST_CASE("property: derivative matches central differences, second order") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> time(0.0, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double w = 1.1;
    const TrigSeries a = random_series(rng, w, 6);
    const TrigSeries da = differentiate(a);
    const double t = time(rng);
    auto err = [&](double h) {
      return std::abs((a.evaluate(t + h) - a.evaluate(t - h)) / (2 * h) - da.evaluate(t));
    };
    const double e1 = err(1e-2), e2 = err(5e-3);
    if (e1 < 1e-10) continue;  // derivative of a locally near-linear sample
    const double order = std::log2(e1 / e2);
    CHECK(order == doctest::Approx(2.0).epsilon(0.05));
  }
}

TEST_CASE("property: closed-form period integral equals Gauss-Legendre quadrature") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> freq(0.5, 3.0);
  for (int trial = 0; trial < 30; ++trial) {
    const double w = freq(rng);
    const TrigSeries a = random_series(rng, w, 8) * random_series(rng, w, 8);
    const double T = 2.0 * kPi / w;
    const double numeric = oracle::composite_gauss([&](double t) { return a.evaluate(t); }, 0.0, T);
    const double closed = integrate_over_period(a);
    CHECK(std::abs(closed - numeric) <= 1e-12 * std::max(1.0, std::abs(numeric)) * T);
  }
}

TEST_CASE("l2_norm matches quadrature of the square") {
  const double w = 1.4;
  std::mt19937 rng(3);
  const TrigSeries a = random_series(rng, w, 6);
  const double T = 2.0 * kPi / w;
  const double numeric = std::sqrt(
      oracle::composite_gauss([&](double t) { return std::pow(a.evaluate(t), 2); }, 0.0, T));
  CHECK(l2_norm(a) == doctest::Approx(numeric).epsilon(1e-12));
}
