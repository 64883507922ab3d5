// Prints one PASS/FAIL line per acceptance criterion; exit status is the
// number of failures (capped), so ctest fails on any regression.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vhpm/action.hpp"
#include "vhpm/audit.hpp"
#include "vhpm/exact_period.hpp"
#include "vhpm/hierarchy.hpp"

using namespace vhpm;

namespace {

const double kEps[] = {0.1, 1.0, 10.0};
const double kAmp[] = {0.5, 1.0, 2.0};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Check eq13_reproduction() {
  Check c;
  double worst = 0.0;
  for (double eps : kEps)
    for (double A : kAmp) {
      const auto p = duffing(A, eps);
      const auto sp = preferred_branch(solve_stationary(p, al_single()));
      if (!sp) {
        c.expect(false, fmt("no stationary point at eps=%g A=%g", eps, A));
        continue;
      }
      const double w13 = std::sqrt(1.0 + 0.75 * eps * A * A);
      c.expect(sp->amplitudes.cwiseAbs().maxCoeff() <= 1e-10 * A, fmt("B nonzero at eps=%g A=%g", eps, A));
      c.expect(std::abs(sp->omega - w13) <= 1e-10 * sp->omega, fmt("omega off at eps=%g A=%g", eps, A));
      worst = std::max(worst, rel(sp->omega, w13));
    }
  if (c.ok) c.detail = fmt("max rel |w - w13| = %.2e", worst);
  return c;
}

Check eq16_cross_validation() {
  Check c;
  const auto p = duffing(1.0, 1.0);
  const double w = eq15_frequency(1.0);
  const Eigen::VectorXd b = solve_B(assemble(p, al_double(), w));
  const auto ref = eq16_coefficients(1.0, 1.0, w);
  const double e1 = rel(b[0], ref.b1), e3 = rel(b[1], ref.b3);
  c.expect(e1 <= 1e-8 && e3 <= 1e-8, fmt("B1 err %.2e, B3 err %.2e", e1, e3));
  if (c.ok) c.detail = fmt("B1 = %.12g (err %.1e), B3 = %.12g (err %.1e)", b[0], e1, b[1], e3);
  return c;
}

Check eq15_cross_validation() {
  Check c;
  const auto p = duffing(1.0, 1.0);
  const auto r = full_audit(p, al_double());
  if (!r.selected) {
    c.expect(false, "no stationary point");
    return c;
  }
  const double w15 = eq15_frequency(1.0);
  const double err = rel(r.selected->omega, w15);
  if (err <= 1e-6) {
    c.detail = fmt("solver %.16g vs closed form %.16g (rel %.1e)", r.selected->omega, w15, err);
  } else {
    c.expect(r.has_finding("CLOSED_FORM_MISMATCH"), "deviation without CLOSED_FORM_MISMATCH finding");
    c.detail = fmt("deviation %.2e documented by finding", err);
  }
  return c;
}

Check boundary_violation() {
  Check c;
  double worst = 0.0;
  for (double eps : kEps)
    for (double A : kAmp) {
      const auto r = full_audit(duffing(A, eps), al_double());
      if (!r.selected) {
        c.expect(false, fmt("no point at eps=%g A=%g", eps, A));
        continue;
      }
      const double formula = eq16_u1_at_zero(A, eps * A * A, r.selected->omega);
      worst = std::max(worst, rel(r.bc_u1_at_0, formula));
      c.expect(rel(r.bc_u1_at_0, formula) <= 1e-10, fmt("u1(0) formula mismatch at eps=%g A=%g", eps, A));
      c.expect(r.bc_u1_at_0 != 0.0, fmt("u1(0) == 0 at eps=%g A=%g", eps, A));
    }
  if (c.ok) c.detail = fmt("9 points, max rel err vs formula %.2e", worst);
  return c;
}

Check amplitude_mismatch_identity() {
  Check c;
  int n = 0;
  for (const auto& space : {al_single(), al_double()})
    for (double eps : {0.0, 0.1, 1.0, 10.0})
      for (double A : kAmp) {
        const auto r = full_audit(duffing(A, eps), space);
        c.expect(r.amplitude_mismatch == r.bc_u1_at_0, fmt("differs at eps=%g A=%g", eps, A));
        ++n;
      }
  if (c.ok) c.detail = fmt("%d audits, all bit-identical", n);
  return c;
}

Check trivial_correction() {
  Check c;
  for (double eps : kEps)
    for (double A : kAmp)
      c.expect(full_audit(duffing(A, eps), al_single()).has_finding("TRIVIAL_CORRECTION"),
               fmt("missing at eps=%g A=%g", eps, A));
  if (c.ok) c.detail = "emitted on all 9 grid points";
  return c;
}

Check oracle_integrity() {
  Check c;
  double worst_agree = 0.0, worst_drift = 0.0, worst_pin = 0.0;
  for (const auto& ref : oracle::kDuffingExact) {
    const auto p = duffing(ref.A, ref.eps);
    const auto q = exact_period_quadrature(p);
    const auto o = exact_period_ode(p);
    worst_agree = std::max(worst_agree, rel(o.period, q.period));
    worst_drift = std::max(worst_drift, o.trajectory->energy_drift);
    worst_pin = std::max(worst_pin, rel(q.frequency, ref.omega));
    // eps A^2 scaling: the A=1 problem with eps' = eps A^2 has the same frequency.
    const double scaled = exact_period_quadrature(duffing(1.0, ref.eps * ref.A * ref.A)).frequency;
    c.expect(rel(scaled, q.frequency) <= 1e-10, fmt("scaling broken at eps=%g A=%g", ref.eps, ref.A));
  }
  c.expect(worst_agree <= 1e-8, fmt("quadrature vs ODE %.2e", worst_agree));
  c.expect(worst_drift <= 1e-8, fmt("energy drift %.2e", worst_drift));
  c.expect(worst_pin <= 1e-10, fmt("pinned values off by %.2e", worst_pin));
  for (double A : kAmp) {
    const double w = exact_period_quadrature(duffing(A, 0.0)).frequency;
    c.expect(std::abs(w - 1.0) <= 1e-12, fmt("eps=0 frequency %.17g", w));
  }
  if (c.ok) c.detail = fmt("agree %.1e, drift %.1e, vs pinned %.1e", worst_agree, worst_drift, worst_pin);
  return c;
}

Check accuracy_context() {
  Check c;
  const double exact = exact_period_quadrature(duffing(1.0, 1.0)).frequency;
  const double e13 = (eq13_frequency(duffing(1.0, 1.0)) - exact) / exact;
  const double e15 = (eq15_frequency(1.0) - exact) / exact;
  c.expect(std::abs(exact - 1.3177760649655266) <= 1e-12, "exact frequency drifted");
  c.expect(std::abs(e13) < 0.01 && std::abs(e15) < 0.01, "relative error above 1%");
  c.expect(std::abs(e13 - 0.0038698461008260) <= 1e-9, "eq13 error drifted");
  c.expect(std::abs(e15 + 0.0047665565806844) <= 1e-9, "eq15 error drifted");
  c.detail = fmt("exact %.16g, eq13 %+.4f%%, eq15 %+.4f%%", exact, 100 * e13, 100 * e15);
  return c;
}

TrigSeries random_series(std::mt19937& rng, double w, int kmax) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  TrigSeries s(w);
  for (int k = 0; k <= kmax; ++k) {
    s.add_cos(k, u(rng));
    if (k > 0) s.add_sin(k, u(rng));
  }
  return s;
}

Check algebra_properties() {
  Check c;
  std::mt19937 rng(20110915);
  std::uniform_real_distribution<double> u(-1.0, 1.0), wdist(0.5, 3.0);

  // Orthogonality of the harmonics over one period.
  for (int j = 0; j <= 6; ++j)
    for (int k = 0; k <= 6; ++k) {
      const double w = wdist(rng);
      const double cc = integrate_over_period(TrigSeries::cosine(w, j) * TrigSeries::cosine(w, k));
      const double cs = integrate_over_period(TrigSeries::cosine(w, j) * TrigSeries::sine(w, std::max(k, 1)));
      const double T = 2 * oracle::pi / w;
      const double want = j != k ? 0.0 : (j == 0 ? T : T / 2);
      c.expect(std::abs(cc - want) <= 1e-13 * T && std::abs(cs) <= 1e-13 * T, fmt("orthogonality j=%d k=%d", j, k));
    }

  for (int trial = 0; trial < 50; ++trial) {
    const double w = wdist(rng);
    const TrigSeries a = random_series(rng, w, 5), b = random_series(rng, w, 5);
    const double t = 10 * u(rng);
    const double ab = (a * b).evaluate(t), sum = (a + b).evaluate(t);
    c.expect(std::abs(ab - a.evaluate(t) * b.evaluate(t)) <= 1e-12 * (1 + std::abs(ab)), "product homomorphism");
    c.expect(std::abs(sum - a.evaluate(t) - b.evaluate(t)) <= 1e-13 * (1 + std::abs(sum)), "sum homomorphism");

    // Central difference error must fall about 4x per step halving.
    const double d = differentiate(a).evaluate(t);
    double prev = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double h = 1e-2 / (1 << i);
      const double err = std::abs((a.evaluate(t + h) - a.evaluate(t - h)) / (2 * h) - d);
      if (i > 0 && prev > 1e-9) c.expect(err < prev / 3.0, "derivative FD convergence");
      prev = err;
    }
  }

  // Assemble vs independent quadrature and symmetry on random trial spaces.
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<BasisShape> shapes(2);
    for (int i = 0; i < 2; ++i)
      for (int k = 1; k <= 7; k += 2) shapes[i].cos_harmonics[k] = u(rng);
    const TrialSpace space("random", shapes);
    const double w = wdist(rng), A = 0.5 + std::abs(u(rng)), eps = 2 * std::abs(u(rng));
    const auto p = duffing(A, eps);
    const auto q = assemble(p, space, w);
    const double T = 2 * oracle::pi / w;
    c.expect((q.matrix - q.matrix.transpose()).cwiseAbs().maxCoeff() == 0.0, "M not symmetric");
    double scale = q.matrix.cwiseAbs().maxCoeff() + q.linear.cwiseAbs().maxCoeff();
    for (int i = 0; i < 2; ++i) {
      const auto& hi = shapes[i].cos_harmonics;
      for (int j = 0; j < 2; ++j) {
        const auto& hj = shapes[j].cos_harmonics;
        const double ref = oracle::composite_gauss(
            [&](double t) {
              return -oracle::cos_sum_dt(hi, w, t) * oracle::cos_sum_dt(hj, w, t) +
                     w * w * oracle::cos_sum(hi, w, t) * oracle::cos_sum(hj, w, t);
            },
            0.0, T);
        c.expect(std::abs(q.matrix(i, j) - ref) <= 1e-12 * scale, "M vs quadrature");
      }
      const double gref = oracle::composite_gauss(
          [&](double t) { return oracle::duffing_forcing(1.0, eps, A, w, t) * oracle::cos_sum(hi, w, t); }, 0.0, T);
      c.expect(std::abs(q.linear[i] - gref) <= 1e-12 * scale, "g vs quadrature");
    }
  }
  if (c.ok) c.detail = "orthogonality, homomorphism, FD convergence, assembly, symmetry";
  return c;
}

Check eq15_limit() {
  Check c;
  const double w0 = eq15_frequency(0.0);
  c.expect(std::abs(w0 - 1.0) <= 1e-15, fmt("eq15(0) = %.17g", w0));
  double worst = 0.0;
  for (double eps : kEps)
    for (double A : kAmp) {
      const auto p = duffing(A, eps);
      const double w = eq13_frequency(p);
      const double c1 = order1_forcing(p, w).cos_coeff(1);
      worst = std::max(worst, std::abs(c1) / (eps * A * A * A));
    }
  c.expect(worst <= 1e-12, fmt("resonant coefficient %.2e", worst));
  if (c.ok) c.detail = fmt("eq15(0) - 1 = %.1e, max |c1|/(eps A^3) = %.1e", w0 - 1.0, worst);
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria = {
      {"single-shape stationary point is trivial with the resonance-free frequency", eq13_reproduction},
      {"two-shape coefficients match the closed form", eq16_cross_validation},
      {"two-shape frequency matches the closed form", eq15_cross_validation},
      {"two-shape correction violates u1(0) = 0 as predicted", boundary_violation},
      {"amplitude mismatch equals u1(0) bit for bit", amplitude_mismatch_identity},
      {"single-shape audit flags the trivial correction", trivial_correction},
      {"exact-period oracle integrity", oracle_integrity},
      {"closed-form frequencies within 1% of exact", accuracy_context},
      {"trig-series and assembly algebra properties", algebra_properties},
      {"closed-form linear limit and resonance elimination", eq15_limit},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %2zu %s: %s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, c.detail.c_str());
    failures += c.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
