#include "vhpm/action.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "vhpm/errors.hpp"
#include "vhpm/hierarchy.hpp"

namespace vhpm {

TrigSeries BasisShape::at(double omega) const {
  TrigSeries s(omega);
  for (const auto& [k, c] : cos_harmonics) s.add_cos(k, c);
  return s;
}

TrialSpace::TrialSpace(std::string name, std::vector<BasisShape> basis)
    : name_(std::move(name)), basis_(std::move(basis)) {
  if (basis_.empty()) throw std::invalid_argument("trial space '" + name_ + "' has no shapes");
  int top = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    bool nonzero = false;
    for (const auto& [k, c] : basis_[i].cos_harmonics) {
      if (k < 0 || k > TrigSeries::kMaxHarmonic)
        throw std::invalid_argument("trial space '" + name_ + "': harmonic " + std::to_string(k) +
                                    " out of range in shape " + std::to_string(i + 1));
      if (!std::isfinite(c))
        throw std::invalid_argument("trial space '" + name_ + "': non-finite coefficient");
      nonzero = nonzero || c != 0.0;
      top = std::max(top, k);
    }
    if (!nonzero)
      throw std::invalid_argument("trial space '" + name_ + "': shape " + std::to_string(i + 1) +
                                  " has no nonzero harmonic");
  }
  Eigen::MatrixXd coeffs = Eigen::MatrixXd::Zero(basis_.size(), top + 1);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (const auto& [k, c] : basis_[i].cos_harmonics) coeffs(i, k) = c;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(coeffs);
  lu.setThreshold(1e-12);
  if (static_cast<std::size_t>(lu.rank()) < basis_.size())
    throw std::invalid_argument("trial space '" + name_ + "': shapes are linearly dependent");
}

TrigSeries TrialSpace::correction(const Eigen::VectorXd& amplitudes, double omega) const {
  if (static_cast<std::size_t>(amplitudes.size()) != basis_.size())
    throw std::invalid_argument("trial space: amplitude count does not match basis size");
  TrigSeries u1(omega);
  for (std::size_t i = 0; i < basis_.size(); ++i) u1 += scale(basis_[i].at(omega), amplitudes[i]);
  return u1;
}

TrialSpace al_single() {
  return TrialSpace("AL_SINGLE", {BasisShape{{{1, 1.0}, {5, -1.0 / 3.0}}}});
}

TrialSpace al_double() {
  return TrialSpace("AL_DOUBLE", {BasisShape{{{1, 1.0}, {3, -1.0 / 5.0}}},
                                  BasisShape{{{3, 1.0 / 5.0}, {5, -1.0 / 7.0}}}});
}

TrialPreset identify_preset(const TrialSpace& space) {
  if (space.basis() == al_single().basis()) return TrialPreset::al_single;
  if (space.basis() == al_double().basis()) return TrialPreset::al_double;
  return TrialPreset::custom;
}

double QuadraticForm::value(const Eigen::VectorXd& b) const {
  return 0.5 * b.dot(matrix * b) + linear.dot(b);
}

Eigen::VectorXd QuadraticForm::gradient(const Eigen::VectorXd& b) const {
  return matrix * b + linear;
}

QuadraticForm assemble(const OscillatorProblem& p, const TrialSpace& space, double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("assemble: omega must be > 0");
  const std::size_t n = space.size();
  std::vector<TrigSeries> phi;
  std::vector<TrigSeries> dphi;
  phi.reserve(n);
  dphi.reserve(n);
  for (const auto& shape : space.basis()) {
    phi.push_back(shape.at(omega));
    dphi.push_back(differentiate(phi.back()));
  }
  const TrigSeries forcing = order1_forcing(p, omega);

  QuadraticForm q{Eigen::MatrixXd(n, n), Eigen::VectorXd(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double mij = integrate_over_period(scale(multiply(phi[i], phi[j]), omega * omega) -
                                               multiply(dphi[i], dphi[j]));
      q.matrix(i, j) = mij;
      q.matrix(j, i) = mij;
    }
    q.linear(i) = integrate_over_period(multiply(forcing, phi[i]));
  }
  return q;
}

Eigen::VectorXd solve_B(const QuadraticForm& q) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(q.matrix);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible())
    throw numeric_domain_error("solve_B: singular stationarity matrix (degenerate trial space)");
  return lu.solve(-q.linear);
}

double action_value(const OscillatorProblem& p, const TrialSpace& space, double omega,
                    const Eigen::VectorXd& amplitudes) {
  return assemble(p, space, omega).value(amplitudes);
}

double action_integrand(const OscillatorProblem& p, const TrialSpace& space, double omega,
                        const Eigen::VectorXd& amplitudes, double t) {
  const TrigSeries u1 = space.correction(amplitudes, omega);
  const double u = u1.evaluate(t);
  const double du = differentiate(u1).evaluate(t);
  const double f = order1_forcing(p, omega).evaluate(t);
  return -0.5 * du * du + 0.5 * omega * omega * u * u + f * u;
}

double d_omega(const OscillatorProblem& p, const TrialSpace& space, double omega,
               const Eigen::VectorXd& amplitudes, PeriodConvention convention) {
  if (!(omega > 0.0)) throw std::invalid_argument("d_omega: omega must be > 0");
  const double h = 1e-5 * omega;
  if (!(h > std::numeric_limits<double>::min()) || omega + h == omega || omega - h <= 0.0)
    throw numeric_domain_error("d_omega: finite-difference step underflow");
  auto j = [&](double w) { return action_value(p, space, w, amplitudes); };
  auto central = [&](double step) { return (j(omega + step) - j(omega - step)) / (2.0 * step); };
  const double coarse = central(h);
  const double fine = central(0.5 * h);
  double derivative = (4.0 * fine - coarse) / 3.0;
  if (convention == PeriodConvention::fixed_limit) {
    // Leibniz: d/dw int_0^{T(w)} = h(T) T'(w) + int_0^T dh/dw, and h(T) = h(0).
    derivative += 2.0 * std::numbers::pi / (omega * omega) *
                  action_integrand(p, space, omega, amplitudes, 0.0);
  }
  return derivative;
}

Bracket default_bracket(const OscillatorProblem& p) {
  const double w2 = fundamental_frequency_sq(p);
  if (!(w2 > 0.0))
    throw numeric_domain_error("default_bracket: no positive linearized frequency");
  const double w = std::sqrt(w2);
  return {0.5 * w, 3.0 * w};
}

namespace {

// Safeguarded secant alternating with bisection; keeps the sign bracket.
double refine_root(const std::function<double(double)>& f, double a, double fa, double b,
                   double fb, double rel_tol) {
  for (int iter = 0; iter < 400; ++iter) {
    if (b - a <= rel_tol * std::max(std::abs(a), std::abs(b))) break;
    double x = 0.5 * (a + b);
    if (iter % 2 == 0 && fb != fa) {
      const double s = b - fb * (b - a) / (fb - fa);
      if (s > a && s < b) x = s;
    }
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (std::signbit(fx) == std::signbit(fa)) {
      a = x;
      fa = fx;
    } else {
      b = x;
      fb = fx;
    }
  }
  return std::abs(fa) < std::abs(fb) ? a : b;
}

// Roots of f on a uniform grid: exact zeros and polished sign changes.
std::vector<double> grid_roots(const std::vector<double>& grid, const std::vector<double>& values,
                               const std::function<double(double)>& f, double rel_tol) {
  std::vector<double> roots;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i] == 0.0) roots.push_back(grid[i]);
    if (i + 1 == grid.size()) break;
    const double fa = values[i], fb = values[i + 1];
    if (!std::isfinite(fa) || !std::isfinite(fb) || fa == 0.0 || fb == 0.0) continue;
    if (std::signbit(fa) != std::signbit(fb))
      roots.push_back(refine_root(f, grid[i], fa, grid[i + 1], fb, rel_tol));
  }
  return roots;
}

double max_abs(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

struct Candidate {
  double omega;
  bool on_ray;
};

std::vector<StationaryPoint> scan(const OscillatorProblem& p, const TrialSpace& space,
                                  Bracket bracket, const SolverOptions& opt) {
  if (!(bracket.lo > 0.0) || !(bracket.hi > bracket.lo))
    throw std::invalid_argument("solve_stationary: empty bracket");
  const int n = std::max(opt.grid_points, 2);
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i)
    grid[i] = bracket.lo + (bracket.hi - bracket.lo) * i / (n - 1);
  if (n > 1) grid.back() = bracket.hi;

  // dJ/domega along B(omega); NaN where M is singular.
  auto curve = [&](double w) {
    try {
      const Eigen::VectorXd b = solve_B(assemble(p, space, w));
      return d_omega(p, space, w, b, opt.convention);
    } catch (const numeric_domain_error&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };

  std::vector<Candidate> candidates;
  std::vector<double> curve_values(n);
  for (int i = 0; i < n; ++i) curve_values[i] = curve(grid[i]);
  for (double w : grid_roots(grid, curve_values, curve, opt.omega_rel_tol))
    candidates.push_back({w, false});

  // B = 0 ray: J vanishes identically there, so only g(omega) = 0 is needed.
  const std::size_t dim = space.size();
  std::vector<std::vector<double>> g_values(dim, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd g = assemble(p, space, grid[i]).linear;
    for (std::size_t c = 0; c < dim; ++c) g_values[c][i] = g[c];
  }
  for (std::size_t c = 0; c < dim; ++c) {
    const bool identically_zero = std::all_of(g_values[c].begin(), g_values[c].end(),
                                              [](double v) { return v == 0.0; });
    if (identically_zero) continue;
    auto component = [&, c](double w) { return assemble(p, space, w).linear[c]; };
    for (double w : grid_roots(grid, g_values[c], component, opt.omega_rel_tol))
      candidates.push_back({w, true});
  }

  std::vector<StationaryPoint> points;
  for (const Candidate& cand : candidates) {
    const QuadraticForm q = assemble(p, space, cand.omega);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(dim);
    if (!cand.on_ray) {
      try {
        b = solve_B(q);
      } catch (const numeric_domain_error&) {
        continue;
      }
    }
    const double jv = q.value(b);
    const double dj = d_omega(p, space, cand.omega, b, opt.convention);
    const double grad = std::max(max_abs(q.gradient(b)), std::abs(dj));
    if (!(grad <= opt.grad_tol * (1.0 + std::abs(jv)))) continue;
    StationaryPoint sp{cand.omega, b, jv, grad, "isolated", false};
    points.push_back(std::move(sp));
  }

  std::sort(points.begin(), points.end(),
            [](const StationaryPoint& a, const StationaryPoint& b) { return a.omega < b.omega; });
  std::vector<StationaryPoint> merged;
  for (auto& sp : points) {
    if (!merged.empty() && std::abs(sp.omega - merged.back().omega) <= 1e-9 * sp.omega) {
      if (sp.grad_norm < merged.back().grad_norm) merged.back() = std::move(sp);
      continue;
    }
    merged.push_back(std::move(sp));
  }
  for (auto& sp : merged)
    if (max_abs(sp.amplitudes) <= opt.triviality_tol * p.amplitude) sp.branch = "trivial-B";
  return merged;
}

std::size_t nearest(const std::vector<StationaryPoint>& points, double omega) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < points.size(); ++i)
    if (std::abs(points[i].omega - omega) < std::abs(points[best].omega - omega)) best = i;
  return best;
}

}  // namespace

std::vector<StationaryPoint> solve_stationary(const OscillatorProblem& p, const TrialSpace& space,
                                              const SolverOptions& options) {
  const Bracket bracket = options.bracket ? *options.bracket : default_bracket(p);
  std::vector<StationaryPoint> points = scan(p, space, bracket, options);
  if (points.empty() || options.continuation_steps < 1 || !(p.omega0_sq > 0.0)) return points;

  // Follow the linear-limit point (B = 0, omega = omega0) as epsilon grows.
  double tracked = std::sqrt(p.omega0_sq);
  for (int k = 1; k < options.continuation_steps; ++k) {
    OscillatorProblem step = p;
    step.epsilon = p.epsilon * k / options.continuation_steps;
    std::vector<StationaryPoint> pts;
    try {
      pts = scan(step, space, default_bracket(step), options);
    } catch (const numeric_domain_error&) {
      return points;
    }
    if (pts.empty()) return points;
    tracked = pts[nearest(pts, tracked)].omega;
  }
  StationaryPoint& chosen = points[nearest(points, tracked)];
  chosen.continued_from_linear = true;
  if (chosen.branch != "trivial-B") chosen.branch = "continued-from-linear";
  return points;
}

std::vector<StationaryPoint> solve_stationary(const OscillatorProblem& p, const TrialSpace& space,
                                              Bracket bracket, SolverOptions options) {
  options.bracket = bracket;
  return solve_stationary(p, space, options);
}

std::optional<StationaryPoint> preferred_branch(const std::vector<StationaryPoint>& points) {
  for (const auto& sp : points)
    if (sp.continued_from_linear) return sp;
  if (points.empty()) return std::nullopt;
  return points.front();
}

}  // namespace vhpm
