#pragma once

#include <functional>
#include <vector>

namespace vhpm {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, nodes from Newton iteration on P_n.
GaussLegendreRule gauss_legendre(int n);

double integrate(const GaussLegendreRule& rule, const std::function<double(double)>& f,
                 double a, double b);

}  // namespace vhpm
