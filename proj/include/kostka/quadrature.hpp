#pragma once

#include <cmath>
#include <vector>

namespace kostka {

/// Gauss-Legendre nodes/weights on [-1, 1], cached per order.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

/// Composite rule: `panels` equal panels of the given order.
template <class F>
double integrate(F&& f, double lo, double hi, int panels, int order = 16) {
  const GaussRule& rule = gauss_legendre(order);
  const double h = (hi - lo) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * h;
    double acc = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      acc += rule.weights[k] * f(mid + 0.5 * h * rule.nodes[k]);
    }
    total += 0.5 * h * acc;
  }
  return total;
}

struct IntegralEstimate {
  double value;       // finer refinement level
  double abs_error;   // |fine - coarse|
};

/// Error estimate by comparing two refinement levels; n_points is the
/// total function-evaluation budget of the finer level.
template <class F>
IntegralEstimate integrate_refined(F&& f, double lo, double hi, int n_points, int order = 16) {
  int panels = n_points / order;
  if (panels < 2) panels = 2;
  double fine = integrate(f, lo, hi, panels, order);
  double coarse = integrate(f, lo, hi, panels / 2, order);
  return {fine, std::abs(fine - coarse)};
}

}  // namespace kostka
