#include "abcyl/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "abcyl/constants.hpp"

namespace abcyl {

double Rule1D::mean_spacing() const noexcept {
  return nodes.empty() ? width() : width() / static_cast<double>(nodes.size());
}

Rule1D gauss_legendre(int order, double a, double b) {
  if (order < 1) throw std::invalid_argument("Gauss-Legendre order must be >= 1");
  if (!(b > a)) throw std::invalid_argument("Gauss-Legendre interval must have b > a");
  Rule1D rule;
  rule.lower = a;
  rule.upper = b;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(constants::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) p0 = 1.0;
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // refresh the derivative at the converged node
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (order == 1) p0 = 1.0;
    dp = order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = mid - half * x;
    rule.nodes[order - 1 - i] = mid + half * x;
    rule.weights[i] = half * w;
    rule.weights[order - 1 - i] = half * w;
  }
  return rule;
}

Rule1D composite_gauss_legendre(int panels, int order, double a, double b) {
  if (panels < 1) throw std::invalid_argument("need at least one panel");
  const Rule1D ref = gauss_legendre(order, -1.0, 1.0);
  Rule1D rule;
  rule.lower = a;
  rule.upper = b;
  rule.nodes.reserve(static_cast<std::size_t>(panels) * order);
  rule.weights.reserve(static_cast<std::size_t>(panels) * order);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    for (int i = 0; i < order; ++i) {
      rule.nodes.push_back(mid + 0.5 * h * ref.nodes[i]);
      rule.weights.push_back(0.5 * h * ref.weights[i]);
    }
  }
  return rule;
}

Rule1D periodic_trapezoid(int count) {
  if (count < 1) throw std::invalid_argument("trapezoid needs at least one node");
  Rule1D rule;
  rule.lower = 0.0;
  rule.upper = constants::two_pi;
  rule.nodes.resize(count);
  rule.weights.assign(count, constants::two_pi / count);
  for (int i = 0; i < count; ++i) rule.nodes[i] = constants::two_pi * i / count;
  return rule;
}

Rule1D trapezoid(std::span<const double> grid) {
  if (grid.size() < 2) throw std::invalid_argument("trapezoid needs at least two grid points");
  Rule1D rule;
  rule.nodes.assign(grid.begin(), grid.end());
  rule.weights.assign(grid.size(), 0.0);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double h = grid[i + 1] - grid[i];
    if (!(h > 0.0)) throw std::invalid_argument("trapezoid grid must be strictly increasing");
    rule.weights[i] += 0.5 * h;
    rule.weights[i + 1] += 0.5 * h;
  }
  rule.lower = grid.front();
  rule.upper = grid.back();
  return rule;
}

QuadratureRule QuadratureRule::finite(double length, int n_max, int order, int phi_points) {
  // sin(k_n z) has n/2 wavelengths on [0, L]
  const int panels = std::max(1, (n_max + 1) / 2);
  return {periodic_trapezoid(phi_points), composite_gauss_legendre(panels, order, 0.0, length)};
}

QuadratureRule QuadratureRule::window(double half_width, int panels, int order, int phi_points) {
  return {periodic_trapezoid(phi_points), composite_gauss_legendre(panels, order, -half_width, half_width)};
}

}  // namespace abcyl
