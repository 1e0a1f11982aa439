#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace abcyl {

/// One-dimensional node/weight rule on [lower, upper].
struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
  double lower = 0.0;
  double upper = 0.0;

  std::size_t size() const noexcept { return nodes.size(); }
  double width() const noexcept { return upper - lower; }
  /// Mean node spacing, width / size.
  double mean_spacing() const noexcept;

  template <typename F>
  auto integrate(F&& f) const {
    decltype(f(0.0) * 1.0) sum{};
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// Gauss-Legendre rule of the given order on [a, b]. Nodes come from Newton
/// iteration on P_n, so orders of several hundred are fine.
Rule1D gauss_legendre(int order, double a, double b);

/// `panels` equal panels, each with an `order`-point Gauss-Legendre rule.
Rule1D composite_gauss_legendre(int panels, int order, double a, double b);

/// Uniform trapezoid rule on the periodic interval [0, 2 pi): `count` equally
/// spaced nodes with weight 2 pi / count. Exact for e^{i m phi} with |m| < count.
Rule1D periodic_trapezoid(int count);

/// Trapezoid weights on an arbitrary increasing grid.
Rule1D trapezoid(std::span<const double> grid);

/// Product rule for integrals over the cylinder surface (phi, z).
///
/// For a finite cylinder z runs over [0, L]; for infinite-domain integrals
/// the z rule covers the truncation window [-window, window].
struct QuadratureRule {
  Rule1D phi;
  Rule1D z;

  /// Defaults: `order` Gauss-Legendre points per wavelength of mode n_max in z
  /// (at least one panel), `phi_points` uniform points in phi.
  static QuadratureRule finite(double length, int n_max, int order = 64, int phi_points = 256);
  /// Window [-half_width, half_width] split into `panels` Gauss-Legendre panels.
  static QuadratureRule window(double half_width, int panels, int order = 16, int phi_points = 8);
};

}  // namespace abcyl
