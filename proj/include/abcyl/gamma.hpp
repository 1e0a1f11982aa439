#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace abcyl {

using complex = std::complex<double>;
using Matrix4c = Eigen::Matrix4cd;

/// The four complex components of a Dirac spinor, standard representation.
using SpinorValue = Eigen::Vector4cd;

/// Dirac matrices in the standard representation:
///   gamma^0 = diag(1, 1, -1, -1),  gamma^i = [[0, sigma_i], [-sigma_i, 0]].
/// Every other piece of the library takes its gamma matrices from here.
struct GammaSet {
  std::array<Matrix4c, 4> gamma;
  /// S_3 = diag(sigma_3, sigma_3) / 2.
  Matrix4c spin3;

  static const GammaSet& standard();

  /// Minkowski metric diag(1, -1, -1, -1).
  static constexpr std::array<double, 4> metric{1.0, -1.0, -1.0, -1.0};

  /// gamma^phi = (-gamma^1 sin phi + gamma^2 cos phi) / R with R = 1.
  Matrix4c gamma_phi(double phi) const;
  /// d gamma^phi / d phi.
  Matrix4c dgamma_phi(double phi) const;
};

}  // namespace abcyl
