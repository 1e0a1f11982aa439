#pragma once

#include <complex>

#include "abcyl/half_odd.hpp"
#include "abcyl/params.hpp"
#include "abcyl/quadrature.hpp"

namespace abcyl {

/// chi(n, lambda) = (beta+lambda) / sqrt(mu^2 + nu^2 n^2 + (beta+lambda)^2).
/// Requires nu > 0 (RegimeError otherwise).
double chi(int n, HalfOdd lambda, const DimensionlessParams& d);

/// Same with the longitudinal momentum kR in place of nu n (infinite cylinder).
double chi_infinite(double k, HalfOdd lambda, const DimensionlessParams& d);

/// psi = c_+ U^+_{n,lambda} + c_- U^-_{n,lambda} on the finite cylinder.
struct MixedState {
  int n = 1;
  HalfOdd lambda;
  std::complex<double> c_plus{1.0, 0.0};
  std::complex<double> c_minus{0.0, 0.0};

  /// Throws std::invalid_argument unless |c_+|^2 + |c_-|^2 = 1 within 1e-13.
  static MixedState make(int n, HalfOdd lambda, std::complex<double> c_plus, std::complex<double> c_minus);
  /// Rescales (c_+, c_-) to unit norm first.
  static MixedState normalized(int n, HalfOdd lambda, std::complex<double> c_plus, std::complex<double> c_minus);

  /// <psi, K psi> = lambda (|c_+|^2 - |c_-|^2).
  double polarization() const noexcept;
};

/// R I^c = chi(n, lambda) / (2 pi). The mixing coefficients do not enter.
double circular_current_mode(const MixedState& state, const DimensionlessParams& d);

/// Brute-force route to the same number: the phi-average of R int_0^L dz j^phi
/// with j^phi evaluated from the mixed-state spinor on the rule's grid.
double circular_current_quadrature(const MixedState& state, const DimensionlessParams& d,
                                   const QuadratureRule& rule);

}  // namespace abcyl
