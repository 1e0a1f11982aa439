#include "abcyl/currents.hpp"

#include <cmath>
#include <stdexcept>

#include "abcyl/constants.hpp"
#include "abcyl/errors.hpp"
#include "abcyl/spectrum.hpp"
#include "abcyl/spinors.hpp"

namespace abcyl {

double chi(int n, HalfOdd lambda, const DimensionlessParams& d) {
  if (d.nu == 0.0) throw RegimeError("chi is defined on the finite cylinder (nu > 0)");
  const double q = d.beta + lambda.value();
  const double kn = d.nu * n;
  return q / std::sqrt(d.mu * d.mu + kn * kn + q * q);
}

double chi_infinite(double k, HalfOdd lambda, const DimensionlessParams& d) {
  const double q = d.beta + lambda.value();
  return q / std::sqrt(d.mu * d.mu + k * k + q * q);
}

MixedState MixedState::make(int n, HalfOdd lambda, std::complex<double> c_plus, std::complex<double> c_minus) {
  if (n < 1) throw std::invalid_argument("mixed state needs n >= 1");
  const double norm = std::norm(c_plus) + std::norm(c_minus);
  if (std::abs(norm - 1.0) > 1e-13) throw std::invalid_argument("mixed state coefficients are not normalized");
  return MixedState{n, lambda, c_plus, c_minus};
}

MixedState MixedState::normalized(int n, HalfOdd lambda, std::complex<double> c_plus,
                                  std::complex<double> c_minus) {
  const double norm = std::sqrt(std::norm(c_plus) + std::norm(c_minus));
  if (!(norm > 0.0)) throw std::invalid_argument("mixed state with zero coefficients");
  return make(n, lambda, c_plus / norm, c_minus / norm);
}

double MixedState::polarization() const noexcept {
  return lambda.value() * (std::norm(c_plus) - std::norm(c_minus));
}

double circular_current_mode(const MixedState& state, const DimensionlessParams& d) {
  return chi(state.n, state.lambda, d) / constants::two_pi;
}

double circular_current_quadrature(const MixedState& state, const DimensionlessParams& d,
                                   const QuadratureRule& rule) {
  const auto up = ModeSpec::finite(state.n, state.lambda, Polarization::plus);
  const auto down = ModeSpec::finite(state.n, state.lambda, Polarization::minus);
  double average = 0.0;
  for (std::size_t ip = 0; ip < rule.phi.size(); ++ip) {
    const double phi = rule.phi.nodes[ip];
    double line = 0.0;
    for (std::size_t iz = 0; iz < rule.z.size(); ++iz) {
      const double z = rule.z.nodes[iz];
      const SpinorValue psi =
          state.c_plus * eval_mode(up, d, 0.0, phi, z) + state.c_minus * eval_mode(down, d, 0.0, phi, z);
      line += rule.z.weights[iz] * current_density(psi, phi).jphi;
    }
    average += rule.phi.weights[ip] * line;
  }
  return average / constants::two_pi;
}

}  // namespace abcyl
