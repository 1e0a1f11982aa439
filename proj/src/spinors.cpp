#include "abcyl/spinors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "abcyl/constants.hpp"
#include "abcyl/errors.hpp"

namespace abcyl {

namespace {

const complex I(0.0, 1.0);

/// Component c of a mode is N * (sin_coef[c] sin(kz) + cos_coef[c] cos(kz))
/// for the finite cylinder, N * exp_coef[c] e^{ikz} / sqrt(2 pi) for the
/// infinite one; phases e^{i m_c phi} with m = lambda -+ 1/2.
struct ModeCoefficients {
  bool finite;
  double k;
  double energy;
  double norm;
  std::array<complex, 4> sin_coef{};
  std::array<complex, 4> cos_coef{};
  std::array<complex, 4> exp_coef{};
  std::array<double, 4> m{};
};

ModeCoefficients coefficients(const ModeSpec& mode, const DimensionlessParams& d, double energy_scale) {
  ModeCoefficients mc{};
  mc.finite = mode.geometry == Geometry::finite;
  mc.k = mode.momentum(d);
  mc.energy = energy(mode, d) * energy_scale;
  const double E = mc.energy;
  const double M = d.mu;
  const double q = mode.lambda.value() + d.beta;
  const double lam = mode.lambda.value();
  mc.m = {lam - 0.5, lam + 0.5, lam - 0.5, lam + 0.5};
  const double spin_factor = std::sqrt((E + M) / (2.0 * E));
  const double k = mc.k;
  const bool plus = mode.sigma == Polarization::plus;
  if (mc.finite) {
    mc.norm = spin_factor / std::sqrt(constants::pi * d.length());
    if (plus) {
      mc.sin_coef = {1.0, 0.0, 0.0, I * q / (E + M)};
      mc.cos_coef = {0.0, 0.0, -I * k / (E + M), 0.0};
    } else {
      mc.sin_coef = {0.0, 1.0, -I * q / (E + M), 0.0};
      mc.cos_coef = {0.0, 0.0, 0.0, I * k / (E + M)};
    }
  } else {
    mc.norm = spin_factor / std::sqrt(constants::two_pi);
    if (plus) {
      mc.exp_coef = {1.0, 0.0, k / (E + M), I * q / (E + M)};
    } else {
      mc.exp_coef = {0.0, 1.0, -I * q / (E + M), -k / (E + M)};
    }
  }
  return mc;
}

void check_z(const ModeSpec& mode, const DimensionlessParams& d, double z) {
  if (mode.geometry != Geometry::finite) return;
  const double length = d.length();
  const double slack = 1e-12 * length;
  if (z < -slack || z > length + slack) throw std::out_of_range("z outside [0, L] for a finite-cylinder mode");
}

ReducedProfile profile_from(const ModeCoefficients& mc, double z) {
  ReducedProfile p;
  p.energy = mc.energy;
  if (mc.finite) {
    const double s = std::sin(mc.k * z);
    const double c = std::cos(mc.k * z);
    for (int i = 0; i < 4; ++i) {
      p.value[i] = mc.norm * (mc.sin_coef[i] * s + mc.cos_coef[i] * c);
      p.dz[i] = mc.norm * mc.k * (mc.sin_coef[i] * c - mc.cos_coef[i] * s);
    }
  } else {
    const complex wave = std::exp(I * (mc.k * z)) / std::sqrt(constants::two_pi);
    for (int i = 0; i < 4; ++i) {
      p.value[i] = mc.norm * mc.exp_coef[i] * wave;
      p.dz[i] = I * mc.k * p.value[i];
    }
  }
  return p;
}

SpinorJet jet_from(const ModeCoefficients& mc, double t, double phi, double z) {
  const ReducedProfile p = profile_from(mc, z);
  const complex time_phase = std::exp(-I * (mc.energy * t));
  SpinorJet jet;
  for (int c = 0; c < 4; ++c) {
    const complex phase = std::exp(I * (mc.m[c] * phi)) * time_phase;
    jet.value[c] = p.value[c] * phase;
    jet.dz[c] = p.dz[c] * phase;
    jet.dphi[c] = I * mc.m[c] * jet.value[c];
    jet.dt[c] = -I * mc.energy * jet.value[c];
  }
  return jet;
}

}  // namespace

ReducedProfile reduced_profile(const ModeSpec& mode, const DimensionlessParams& d, double z, double energy_scale) {
  check_z(mode, d, z);
  return profile_from(coefficients(mode, d, energy_scale), z);
}

SpinorJet eval_mode_jet(const ModeSpec& mode, const DimensionlessParams& d, double t, double phi, double z,
                        double energy_scale) {
  check_z(mode, d, z);
  return jet_from(coefficients(mode, d, energy_scale), t, phi, z);
}

SpinorValue eval_mode(const ModeSpec& mode, const DimensionlessParams& d, double t, double phi, double z) {
  return eval_mode_jet(mode, d, t, phi, z).value;
}

double dirac_residual(const ModeSpec& mode, const DimensionlessParams& d, std::span<const double> z_samples,
                      double energy_scale) {
  const ModeCoefficients mc = coefficients(mode, d, energy_scale);
  const double E = mc.energy;
  const double M = d.mu;
  const complex iq = I * (mode.lambda.value() + d.beta);
  double worst = 0.0;
  for (double z : z_samples) {
    check_z(mode, d, z);
    const ReducedProfile p = profile_from(mc, z);
    const auto& [f1, f2, g1, g2] = p.value;
    const auto& [df1, df2, dg1, dg2] = p.dz;
    const std::array<complex, 4> row{
        (E - M) * f1 + I * dg1 + iq * g2,
        (E - M) * f2 - iq * g1 - I * dg2,
        -I * df1 - iq * f2 - (E + M) * g1,
        iq * f1 + I * df2 - (E + M) * g2,
    };
    for (const auto& r : row) worst = std::max(worst, std::abs(r));
  }
  return worst;
}

SpinorValue dirac_operator_residual(const SpinorJet& jet, double phi, const DimensionlessParams& d) {
  const auto& g = GammaSet::standard();
  return I * (g.gamma[0] * jet.dt) + g.gamma_phi(phi) * (I * jet.dphi - d.beta * jet.value) +
         0.5 * I * (g.dgamma_phi(phi) * jet.value) + I * (g.gamma[3] * jet.dz) - d.mu * jet.value;
}

SpinorValue apply_hamiltonian(const SpinorValue& value, const SpinorValue& dphi, const SpinorValue& dz, double phi,
                              const DimensionlessParams& d) {
  const auto& g = GammaSet::standard();
  const SpinorValue inner = d.mu * value - g.gamma_phi(phi) * (I * dphi - d.beta * value) -
                            0.5 * I * (g.dgamma_phi(phi) * value) - I * (g.gamma[3] * dz);
  return g.gamma[0] * inner;
}

SpinorValue k_operator_apply(const ModeSpec& mode, const DimensionlessParams& d, double t, double phi, double z) {
  const auto& g = GammaSet::standard();
  const SpinorJet jet = eval_mode_jet(mode, d, t, phi, z);
  const SpinorValue l3 = -I * jet.dphi;
  return g.gamma[0] * (2.0 * (g.spin3 * l3) + 0.5 * jet.value);
}

CurrentDensity current_density(const SpinorValue& psi, double phi) {
  const auto& g = GammaSet::standard();
  const complex j0 = psi.dot(psi);  // Eigen's dot conjugates the first argument
  const complex jphi = psi.dot(g.gamma[0] * (g.gamma_phi(phi) * psi));
  const complex j3 = psi.dot(g.gamma[0] * (g.gamma[3] * psi));
  const double scale = std::max(1.0, j0.real());
  const double tol = 1e-10 * scale;
  if (std::abs(j0.imag()) > tol || std::abs(jphi.imag()) > tol || std::abs(j3.imag()) > tol)
    throw NonRealBilinear("current density bilinear has a non-zero imaginary part");
  return {j0.real(), jphi.real(), j3.real()};
}

SampledField sample_mode(const ModeSpec& mode, const DimensionlessParams& d, const QuadratureRule& rule, double t) {
  const ModeCoefficients mc = coefficients(mode, d, 1.0);
  SampledField field;
  field.phi_count = rule.phi.size();
  field.z_count = rule.z.size();
  field.values.reserve(field.phi_count * field.z_count);
  for (double z : rule.z.nodes) check_z(mode, d, z);
  for (double phi : rule.phi.nodes)
    for (double z : rule.z.nodes) field.values.push_back(jet_from(mc, t, phi, z).value);
  return field;
}

complex inner_product(const SampledField& a, const SampledField& b, const QuadratureRule& rule) {
  if (a.phi_count != rule.phi.size() || a.z_count != rule.z.size() || b.phi_count != a.phi_count ||
      b.z_count != a.z_count)
    throw std::invalid_argument("sampled fields do not match the quadrature rule");
  complex total = 0.0;
  std::size_t idx = 0;
  for (std::size_t ip = 0; ip < a.phi_count; ++ip) {
    complex row = 0.0;
    for (std::size_t iz = 0; iz < a.z_count; ++iz, ++idx) row += rule.z.weights[iz] * a.values[idx].dot(b.values[idx]);
    total += rule.phi.weights[ip] * row;
  }
  return total;  // R = 1
}

complex inner_product(const ModeSpec& a, const ModeSpec& b, const DimensionlessParams& d,
                      const QuadratureRule& rule) {
  if (a.geometry != b.geometry) throw std::invalid_argument("inner product of modes from different geometries");
  if (a.geometry == Geometry::finite) return inner_product(sample_mode(a, d, rule), sample_mode(b, d, rule), rule);

  if (a.k != b.k)
    throw std::invalid_argument("infinite-cylinder modes are delta-normalized; only equal momenta are comparable");
  complex total = 0.0;
  for (std::size_t ip = 0; ip < rule.phi.size(); ++ip) {
    const double phi = rule.phi.nodes[ip];
    total += rule.phi.weights[ip] * eval_mode(a, d, 0.0, phi, 0.0).dot(eval_mode(b, d, 0.0, phi, 0.0));
  }
  return constants::two_pi * total;
}

}  // namespace abcyl
