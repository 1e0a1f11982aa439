#include "abcyl/packet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "abcyl/constants.hpp"
#include "abcyl/errors.hpp"
#include "abcyl/spectrum.hpp"
#include "abcyl/spinors.hpp"

namespace abcyl {

namespace {

const complex I(0.0, 1.0);
constexpr int kPanelOrder = 16;
constexpr double kWindowSigmas = 8.0;

void require_normalized(const SampledPacket& sp) {
  const double norm = sp.norm();
  if (std::abs(norm - 1.0) > 1e-10)
    throw std::invalid_argument("packet is not normalized (norm = " + std::to_string(norm) + ")");
}

/// psi at (t, z) for phi = 0; the phi dependence is the fixed phase
/// e^{i m_c phi} per component.
SpinorValue packet_profile(const SampledPacket& sp, double t, double z) {
  SpinorValue psi = SpinorValue::Zero();
  for (std::size_t i = 0; i < sp.rule.size(); ++i) {
    const complex wave = std::exp(I * (sp.rule.nodes[i] * z - sp.energy[i] * t));
    psi += (sp.rule.weights[i] * wave) * sp.spinor0[i];
  }
  return psi;
}

SpinorValue with_phi(const SpinorValue& profile, HalfOdd lambda, double phi) {
  const double lam = lambda.value();
  const complex lower = std::exp(I * ((lam - 0.5) * phi));
  const complex upper = std::exp(I * ((lam + 0.5) * phi));
  SpinorValue psi = profile;
  psi[0] *= lower;
  psi[1] *= upper;
  psi[2] *= lower;
  psi[3] *= upper;
  return psi;
}

LongitudinalCurrent longitudinal_from_profile(const SpinorValue& profile, HalfOdd lambda, int phi_points) {
  const auto& g = GammaSet::standard();
  const Matrix4c alpha3 = g.gamma[0] * g.gamma[3];
  const Rule1D phi_rule = periodic_trapezoid(phi_points);
  complex total = 0.0;
  for (std::size_t ip = 0; ip < phi_rule.size(); ++ip) {
    const SpinorValue psi = with_phi(profile, lambda, phi_rule.nodes[ip]);
    total += phi_rule.weights[ip] * psi.dot(alpha3 * psi);
  }
  return {total.real(), total.imag()};  // R = 1
}

}  // namespace

PacketSpec PacketSpec::gaussian(HalfOdd lambda, double k0, double width, complex weight_plus, complex weight_minus,
                                bool normalize) {
  if (!(width > 0.0) || !std::isfinite(width)) throw std::invalid_argument("packet width must be positive");
  if (!std::isfinite(k0)) throw std::invalid_argument("packet center must be finite");
  PacketSpec p;
  p.lambda_ = lambda;
  p.model_ = GaussianAmplitude{k0, width, weight_plus, weight_minus};
  p.normalize_ = normalize;
  return p;
}

PacketSpec PacketSpec::tabulated(HalfOdd lambda, TabulatedAmplitude table, bool normalize) {
  if (table.k.size() < 2 || table.a_plus.size() != table.k.size() || table.a_minus.size() != table.k.size())
    throw std::invalid_argument("tabulated packet needs matching k, a_plus, a_minus arrays of length >= 2");
  if (!std::is_sorted(table.k.begin(), table.k.end()) ||
      std::adjacent_find(table.k.begin(), table.k.end()) != table.k.end())
    throw std::invalid_argument("tabulated packet grid must be strictly increasing");
  PacketSpec p;
  p.lambda_ = lambda;
  p.model_ = std::move(table);
  p.normalize_ = normalize;
  return p;
}

Rule1D PacketSpec::momentum_rule(int nodes) const {
  if (const auto* g = std::get_if<GaussianAmplitude>(&model_)) {
    const int panels = std::max(1, (nodes + kPanelOrder - 1) / kPanelOrder);
    return composite_gauss_legendre(panels, kPanelOrder, g->k0 - kWindowSigmas * g->width,
                                    g->k0 + kWindowSigmas * g->width);
  }
  return trapezoid(std::get<TabulatedAmplitude>(model_).k);
}

std::pair<complex, complex> PacketSpec::amplitudes(double k) const {
  if (const auto* g = std::get_if<GaussianAmplitude>(&model_)) {
    const double x = (k - g->k0) / g->width;
    const double amp = std::exp(-0.25 * x * x) / std::pow(constants::two_pi * g->width * g->width, 0.25);
    return {g->weight_plus * amp, g->weight_minus * amp};
  }
  const auto& t = std::get<TabulatedAmplitude>(model_);
  if (k < t.k.front() || k > t.k.back()) return {0.0, 0.0};
  auto hi = std::upper_bound(t.k.begin(), t.k.end(), k);
  if (hi == t.k.end()) return {t.a_plus.back(), t.a_minus.back()};
  const std::size_t j = static_cast<std::size_t>(hi - t.k.begin());
  const std::size_t i = j - 1;
  const double s = (k - t.k[i]) / (t.k[j] - t.k[i]);
  return {(1.0 - s) * t.a_plus[i] + s * t.a_plus[j], (1.0 - s) * t.a_minus[i] + s * t.a_minus[j]};
}

double SampledPacket::norm() const {
  double total = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i)
    total += rule.weights[i] * (std::norm(a_plus[i]) + std::norm(a_minus[i]));
  return total;
}

SampledPacket sample_packet(const PacketSpec& p, const DimensionlessParams& d, const Rule1D& rule) {
  SampledPacket sp;
  sp.lambda = p.lambda();
  sp.rule = rule;
  const std::size_t count = rule.size();
  sp.a_plus.resize(count);
  sp.a_minus.resize(count);
  for (std::size_t i = 0; i < count; ++i) std::tie(sp.a_plus[i], sp.a_minus[i]) = p.amplitudes(rule.nodes[i]);
  if (p.normalize()) {
    const double norm = sp.norm();
    if (!(norm > 0.0)) throw std::invalid_argument("packet has zero norm on the momentum rule");
    const double scale = 1.0 / std::sqrt(norm);
    for (std::size_t i = 0; i < count; ++i) {
      sp.a_plus[i] *= scale;
      sp.a_minus[i] *= scale;
    }
  }
  sp.energy.resize(count);
  sp.spinor0.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double k = rule.nodes[i];
    sp.energy[i] = energy_infinite(k, sp.lambda, d);
    const auto up = ModeSpec::infinite(k, sp.lambda, Polarization::plus);
    const auto down = ModeSpec::infinite(k, sp.lambda, Polarization::minus);
    sp.spinor0[i] = sp.a_plus[i] * eval_mode(up, d, 0.0, 0.0, 0.0) + sp.a_minus[i] * eval_mode(down, d, 0.0, 0.0, 0.0);
  }
  return sp;
}

double circular_current_packet(const PacketSpec& p, const DimensionlessParams& d, const Rule1D& rule) {
  const SampledPacket sp = sample_packet(p, d, rule);
  require_normalized(sp);
  double inverse_energy = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i)
    inverse_energy += rule.weights[i] * (std::norm(sp.a_plus[i]) + std::norm(sp.a_minus[i])) / sp.energy[i];
  return (sp.lambda.value() + d.beta) / constants::two_pi * inverse_energy;
}

double packet_energy(const PacketSpec& p, const DimensionlessParams& d, const Rule1D& rule) {
  const SampledPacket sp = sample_packet(p, d, rule);
  require_normalized(sp);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i)
    total += rule.weights[i] * sp.energy[i] * (std::norm(sp.a_plus[i]) + std::norm(sp.a_minus[i]));
  return total;
}

double packet_polarization(const PacketSpec& p, const Rule1D& rule) {
  double plus = 0.0, minus = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto [ap, am] = p.amplitudes(rule.nodes[i]);
    plus += rule.weights[i] * std::norm(ap);
    minus += rule.weights[i] * std::norm(am);
  }
  const double norm = p.normalize() ? plus + minus : 1.0;
  if (!(norm > 0.0)) throw std::invalid_argument("packet has zero norm on the momentum rule");
  if (std::abs((plus + minus) / norm - 1.0) > 1e-10) throw std::invalid_argument("packet is not normalized");
  return p.lambda().value() * (plus - minus) / norm;
}

double packet_velocity(const PacketSpec& p, const DimensionlessParams& d, const Rule1D& rule) {
  const SampledPacket sp = sample_packet(p, d, rule);
  require_normalized(sp);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i)
    total += rule.weights[i] * (std::norm(sp.a_plus[i]) + std::norm(sp.a_minus[i])) * rule.nodes[i] / sp.energy[i];
  return total;
}

SpinorValue packet_spinor(const SampledPacket& sp, double t, double phi, double z) {
  return with_phi(packet_profile(sp, t, z), sp.lambda, phi);
}

std::size_t required_momentum_nodes(const SampledPacket& sp, const DimensionlessParams& d, double t, double z) {
  (void)d;
  double v_max = 0.0;
  for (std::size_t i = 0; i < sp.rule.size(); ++i) v_max = std::max(v_max, std::abs(sp.rule.nodes[i]) / sp.energy[i]);
  const double reach = std::abs(t) * v_max + std::abs(z);
  if (reach == 0.0) return 1;
  const double allowed = constants::pi / (4.0 * reach);
  return static_cast<std::size_t>(std::ceil(sp.rule.width() / allowed));
}

LongitudinalCurrent longitudinal_current_direct(const SampledPacket& sp, const DimensionlessParams& d, double t,
                                                double z, int phi_points) {
  require_normalized(sp);
  const std::size_t required = required_momentum_nodes(sp, d, t, z);
  if (sp.rule.size() < required)
    throw ResolutionError("momentum grid too coarse at t=" + std::to_string(t) + ", z=" + std::to_string(z) +
                              ": need at least " + std::to_string(required) + " nodes, have " +
                              std::to_string(sp.rule.size()),
                          required);
  return longitudinal_from_profile(packet_profile(sp, t, z), sp.lambda, phi_points);
}

LongitudinalCurrent longitudinal_current_packet_direct(const PacketSpec& p, const DimensionlessParams& d, double t,
                                                       double z, const Rule1D& rule, int phi_points) {
  return longitudinal_current_direct(sample_packet(p, d, rule), d, t, z, phi_points);
}

LongitudinalCurrent longitudinal_current_formula(const SampledPacket& sp, const DimensionlessParams& d, double t,
                                                 double z, Bracket bracket) {
  require_normalized(sp);
  const std::size_t required = required_momentum_nodes(sp, d, t, z);
  if (sp.rule.size() < required)
    throw ResolutionError("momentum grid too coarse for the double-momentum formula: need at least " +
                              std::to_string(required) + " nodes",
                          required);
  const double M = d.mu;
  const double q = sp.lambda.value() + d.beta;
  const std::size_t count = sp.rule.size();
  std::vector<complex> phase(count);
  std::vector<double> root(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double E = sp.energy[i];
    phase[i] = std::exp(I * (E * t - sp.rule.nodes[i] * z));
    root[i] = std::sqrt(E * (E + M));
  }
  complex total = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double k = sp.rule.nodes[i];
    const double E = sp.energy[i];
    const complex ap = std::conj(sp.a_plus[i]);
    const complex am = std::conj(sp.a_minus[i]);
    complex row = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
      const double kp = sp.rule.nodes[j];
      const double Ep = sp.energy[j];
      const double mass_term = bracket == Bracket::energy_sum ? M * (E + Ep) : M * (k + kp);
      const double diag = k * Ep + kp * E + mass_term;
      const complex same = ap * sp.a_plus[j] + am * sp.a_minus[j];
      const complex cross = ap * sp.a_minus[j] + am * sp.a_plus[j];
      const complex bracket_value = diag * same - I * q * (E - Ep) * cross;
      row += sp.rule.weights[j] * std::conj(phase[j]) / root[j] * bracket_value;
    }
    total += sp.rule.weights[i] * phase[i] / root[i] * row;
  }
  total /= 4.0 * constants::pi;
  return {total.real(), total.imag()};
}

LongitudinalCurrent longitudinal_current_packet_formula(const PacketSpec& p, const DimensionlessParams& d,
                                                        double t, double z, const Rule1D& rule, Bracket bracket) {
  return longitudinal_current_formula(sample_packet(p, d, rule), d, t, z, bracket);
}

double packet_norm_direct(const SampledPacket& sp, double t, const Rule1D& z_rule, int phi_points) {
  const Rule1D phi_rule = periodic_trapezoid(phi_points);
  double total = 0.0;
  for (std::size_t iz = 0; iz < z_rule.size(); ++iz) {
    const SpinorValue profile = packet_profile(sp, t, z_rule.nodes[iz]);
    double ring = 0.0;
    for (std::size_t ip = 0; ip < phi_rule.size(); ++ip) {
      const SpinorValue psi = with_phi(profile, sp.lambda, phi_rule.nodes[ip]);
      ring += phi_rule.weights[ip] * psi.squaredNorm();
    }
    total += z_rule.weights[iz] * ring;
  }
  return total;  // R = 1
}

double packet_flux_direct(const SampledPacket& sp, const DimensionlessParams& d, double t, const Rule1D& z_rule,
                          int phi_points) {
  double total = 0.0;
  for (std::size_t iz = 0; iz < z_rule.size(); ++iz)
    total += z_rule.weights[iz] * longitudinal_current_direct(sp, d, t, z_rule.nodes[iz], phi_points).value;
  return total;
}

}  // namespace abcyl
