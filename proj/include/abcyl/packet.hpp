#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "abcyl/gamma.hpp"
#include "abcyl/half_odd.hpp"
#include "abcyl/params.hpp"
#include "abcyl/quadrature.hpp"

namespace abcyl {

/// a_+-(k) = weight_+- * g(k), g a unit-norm Gaussian in k with standard
/// deviation `width` of |g|^2 (all momenta in units of 1/R).
struct GaussianAmplitude {
  double k0 = 0.0;
  double width = 1.0;
  complex weight_plus{1.0, 0.0};
  complex weight_minus{0.0, 0.0};
};

/// Amplitudes sampled on an increasing momentum grid.
struct TabulatedAmplitude {
  std::vector<double> k;
  std::vector<complex> a_plus;
  std::vector<complex> a_minus;
};

/// Square-integrable packet of fixed total angular momentum lambda on the
/// infinite cylinder, psi = int dk [a_+ U^+_k + a_- U^-_k].
class PacketSpec {
 public:
  static PacketSpec gaussian(HalfOdd lambda, double k0, double width, complex weight_plus, complex weight_minus,
                             bool normalize = true);
  static PacketSpec tabulated(HalfOdd lambda, TabulatedAmplitude table, bool normalize = true);

  HalfOdd lambda() const noexcept { return lambda_; }
  bool normalize() const noexcept { return normalize_; }
  const std::variant<GaussianAmplitude, TabulatedAmplitude>& model() const noexcept { return model_; }

  /// Default momentum rule: Gaussian packets get `nodes` Gauss-Legendre
  /// points (16-point panels, rounded up) on [k0 - 8w, k0 + 8w]; tabulated
  /// packets get trapezoid weights on their own grid.
  Rule1D momentum_rule(int nodes = 512) const;

  /// (a_+(k), a_-(k)) before normalization. Tabulated amplitudes are
  /// linearly interpolated and vanish outside the grid.
  std::pair<complex, complex> amplitudes(double k) const;

 private:
  PacketSpec() = default;
  HalfOdd lambda_;
  std::variant<GaussianAmplitude, TabulatedAmplitude> model_;
  bool normalize_ = true;
};

/// A packet evaluated on a momentum rule, with the per-node spinor
/// a_+ U^+_k + a_- U^-_k at t = phi = z = 0 cached.
struct SampledPacket {
  HalfOdd lambda;
  Rule1D rule;
  std::vector<complex> a_plus;
  std::vector<complex> a_minus;
  std::vector<double> energy;       ///< R E_{k,lambda}
  std::vector<SpinorValue> spinor0;  ///< a_+ U^+ + a_- U^- at the origin

  /// int dk (|a_+|^2 + |a_-|^2) on the rule.
  double norm() const;
};

/// Samples the packet and, if its normalize flag is set, rescales the
/// amplitudes to unit norm on this rule.
SampledPacket sample_packet(const PacketSpec& p, const DimensionlessParams& d, const Rule1D& rule);

/// R I^c = (lambda+beta)/(2 pi) int dk (|a_+|^2 + |a_-|^2) / (R E_k).
/// Rejects packets whose norm differs from 1 by more than 1e-10.
double circular_current_packet(const PacketSpec& p, const DimensionlessParams& d, const Rule1D& rule);

/// R E_lambda = int dk R E_k (|a_+|^2 + |a_-|^2).
double packet_energy(const PacketSpec& p, const DimensionlessParams& d, const Rule1D& rule);

/// lambda int dk (|a_+|^2 - |a_-|^2).
double packet_polarization(const PacketSpec& p, const Rule1D& rule);

/// Velocity expectation int dk (|a_+|^2 + |a_-|^2) k / E_k, which is the
/// total longitudinal flux int dz I^3.
double packet_velocity(const PacketSpec& p, const DimensionlessParams& d, const Rule1D& rule);

/// psi_lambda(t, phi, z) by momentum quadrature.
SpinorValue packet_spinor(const SampledPacket& sp, double t, double phi, double z);

struct LongitudinalCurrent {
  double value;
  double imag;  ///< imaginary part left over by the evaluation; ~0 for a correct one
};

/// Node count the rule would need so its mean spacing is at most
/// pi / (4 (|t| v_max + |z|)).
std::size_t required_momentum_nodes(const SampledPacket& sp, const DimensionlessParams& d, double t, double z);

/// I^3 = R int dphi psi-bar gamma^3 psi, evaluated from the packet spinor on
/// `phi_points` uniform phi nodes. Throws ResolutionError when the momentum
/// rule is too coarse for (t, z).
LongitudinalCurrent longitudinal_current_packet_direct(const PacketSpec& p, const DimensionlessParams& d, double t,
                                                       double z, const Rule1D& rule, int phi_points = 16);
LongitudinalCurrent longitudinal_current_direct(const SampledPacket& sp, const DimensionlessParams& d, double t,
                                                double z, int phi_points = 16);

/// Which mass term to put in the diagonal bracket of the double-momentum
/// formula. `energy_sum` is M(E_k + E_k'); `momentum_sum` is M(k + k'),
/// which is what the spinor bilinear actually produces and is kept only to
/// quantify the difference.
enum class Bracket { energy_sum, momentum_sum };

/// The double-momentum closed form
///   (1/4pi) int dk dk' e^{it(E-E') - iz(k-k')} / sqrt(E E' (E+M)(E'+M))
///   * { [k E' + k' E + M(E+E')] (a+* a+' + a-* a-')
///       - i (lambda+beta)(E - E') (a+* a-' + a-* a+') }.
LongitudinalCurrent longitudinal_current_packet_formula(const PacketSpec& p, const DimensionlessParams& d,
                                                        double t, double z, const Rule1D& rule,
                                                        Bracket bracket = Bracket::energy_sum);
LongitudinalCurrent longitudinal_current_formula(const SampledPacket& sp, const DimensionlessParams& d, double t,
                                                 double z, Bracket bracket = Bracket::energy_sum);

/// <psi, psi> = R int dphi int dz psi^dag psi by direct quadrature over
/// `z_rule` (which must cover the packet) and `phi_points` phi nodes.
double packet_norm_direct(const SampledPacket& sp, double t, const Rule1D& z_rule, int phi_points = 8);

/// int dz I^3(t, z) over `z_rule`.
double packet_flux_direct(const SampledPacket& sp, const DimensionlessParams& d, double t, const Rule1D& z_rule,
                          int phi_points = 8);

}  // namespace abcyl
