#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "abcyl/gamma.hpp"
#include "abcyl/params.hpp"
#include "abcyl/quadrature.hpp"
#include "abcyl/spectrum.hpp"

namespace abcyl {

/// A spinor value together with its analytic first derivatives.
struct SpinorJet {
  SpinorValue value;
  SpinorValue dt;
  SpinorValue dphi;
  SpinorValue dz;
};

/// z-dependent part (f1, f2, g1, g2) of a mode, normalization included but
/// without the phi and t phases, plus its z-derivative.
struct ReducedProfile {
  std::array<complex, 4> value;
  std::array<complex, 4> dz;
  double energy;  ///< R E used to build the profile
};

/// Normalized fundamental spinor U^{+-} at (t, phi, z); units of R.
///
/// Infinite geometry uses the momentum-normalized modes
/// U = u(phi) e^{-iEt + ikz} / sqrt(2 pi), N = sqrt((E+M)/2E) / sqrt(2 pi R);
/// finite geometry uses the standing waves with N = sqrt((E+M)/2E) / sqrt(pi R L).
/// Throws std::out_of_range for z outside [0, L] on a finite cylinder.
SpinorValue eval_mode(const ModeSpec& mode, const DimensionlessParams& d, double t, double phi, double z);

/// Same, with analytic derivatives. `energy_scale` multiplies the exact
/// energy everywhere it enters; anything but 1 gives a non-solution.
SpinorJet eval_mode_jet(const ModeSpec& mode, const DimensionlessParams& d, double t, double phi, double z,
                        double energy_scale = 1.0);

ReducedProfile reduced_profile(const ModeSpec& mode, const DimensionlessParams& d, double z,
                               double energy_scale = 1.0);

/// Largest |component| of the reduced 4x4 system (entries E -+ M, +-i d/dz,
/// +-i(lambda+beta)/R) applied to (f1, f2, g1, g2) over the sample points.
double dirac_residual(const ModeSpec& mode, const DimensionlessParams& d, std::span<const double> z_samples,
                      double energy_scale = 1.0);

/// (E_D - M) psi built from the full gamma matrices:
/// i g0 d_t + g^phi (i d_phi - beta) + (i/2) d_phi(g^phi) + i g3 d_z - M.
SpinorValue dirac_operator_residual(const SpinorJet& jet, double phi, const DimensionlessParams& d);

/// Hamiltonian form H psi = i d_t psi of the restricted equation, Hermitian
/// with respect to the cylinder scalar product when the upper components
/// vanish at the ends.
SpinorValue apply_hamiltonian(const SpinorValue& value, const SpinorValue& dphi, const SpinorValue& dz, double phi,
                              const DimensionlessParams& d);

/// K psi with K = gamma^0 (2 S_3 L_3 + 1/2), L_3 = -i d_phi applied to the
/// analytic phi phases.
SpinorValue k_operator_apply(const ModeSpec& mode, const DimensionlessParams& d, double t, double phi, double z);

struct CurrentDensity {
  double j0;
  double jphi;
  double j3;
};

/// j^0 = psi^dag psi, j^phi = psi^dag g0 g^phi psi, j^3 = psi^dag g0 g3 psi.
/// Throws NonRealBilinear if an imaginary part exceeds 1e-10 (relative to
/// max(1, psi^dag psi)).
CurrentDensity current_density(const SpinorValue& psi, double phi);

/// Field values on the (phi, z) tensor grid of a QuadratureRule, phi-major.
struct SampledField {
  std::vector<SpinorValue> values;
  std::size_t phi_count = 0;
  std::size_t z_count = 0;
};

SampledField sample_mode(const ModeSpec& mode, const DimensionlessParams& d, const QuadratureRule& rule,
                         double t = 0.0);

/// R int dphi int dz a^dag b on the rule's tensor grid.
complex inner_product(const SampledField& a, const SampledField& b, const QuadratureRule& rule);

/// Scalar product of two modes.
///
/// Finite geometry: quadrature over [0, 2 pi) x [0, L].
/// Infinite geometry: the coefficient of delta(k - k'), i.e. 2 pi R int dphi
/// U_a^dag U_b at equal momentum; differing momenta are rejected.
/// Mixed geometries throw std::invalid_argument.
complex inner_product(const ModeSpec& a, const ModeSpec& b, const DimensionlessParams& d,
                      const QuadratureRule& rule);

}  // namespace abcyl
