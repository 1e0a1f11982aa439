#pragma once

#include <optional>
#include <string>
#include <vector>

namespace abcyl {

/// Device parameters in laboratory units.
struct PhysicalParams {
  double mass_eV = 0.0;               ///< rest energy M c^2
  double radius_nm = 0.0;             ///< cylinder radius R
  std::optional<double> length_nm;    ///< cylinder length L; empty for an infinite cylinder
  double b_field_T = 0.0;             ///< axial field B
  double fermi_eV = 0.0;              ///< non-relativistic Fermi energy E_F
};

/// The dimensionless groups every formula in the library consumes.
///
/// Lengths are measured in units of R and energies in units of 1/R
/// (hbar = c = 1), so mu = MR, nu = pi R / L, alpha = R sqrt(E_F (E_F + 2M)),
/// beta = e B R^2 / 2. nu = 0 encodes the infinite cylinder.
struct DimensionlessParams {
  double mu = 1.0;
  double nu = 0.0;
  double beta = 0.0;
  double alpha = 0.0;
  /// R in eV^-1, only known when built from physical parameters.
  std::optional<double> radius_natural;

  /// Validates and returns the bundle; throws ConfigError.
  static DimensionlessParams make(double mu, double nu, double beta, double alpha);

  bool infinite() const noexcept { return nu == 0.0; }
  /// Cylinder length in units of R (pi / nu); infinite for nu = 0.
  double length() const noexcept;
  /// Fermi level plus rest energy, R (E_F + M) = sqrt(mu^2 + alpha^2).
  double fermi_level() const noexcept;
};

DimensionlessParams to_dimensionless(const PhysicalParams& p);

struct RegimeThresholds {
  double short_nu_min = 10.0;         ///< "1 << nu" read as nu >= this
  double nonrelativistic_ratio = 0.04;  ///< "alpha << mu" read as alpha <= ratio * mu
};

struct RegimeReport {
  bool short_cylinder = false;
  bool ring_like = false;
  bool nonrelativistic = false;
  RegimeThresholds thresholds;

  std::vector<std::string> flags() const;
};

RegimeReport validate_regime(const DimensionlessParams& d, const RegimeThresholds& thresholds = {});

}  // namespace abcyl
