#include "abcyl/params.hpp"

#include <cmath>
#include <limits>

#include "abcyl/constants.hpp"
#include "abcyl/errors.hpp"

namespace abcyl {

DimensionlessParams DimensionlessParams::make(double mu, double nu, double beta, double alpha) {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw ConfigError("mu must be positive and finite");
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw ConfigError("nu must be non-negative and finite");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw ConfigError("alpha must be non-negative and finite");
  if (!std::isfinite(beta)) throw ConfigError("beta must be finite");
  DimensionlessParams d;
  d.mu = mu;
  d.nu = nu;
  d.beta = beta;
  d.alpha = alpha;
  return d;
}

double DimensionlessParams::length() const noexcept {
  return nu == 0.0 ? std::numeric_limits<double>::infinity() : constants::pi / nu;
}

double DimensionlessParams::fermi_level() const noexcept { return std::hypot(mu, alpha); }

DimensionlessParams to_dimensionless(const PhysicalParams& p) {
  if (!(p.mass_eV > 0.0)) throw ConfigError("mass_eV must be positive");
  if (!(p.radius_nm > 0.0)) throw ConfigError("radius_nm must be positive");
  if (p.length_nm && !(*p.length_nm > 0.0)) throw ConfigError("length_nm must be positive");
  if (!(p.fermi_eV >= 0.0)) throw ConfigError("fermi_eV must be non-negative");
  if (!std::isfinite(p.b_field_T)) throw ConfigError("b_field_T must be finite");

  const double r = p.radius_nm / constants::hbar_c_eV_nm;  // eV^-1
  const double mu = p.mass_eV * r;
  const double nu = p.length_nm ? constants::pi * p.radius_nm / *p.length_nm : 0.0;
  const double beta = p.b_field_T * p.radius_nm * p.radius_nm * constants::e_over_2hbar_per_nm2_T;
  const double alpha = r * std::sqrt(p.fermi_eV * (p.fermi_eV + 2.0 * p.mass_eV));

  auto d = DimensionlessParams::make(mu, nu, beta, alpha);
  d.radius_natural = r;
  return d;
}

std::vector<std::string> RegimeReport::flags() const {
  std::vector<std::string> out;
  if (short_cylinder) out.emplace_back("short");
  if (ring_like) out.emplace_back("ring-like");
  if (nonrelativistic) out.emplace_back("non-relativistic");
  return out;
}

RegimeReport validate_regime(const DimensionlessParams& d, const RegimeThresholds& thresholds) {
  RegimeReport r;
  r.thresholds = thresholds;
  r.short_cylinder = d.nu >= thresholds.short_nu_min && d.nu < d.alpha && d.alpha < 2.0 * d.nu;
  r.ring_like = d.nu > d.alpha;
  r.nonrelativistic = d.alpha <= thresholds.nonrelativistic_ratio * d.mu;
  return r;
}

}  // namespace abcyl
