#include "abcyl/fermi.hpp"

#include <cmath>

#include "abcyl/constants.hpp"
#include "abcyl/currents.hpp"
#include "abcyl/errors.hpp"
#include "abcyl/quadrature.hpp"

namespace abcyl {

namespace {

void require_finite(const DimensionlessParams& d, const char* what) {
  if (d.nu == 0.0) throw RegimeError(std::string(what) + " requires a finite cylinder (nu > 0)");
}

void fill_sea_summary(PersistentReport& r, const FermiSea& sea) {
  r.electron_count = sea.electron_count();
  r.n_F = sea.n_F();
  r.empty_sea = sea.empty();
  if (!sea.empty()) {
    r.lambda_F = sea.lambda_F().value();
    double total = 0.0;
    for (HalfOdd l : sea.lambda_n()) total += l.value();
    r.sum_lambda_n = total;
  }
  if (r.empty_sea) r.notes.emplace_back("empty Fermi sea: no state satisfies the occupation condition");
}

}  // namespace

std::string to_string(PersistentMethod m) {
  switch (m) {
    case PersistentMethod::exact: return "exact";
    case PersistentMethod::linearized: return "linearized";
    case PersistentMethod::compact: return "compact";
    case PersistentMethod::short_cylinder: return "short";
    case PersistentMethod::nonrelativistic: return "nonrel";
    case PersistentMethod::ring_limit: return "ring";
  }
  return "unknown";
}

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x))
    correction_ += (sum_ - t) + x;
  else
    correction_ += (x - t) + sum_;
  sum_ = t;
}

double j_coeff(int n, HalfOdd lambda, const DimensionlessParams& d) {
  require_finite(d, "j_coeff");
  const double a = d.mu * d.mu + d.nu * d.nu * n * n;
  const double l = lambda.value();
  const double s = a + l * l;
  return a / (s * std::sqrt(s));
}

PersistentReport persistent_exact(const DimensionlessParams& d) {
  require_finite(d, "persistent_exact");
  const FermiSea sea = enumerate_fermi_sea(d, OccupationCriterion::exact);
  PersistentReport r;
  r.method = PersistentMethod::exact;
  r.regime = validate_regime(d);
  fill_sea_summary(r, sea);
  CompensatedSum sum;
  sea.for_each([&](int n, HalfOdd l) { sum.add(chi(n, l, d)); });
  r.value = sum.value() / constants::two_pi;
  return r;
}

double c_coefficient_exact(const DimensionlessParams& d) {
  require_finite(d, "c_coefficient_exact");
  const FermiSea sea = enumerate_fermi_sea(d, OccupationCriterion::quadratic);
  CompensatedSum sum;
  sea.for_each([&](int n, HalfOdd l) {
    if (l.twice() > 0) sum.add(j_coeff(n, l, d));
  });
  return sum.value();
}

PersistentReport persistent_linearized(const DimensionlessParams& d) {
  require_finite(d, "persistent_linearized");
  const FermiSea sea = enumerate_fermi_sea(d, OccupationCriterion::quadratic);
  PersistentReport r;
  r.method = PersistentMethod::linearized;
  r.regime = validate_regime(d);
  fill_sea_summary(r, sea);
  r.c = c_coefficient_exact(d);
  r.value = d.beta * *r.c / constants::pi;
  return r;
}

double c_compact(const DimensionlessParams& d) {
  require_finite(d, "c_compact");
  return sum_lambda_n_exact(d) / d.fermi_level();
}

PersistentReport persistent_compact(const DimensionlessParams& d) {
  require_finite(d, "persistent_compact");
  const FermiSea sea = enumerate_fermi_sea(d, OccupationCriterion::quadratic);
  PersistentReport r;
  r.method = PersistentMethod::compact;
  r.regime = validate_regime(d);
  fill_sea_summary(r, sea);
  r.c = c_compact(d);
  r.value = d.beta * *r.c / constants::pi;
  return r;
}

double inner_sum_j(int n, HalfOdd lambda_n, const DimensionlessParams& d) {
  CompensatedSum sum;
  for (int t = 1; t <= lambda_n.twice(); t += 2) sum.add(j_coeff(n, HalfOdd::from_twice(t), d));
  return sum.value();
}

double inner_sum_estimate(HalfOdd lambda_n, const DimensionlessParams& d) { return lambda_n.value() / d.fermi_level(); }

double sum_lambda_n_exact(const DimensionlessParams& d) {
  require_finite(d, "sum_lambda_n");
  const FermiSea sea = enumerate_fermi_sea(d, OccupationCriterion::quadratic);
  CompensatedSum sum;
  for (HalfOdd l : sea.lambda_n()) sum.add(l.value());
  return sum.value();
}

SumLambdaIntegral sum_lambda_n_integral(const DimensionlessParams& d) {
  require_finite(d, "sum_lambda_n");
  const FermiSea sea = enumerate_fermi_sea(d, OccupationCriterion::quadratic);
  SumLambdaIntegral out;
  out.n_F = sea.n_F();
  if (out.n_F == 0) return out;
  const double nF = out.n_F;
  const double nu2 = d.nu * d.nu;
  // integrand is smooth (radicand >= 1/4); one 32-point panel per ten units of n
  const int panels = std::max(1, static_cast<int>(std::ceil(nF / 10.0)));
  const Rule1D rule = composite_gauss_legendre(panels, 32, 0.0, nF);
  out.numeric = rule.integrate([&](double x) { return std::sqrt(nu2 * (nF * nF - x * x) + 0.25); });
  out.closed_form = 0.25 * nF * (1.0 + constants::pi * nF / d.nu);
  return out;
}

PersistentReport persistent_short(const DimensionlessParams& d, const RegimeThresholds& thresholds) {
  require_finite(d, "persistent_short");
  if (d.nu > d.alpha)
    throw RegimeError(
        "nu > alpha: no longitudinal motion is allowed; use the ring limit (nu := 0, alpha := lambda_F)");
  PersistentReport r;
  r.method = PersistentMethod::short_cylinder;
  r.regime = validate_regime(d, thresholds);
  const double radicand = d.alpha * d.alpha - d.nu * d.nu;
  const double lam_cont = std::sqrt(std::max(0.0, radicand));
  r.lambda_F_continuous = lam_cont;
  r.value = d.beta / constants::pi * std::sqrt(radicand / (d.alpha * d.alpha + d.mu * d.mu));
  r.n_F = 1;
  if (lam_cont >= 0.5) {
    const HalfOdd lf = HalfOdd::floor(lam_cont);
    r.lambda_F = lf.value();
    r.electron_count = lf.twice() + 1;
  } else {
    r.electron_count = 0;
    r.n_F = 0;
    r.empty_sea = true;
    r.notes.emplace_back("no angular states: alpha^2 - nu^2 < 1/4");
  }
  if (!r.regime.short_cylinder) r.notes.emplace_back("parameters are outside the very-short-cylinder regime");
  return r;
}

PersistentReport persistent_ring_limit(const DimensionlessParams& d) {
  PersistentReport r;
  r.method = PersistentMethod::ring_limit;
  r.regime = validate_regime(d);
  r.n_F = 0;
  r.notes.emplace_back("ring substitution nu := 0, alpha := lambda_F in the short-cylinder formula");
  if (d.alpha < 0.5) {
    r.empty_sea = true;
    r.notes.emplace_back("empty ring: alpha < 1/2");
    return r;
  }
  const HalfOdd lf = HalfOdd::floor(d.alpha);
  r.lambda_F = lf.value();
  r.lambda_F_continuous = d.alpha;
  r.electron_count = lf.twice() + 1;
  r.value = d.beta / constants::pi * lf.value() / std::hypot(lf.value(), d.mu);
  return r;
}

PersistentReport persistent_nonrel(const DimensionlessParams& d, const RegimeThresholds& thresholds) {
  require_finite(d, "persistent_nonrel");
  const FermiSea sea = enumerate_fermi_sea(d, OccupationCriterion::quadratic);
  PersistentReport r;
  r.method = PersistentMethod::nonrelativistic;
  r.regime = validate_regime(d, thresholds);
  fill_sea_summary(r, sea);
  if (sea.empty()) return r;
  r.value = d.beta / constants::pi * sea.lambda_F().value() / d.mu;
  r.alternate_value = d.beta / constants::pi * static_cast<double>(r.electron_count) / (2.0 * d.mu);
  if (!r.regime.nonrelativistic) r.notes.emplace_back("alpha is not small compared with mu");
  return r;
}

}  // namespace abcyl
