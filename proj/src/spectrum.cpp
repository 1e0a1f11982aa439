#include "abcyl/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "abcyl/errors.hpp"

namespace abcyl {

ModeSpec ModeSpec::infinite(double k, HalfOdd lambda, Polarization sigma) {
  if (!std::isfinite(k)) throw std::invalid_argument("mode momentum must be finite");
  return ModeSpec{Geometry::infinite, k, 0, lambda, sigma};
}

ModeSpec ModeSpec::finite(int n, HalfOdd lambda, Polarization sigma) {
  if (n < 1) throw std::invalid_argument("finite-cylinder mode needs n >= 1");
  return ModeSpec{Geometry::finite, 0.0, n, lambda, sigma};
}

double ModeSpec::momentum(const DimensionlessParams& d) const {
  if (geometry == Geometry::infinite) return k;
  if (d.nu == 0.0) throw RegimeError("finite-cylinder mode with nu = 0");
  return d.nu * n;
}

double energy_infinite(double k, HalfOdd lambda, const DimensionlessParams& d) {
  const double q = lambda.value() + d.beta;
  return std::sqrt(d.mu * d.mu + k * k + q * q);
}

double energy_finite(int n, HalfOdd lambda, const DimensionlessParams& d) {
  if (d.nu == 0.0) throw RegimeError("energy_finite requires nu > 0; use energy_infinite");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const double q = lambda.value() + d.beta;
  const double kn = d.nu * n;
  return std::sqrt(d.mu * d.mu + kn * kn + q * q);
}

double energy(const ModeSpec& mode, const DimensionlessParams& d) {
  return mode.geometry == Geometry::infinite ? energy_infinite(mode.k, mode.lambda, d)
                                             : energy_finite(mode.n, mode.lambda, d);
}

double denergy_dbeta(const ModeSpec& mode, const DimensionlessParams& d) {
  return (mode.lambda.value() + d.beta) / energy(mode, d);
}

bool occupied(int n, HalfOdd lambda, const DimensionlessParams& d, OccupationCriterion criterion) {
  const double shift = criterion == OccupationCriterion::exact ? d.beta : 0.0;
  const double q = lambda.value() + shift;
  const double kn = d.nu * n;
  // ties are occupied
  return kn * kn + q * q <= d.alpha * d.alpha;
}

FermiSea::FermiSea(OccupationCriterion criterion, std::vector<Row> rows)
    : criterion_(criterion), rows_(std::move(rows)) {}

std::vector<HalfOdd> FermiSea::lambda_n() const {
  std::vector<HalfOdd> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row.largest_abs());
  return out;
}

HalfOdd FermiSea::lambda_F() const {
  if (rows_.empty()) throw std::logic_error("lambda_F of an empty Fermi sea");
  return rows_.front().largest_abs();
}

long long FermiSea::electron_count() const noexcept {
  long long total = 0;
  for (const auto& row : rows_) total += row.count();
  return total;
}

bool FermiSea::contains(int n, HalfOdd lambda) const noexcept {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), n, [](const Row& r, int v) { return r.n < v; });
  return it != rows_.end() && it->n == n && lambda >= it->lambda_min && lambda <= it->lambda_max;
}

std::vector<FermiSea::State> FermiSea::occupied() const {
  std::vector<State> out;
  out.reserve(static_cast<std::size_t>(electron_count()));
  for_each([&](int n, HalfOdd l) { out.push_back({n, l}); });
  return out;
}

FermiSea enumerate_fermi_sea(const DimensionlessParams& d, OccupationCriterion criterion) {
  if (d.nu == 0.0) throw RegimeError("Fermi sea enumeration requires a finite cylinder (nu > 0)");
  const double shift = criterion == OccupationCriterion::exact ? d.beta : 0.0;
  const int n_max = static_cast<int>(std::ceil(d.alpha / d.nu));
  const int lambda_bound = static_cast<int>(std::ceil(d.alpha + std::abs(shift) + 1.0));

  std::vector<FermiSea::Row> rows;
  for (int n = 1; n <= n_max; ++n) {
    // Start from the analytic edges -shift +- r and correct by one step each
    // way against the exact predicate, so rounding in sqrt cannot misplace a
    // boundary state.
    const double kn = d.nu * n;
    const double r2 = d.alpha * d.alpha - kn * kn;
    if (r2 < 0.0) break;
    const double r = std::sqrt(r2);
    auto clamp_twice = [&](double x) {
      const double t = std::clamp(x, -2.0 * lambda_bound - 1.0, 2.0 * lambda_bound + 1.0);
      int ti = static_cast<int>(std::floor(t));
      if (ti % 2 == 0) --ti;  // make odd, rounding down
      return ti;
    };
    int hi = clamp_twice(2.0 * (r - shift));
    while (hi + 2 <= 2 * lambda_bound + 1 && occupied(n, HalfOdd::from_twice(hi + 2), d, criterion)) hi += 2;
    while (hi >= -2 * lambda_bound - 1 && !occupied(n, HalfOdd::from_twice(hi), d, criterion)) hi -= 2;
    if (hi < -2 * lambda_bound - 1) continue;  // nothing at this n
    int lo = std::min(-clamp_twice(2.0 * (r + shift)), hi);
    while (lo < hi && !occupied(n, HalfOdd::from_twice(lo), d, criterion)) lo += 2;
    while (lo - 2 >= -2 * lambda_bound - 1 && occupied(n, HalfOdd::from_twice(lo - 2), d, criterion)) lo -= 2;
    rows.push_back({n, HalfOdd::from_twice(lo), HalfOdd::from_twice(hi)});
  }
  // occupancy is monotone in n, so rows are 1..n_F without gaps
  return FermiSea(criterion, std::move(rows));
}

std::optional<double> lambda_n_continuous(int n, const DimensionlessParams& d) {
  const double kn = d.nu * n;
  const double r2 = d.alpha * d.alpha - kn * kn;
  if (r2 < 0.0) return std::nullopt;
  return std::sqrt(r2);
}

}  // namespace abcyl
