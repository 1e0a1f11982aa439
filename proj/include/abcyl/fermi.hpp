#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abcyl/params.hpp"
#include "abcyl/spectrum.hpp"

namespace abcyl {

enum class PersistentMethod { exact, linearized, compact, short_cylinder, nonrelativistic, ring_limit };

std::string to_string(PersistentMethod m);

/// Result of one persistent-current evaluation. `value` is the dimensionless
/// R I; the physical current is value / R.
struct PersistentReport {
  PersistentMethod method = PersistentMethod::exact;
  double value = 0.0;
  /// Second variant where a formula has two (nonrelativistic:
  /// N_e / (2 mu) form).
  std::optional<double> alternate_value;
  long long electron_count = 0;
  int n_F = 0;
  std::optional<double> lambda_F;             ///< half-odd lambda_F from the enumerated sea
  std::optional<double> lambda_F_continuous;  ///< sqrt(alpha^2 - nu^2)
  std::optional<double> c;                    ///< c(mu, nu) where the method has one
  std::optional<double> sum_lambda_n;
  bool empty_sea = false;
  RegimeReport regime;
  std::vector<std::string> notes;
};

/// j(n, lambda) = (mu^2 + nu^2 n^2) / (mu^2 + nu^2 n^2 + lambda^2)^{3/2}.
double j_coeff(int n, HalfOdd lambda, const DimensionlessParams& d);

/// Sum of chi(n, lambda)/(2 pi) over the sea occupied under the exact
/// (beta-dependent) condition. Requires nu > 0.
PersistentReport persistent_exact(const DimensionlessParams& d);

/// c(mu, nu) = sum over the beta-free sea, lambda > 0, of j(n, lambda).
double c_coefficient_exact(const DimensionlessParams& d);

/// R I = beta c / pi.
PersistentReport persistent_linearized(const DimensionlessParams& d);

/// sum_{n <= n_F} lambda_n / sqrt(mu^2 + alpha^2), lambda_n from the beta-free sea.
double c_compact(const DimensionlessParams& d);
PersistentReport persistent_compact(const DimensionlessParams& d);

/// Sum_{lambda = 1/2}^{lambda_n} j(n, lambda) for one row of the sea.
double inner_sum_j(int n, HalfOdd lambda_n, const DimensionlessParams& d);
/// lambda_n / sqrt(mu^2 + alpha^2), the integral estimate of inner_sum_j.
double inner_sum_estimate(HalfOdd lambda_n, const DimensionlessParams& d);

struct SumLambdaIntegral {
  int n_F = 0;
  /// int_0^{n_F} sqrt(nu^2 (n_F^2 - x^2) + 1/4) dx by Gauss-Legendre.
  double numeric = 0.0;
  /// (1/4) n_F (1 + pi n_F / nu); reported alongside, it does not track `numeric`.
  double closed_form = 0.0;
};

/// Sum of lambda_n over the beta-free sea.
double sum_lambda_n_exact(const DimensionlessParams& d);
SumLambdaIntegral sum_lambda_n_integral(const DimensionlessParams& d);

/// R I = (beta/pi) sqrt((alpha^2 - nu^2)/(alpha^2 + mu^2)), very short
/// cylinders with only n = 1 occupied. Throws RegimeError for nu > alpha
/// (use persistent_ring_limit); outside 1 << nu < alpha < 2 nu a note is added.
PersistentReport persistent_short(const DimensionlessParams& d, const RegimeThresholds& thresholds = {});

/// The ring substitution nu := 0, alpha := lambda_F in the short-cylinder
/// formula, with lambda_F the largest half-odd integer <= alpha.
PersistentReport persistent_ring_limit(const DimensionlessParams& d);

/// R I = (beta/pi) lambda_F / mu, and the alternate (beta/pi) N_e / (2 mu).
PersistentReport persistent_nonrel(const DimensionlessParams& d, const RegimeThresholds& thresholds = {});

/// Neumaier-compensated accumulator; summation order is the caller's.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

}  // namespace abcyl
