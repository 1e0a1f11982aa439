#pragma once

#include <optional>
#include <vector>

#include "abcyl/half_odd.hpp"
#include "abcyl/params.hpp"

namespace abcyl {

enum class Geometry { infinite, finite };

/// Polarization sigma = +1/2 (plus) or -1/2 (minus).
enum class Polarization { plus, minus };

inline double sigma_value(Polarization s) noexcept { return s == Polarization::plus ? 0.5 : -0.5; }

/// A single-particle mode. For the infinite cylinder `k` is the longitudinal
/// momentum times R; for the finite cylinder `n` >= 1 labels k_n = pi n / L.
struct ModeSpec {
  Geometry geometry = Geometry::finite;
  double k = 0.0;
  int n = 1;
  HalfOdd lambda;
  Polarization sigma = Polarization::plus;

  static ModeSpec infinite(double k, HalfOdd lambda, Polarization sigma);
  static ModeSpec finite(int n, HalfOdd lambda, Polarization sigma);

  /// Longitudinal momentum times R: k, or nu*n for the finite geometry.
  double momentum(const DimensionlessParams& d) const;
};

/// R E_{k,lambda} = sqrt(mu^2 + (kR)^2 + (lambda+beta)^2).
double energy_infinite(double k, HalfOdd lambda, const DimensionlessParams& d);

/// R E_{n,lambda} = sqrt(mu^2 + nu^2 n^2 + (lambda+beta)^2). Throws RegimeError
/// for nu = 0.
double energy_finite(int n, HalfOdd lambda, const DimensionlessParams& d);

double energy(const ModeSpec& mode, const DimensionlessParams& d);

/// d(R E)/d beta = (lambda+beta) / (R E).
double denergy_dbeta(const ModeSpec& mode, const DimensionlessParams& d);

enum class OccupationCriterion {
  exact,      ///< nu^2 n^2 + (lambda+beta)^2 <= alpha^2
  quadratic,  ///< nu^2 n^2 + lambda^2 <= alpha^2 (beta dropped)
};

/// Zero-temperature Fermi sea of a finite cylinder.
///
/// For each n the occupied lambdas form one contiguous run of half-odd
/// integers, so the sea is stored as rows [lambda_min, lambda_max].
class FermiSea {
 public:
  struct Row {
    int n;
    HalfOdd lambda_min;
    HalfOdd lambda_max;
    int count() const noexcept { return (lambda_max.twice() - lambda_min.twice()) / 2 + 1; }
    /// Largest occupied |lambda|.
    HalfOdd largest_abs() const noexcept { return std::max(lambda_min.abs(), lambda_max.abs()); }
  };

  struct State {
    int n;
    HalfOdd lambda;
  };

  FermiSea() = default;
  FermiSea(OccupationCriterion criterion, std::vector<Row> rows);

  OccupationCriterion criterion() const noexcept { return criterion_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  bool empty() const noexcept { return rows_.empty(); }

  /// Largest occupied n (0 for an empty sea).
  int n_F() const noexcept { return rows_.empty() ? 0 : rows_.back().n; }
  /// lambda_n for n = 1..n_F, the largest occupied |lambda| per n.
  std::vector<HalfOdd> lambda_n() const;
  /// lambda_{n=1}; requires a non-empty sea.
  HalfOdd lambda_F() const;
  /// Number of occupied states.
  long long electron_count() const noexcept;

  bool contains(int n, HalfOdd lambda) const noexcept;
  /// All occupied states, ascending n then ascending lambda.
  std::vector<State> occupied() const;

  template <typename F>
  void for_each(F&& f) const {
    for (const auto& row : rows_)
      for (int t = row.lambda_min.twice(); t <= row.lambda_max.twice(); t += 2) f(row.n, HalfOdd::from_twice(t));
  }

 private:
  OccupationCriterion criterion_ = OccupationCriterion::exact;
  std::vector<Row> rows_;
};

bool occupied(int n, HalfOdd lambda, const DimensionlessParams& d, OccupationCriterion criterion);

/// Enumerates every occupied (n, lambda). Requires nu > 0 (RegimeError).
FermiSea enumerate_fermi_sea(const DimensionlessParams& d, OccupationCriterion criterion);

/// sqrt(alpha^2 - nu^2 n^2), the continuous lambda_n of the approximate
/// identities; empty when the radicand is negative.
std::optional<double> lambda_n_continuous(int n, const DimensionlessParams& d);

}  // namespace abcyl
