#include <doctest.h>

#include <cmath>

#include "abcyl/constants.hpp"
#include "abcyl/currents.hpp"
#include "abcyl/errors.hpp"
#include "abcyl/fermi.hpp"

using namespace abcyl;

namespace {

HalfOdd h(int twice) { return HalfOdd::from_twice(twice); }
DimensionlessParams P(double mu, double nu, double beta, double alpha) {
  return DimensionlessParams::make(mu, nu, beta, alpha);
}
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("compensated summation") {
  CompensatedSum s;
  for (double x : {1.0, 1e100, 1.0, -1e100}) s.add(x);
  CHECK(s.value() == 2.0);
}

TEST_CASE("j coefficient") {
  // mu^2 + nu^2 n^2 = 9.75 and lambda = 5/2 give 9.75 / 16^{3/2}
  const auto d = P(std::sqrt(8.75), 1.0, 0, 0);
  CHECK(j_coeff(1, h(5), d) == doctest::Approx(9.75 / 64.0).epsilon(1e-15));
  CHECK(j_coeff(1, h(200001), d) < 1e-13);
  CHECK(j_coeff(3, h(-7), d) > 0.0);
}

TEST_CASE("pairing identity is cubic in beta") {
  const auto resid = [](double beta) {
    const auto d = P(1.4, 0.9, beta, 0);
    return std::abs(chi(2, h(3), d) + chi(2, h(-3), d) - 2.0 * j_coeff(2, h(3), d) * beta);
  };
  const double ratio = resid(1e-2) / resid(1e-3);
  CHECK(ratio > 900.0);
  CHECK(ratio < 1100.0);
}

TEST_CASE("exact persistent current: small sea by hand") {
  CHECK(persistent_exact(P(300, 1, 0, 2.2)).value == 0.0);

  const auto d = P(300, 1, 1e-4, 2.2);
  const auto r = persistent_exact(d);
  CHECK(r.electron_count == 6);
  CHECK(r.n_F == 2);
  double sum = 0.0;
  for (int t : {-3, -1, 1, 3}) {
    const double q = t / 2.0 + 1e-4;
    sum += q / std::sqrt(300.0 * 300.0 + 1.0 + q * q);
  }
  for (int t : {-1, 1}) {
    const double q = t / 2.0 + 1e-4;
    sum += q / std::sqrt(300.0 * 300.0 + 4.0 + q * q);
  }
  CHECK(r.value == doctest::Approx(sum / constants::two_pi).epsilon(1e-12));
  CHECK(r.value > 0.0);
  CHECK(persistent_exact(P(300, 1, -1e-4, 2.2)).value < 0.0);
  CHECK_THROWS_AS(persistent_exact(P(1, 0, 0, 1)), RegimeError);
}

TEST_CASE("empty sea") {
  const auto r = persistent_exact(P(10, 1, 1e-3, 0.5));
  CHECK(r.empty_sea);
  CHECK(r.value == 0.0);
  CHECK(r.electron_count == 0);
  CHECK_FALSE(r.notes.empty());
  CHECK(persistent_linearized(P(10, 1, 1e-3, 0.5)).value == 0.0);
}

TEST_CASE("antisymmetry in beta") {
  for (double beta : {1e-4, 3e-3, 0.2}) {
    const double a = persistent_exact(P(40, 0.6, beta, 12.3)).value;
    const double b = persistent_exact(P(40, 0.6, -beta, 12.3)).value;
    CHECK(std::abs(a + b) <= 1e-13 * std::abs(a));
  }
}

TEST_CASE("linearized coefficient") {
  const auto single = P(2.0, 1.0, 1e-4, 1.2);
  CHECK(c_coefficient_exact(single) == doctest::Approx(j_coeff(1, h(1), single)).epsilon(1e-15));
  const auto d = P(80, 0.7, 1e-4, 14.0);
  CHECK(c_coefficient_exact(d) > 0.0);
  CHECK(rel(persistent_exact(d).value, persistent_linearized(d).value) <= 10.0 * 1e-8);
}

TEST_CASE("approximate methods are linear in beta") {
  const auto at = [](double beta) { return P(60, 1.2, beta, 20.0); };
  const double b = 1e-4;
  const double lin = persistent_linearized(at(b)).value;
  CHECK(persistent_linearized(at(2 * b)).value == doctest::Approx(2 * lin).epsilon(1e-15));
  CHECK(persistent_compact(at(2 * b)).value == doctest::Approx(2 * persistent_compact(at(b)).value).epsilon(1e-15));
  CHECK(persistent_nonrel(at(2 * b)).value == doctest::Approx(2 * persistent_nonrel(at(b)).value).epsilon(1e-15));
  const auto s = [](double beta) { return P(300, 10, beta, 15); };
  CHECK(persistent_short(s(2 * b)).value == doctest::Approx(2 * persistent_short(s(b)).value).epsilon(1e-15));
  // the exact value is linear up to O(beta^2)
  const double slope1 = persistent_exact(at(b)).value / b;
  const double slope2 = persistent_exact(at(b / 2)).value / (b / 2);
  CHECK(rel(slope1, slope2) <= 4 * b * b);
}

TEST_CASE("compact coefficient and the inner sums") {
  const auto d = P(250, 1, 1e-4, 50);
  const auto sea = enumerate_fermi_sea(d, OccupationCriterion::quadratic);
  const auto ln = sea.lambda_n();
  // the inner-sum estimate is good to about 1/(2 lambda_n + 1)
  for (std::size_t i = 0; i < ln.size(); ++i) {
    const int n = static_cast<int>(i + 1);
    const double e = rel(inner_sum_estimate(ln[i], d), inner_sum_j(n, ln[i], d));
    CHECK(e < 1.6 / (2 * ln[i].value() + 1));
  }
  CHECK(rel(inner_sum_estimate(ln[0], d), inner_sum_j(1, ln[0], d)) < 0.01);
  CHECK(c_compact(d) == doctest::Approx(sum_lambda_n_exact(d) / std::hypot(250.0, 50.0)).epsilon(1e-15));
  CHECK(rel(persistent_compact(d).value, persistent_linearized(d).value) < 0.02);
}

TEST_CASE("sum of lambda_n against its integral") {
  const auto d = P(1, 0.5, 0, 100);
  const auto s = sum_lambda_n_integral(d);
  CHECK(s.n_F == 199);
  CHECK(rel(sum_lambda_n_exact(d), s.numeric) < 0.01);
  CHECK(s.closed_form == doctest::Approx(0.25 * 199 * (1 + constants::pi * 199 / 0.5)));

  // with nu = 1 and large n_F the integral approaches the quarter disc pi n_F^2 / 4
  const auto e = P(1, 1.0, 0, 300.5);
  const auto se = sum_lambda_n_integral(e);
  CHECK(rel(se.numeric, constants::pi * se.n_F * se.n_F / 4.0) < 1e-4);

  const auto sea = enumerate_fermi_sea(d, OccupationCriterion::quadratic);
  CHECK(sea.electron_count() == sea.n_F() + static_cast<long long>(2 * sum_lambda_n_exact(d)));
}

TEST_CASE("short cylinder") {
  const auto d = P(300, 10, 1e-4, 15);
  const auto r = persistent_short(d);
  CHECK(*r.lambda_F_continuous == doctest::Approx(std::sqrt(125.0)));
  CHECK(*r.lambda_F == 10.5);
  CHECK(r.electron_count == 22);
  CHECK(r.value == doctest::Approx(1e-4 / constants::pi * std::sqrt(125.0 / (225.0 + 90000.0))).epsilon(1e-15));
  const double exact = persistent_exact(d).value;
  CHECK(rel(r.value, exact) <= 1.0 / 10.5 + 0.02);
  CHECK(r.notes.empty());

  CHECK(persistent_short(P(300, 10, 1e-4, 10)).value == 0.0);
  CHECK_THROWS_AS(persistent_short(P(300, 20, 1e-4, 15)), RegimeError);
  CHECK_FALSE(persistent_short(P(300, 5, 1e-4, 15)).notes.empty());
}

TEST_CASE("ring limit") {
  const auto r = persistent_ring_limit(P(300, 20, 1e-4, 15));
  CHECK(*r.lambda_F == 14.5);
  CHECK(r.electron_count == 30);
  CHECK(r.value == doctest::Approx(1e-4 / constants::pi * 14.5 / std::hypot(14.5, 300.0)));
  CHECK_FALSE(r.notes.empty());
  CHECK(persistent_ring_limit(P(300, 20, 1e-4, 0.3)).empty_sea);
}

TEST_CASE("non-relativistic limit") {
  const auto d = P(5000, 10, 1e-4, 15);
  const auto r = persistent_nonrel(d);
  REQUIRE(r.alternate_value.has_value());
  const double exact = persistent_exact(d).value;
  CHECK(rel(r.value, exact) < 0.05);
  CHECK(r.n_F == 1);
  const double lf = *r.lambda_F;
  CHECK(rel(r.electron_count / 2.0, lf) == doctest::Approx(1.0 / (2 * lf)));

  double prev = INFINITY;
  for (double mu : {1e3, 1e4, 1e5}) {
    const auto dm = P(mu, 10, 1e-4, 15);
    const double ratio = *persistent_nonrel(dm).alternate_value / persistent_exact(dm).value;
    CHECK(std::abs(ratio - 1.0) <= 1.0 / mu);
    CHECK(std::abs(ratio - 1.0) < prev / 10.0);
    prev = std::abs(ratio - 1.0);
  }
}

TEST_CASE("method ladder") {
  const auto d = P(250, 1, 1e-4, 50);
  const double e = persistent_exact(d).value, l = persistent_linearized(d).value, c = persistent_compact(d).value;
  CHECK(rel(e, l) <= 10 * 1e-8);
  CHECK(rel(c, l) <= 0.02);
  CHECK(persistent_linearized(d).n_F == 49);
}
