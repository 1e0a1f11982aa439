#include <doctest.h>

#include <cmath>

#include "abcyl/constants.hpp"
#include "abcyl/currents.hpp"
#include "abcyl/gamma.hpp"
#include "abcyl/errors.hpp"
#include "abcyl/spectrum.hpp"

using namespace abcyl;

namespace {
HalfOdd h(int twice) { return HalfOdd::from_twice(twice); }
const complex I(0.0, 1.0);
}  // namespace

TEST_CASE("chi values") {
  CHECK(chi(1, h(1), DimensionlessParams::make(1, 1, 0, 0)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(chi(4, h(-1), DimensionlessParams::make(1, 1, 0.5, 0)) == 0.0);
  CHECK_THROWS_AS(chi(1, h(1), DimensionlessParams::make(1, 0, 0, 0)), RegimeError);
  CHECK(chi_infinite(0.0, h(1), DimensionlessParams::make(1, 0, 0, 0)) == doctest::Approx(0.5 / std::sqrt(1.25)));
}

TEST_CASE("chi saturates to +-1") {
  const auto d = DimensionlessParams::make(1, 1, 0, 0);
  const HalfOdd big = h(4001);
  const double bound = 2.0 / (2.0 * big.value() * big.value()) + 1e-12;
  CHECK(std::abs(chi(1, big, d) - 1.0) <= bound);
  CHECK(std::abs(chi(1, -big, d) + 1.0) <= bound);
}

TEST_CASE("chi monotonicity and decay in n") {
  const auto d = DimensionlessParams::make(0.8, 0.4, 0.15, 0);
  for (int t = -41; t < 41; t += 2) CHECK(chi(3, h(t + 2), d) > chi(3, h(t), d));
  for (int n = 1; n < 60; ++n) CHECK(chi(n + 1, h(5), d) < chi(n, h(5), d));
  CHECK(chi(100000, h(5), d) < 1e-3);
}

TEST_CASE("mixed states") {
  CHECK_THROWS(MixedState::make(1, h(1), 1.0, 1.0));
  const auto s = MixedState::normalized(2, h(3), 3.0, 4.0 * I);
  CHECK(std::norm(s.c_plus) + std::norm(s.c_minus) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.polarization() == doctest::Approx(1.5 * (0.36 - 0.64)));
  CHECK(MixedState::make(1, h(3), 1.0, 0.0).polarization() == 1.5);
  CHECK(MixedState::normalized(1, h(3), 1.0, 1.0).polarization() == doctest::Approx(0.0));
}

TEST_CASE("circular current is independent of the polarization") {
  const auto d = DimensionlessParams::make(1.2, 0.9, 0.4, 0);
  const auto a = MixedState::make(2, h(-5), 1.0, 0.0);
  const auto b = MixedState::normalized(2, h(-5), 1.0, 1.0);
  const auto c = MixedState::normalized(2, h(-5), 0.3, -0.7 * I);
  CHECK(circular_current_mode(a, d) == circular_current_mode(b, d));
  CHECK(circular_current_mode(a, d) == circular_current_mode(c, d));
  const double de = denergy_dbeta(ModeSpec::finite(2, h(-5), Polarization::plus), d);
  CHECK(circular_current_mode(a, d) == doctest::Approx(de / constants::two_pi).epsilon(1e-15));
}

TEST_CASE("circular current against the bilinear quadrature") {
  const auto d = DimensionlessParams::make(0.7, 1.1, -0.35, 0);
  const auto rule = QuadratureRule::finite(d.length(), 4, 48, 16);
  for (int n = 1; n <= 4; ++n)
    for (int t = -7; t <= 7; t += 2)
      for (auto [cp, cm] : {std::pair<complex, complex>{1.0, 0.0}, {0.0, 1.0}, {0.6, 0.8 * I}, {-0.8, 0.6}}) {
        const auto s = MixedState::make(n, h(t), cp, cm);
        CHECK(std::abs(circular_current_mode(s, d) - circular_current_quadrature(s, d, rule)) < 1e-12);
      }
}
