#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

namespace abcyl {

/// Half-odd-integer quantum number (total angular momentum lambda).
/// Stored as the odd integer 2*lambda so arithmetic stays exact.
class HalfOdd {
 public:
  constexpr HalfOdd() = default;

  static constexpr HalfOdd from_twice(int twice) {
    if (twice % 2 == 0) throw std::invalid_argument("2*lambda must be odd, got " + std::to_string(twice));
    return HalfOdd(twice);
  }

  /// Accepts values like 0.5, -1.5; anything else is rejected.
  static HalfOdd from_double(double value) {
    const double twice = 2.0 * value;
    const double rounded = std::round(twice);
    if (!std::isfinite(value) || std::abs(twice - rounded) > 1e-9 || std::abs(rounded) > 2e9)
      throw std::invalid_argument("not a half-odd-integer: " + std::to_string(value));
    return from_twice(static_cast<int>(rounded));
  }

  /// Largest half-odd-integer <= x. Requires x >= 1/2 to be meaningful for
  /// occupation counts; callers check that.
  static HalfOdd floor(double x) {
    // 2*lambda = 2m+1 <= 2x  =>  m = floor(x - 1/2)
    const int m = static_cast<int>(std::floor(x - 0.5));
    return HalfOdd(2 * m + 1);
  }

  constexpr int twice() const noexcept { return twice_; }
  constexpr double value() const noexcept { return 0.5 * twice_; }
  constexpr HalfOdd operator-() const noexcept { return HalfOdd(-twice_); }
  constexpr HalfOdd next() const noexcept { return HalfOdd(twice_ + 2); }
  constexpr HalfOdd prev() const noexcept { return HalfOdd(twice_ - 2); }
  constexpr HalfOdd abs() const noexcept { return HalfOdd(twice_ < 0 ? -twice_ : twice_); }

  constexpr auto operator<=>(const HalfOdd&) const = default;

 private:
  constexpr explicit HalfOdd(int twice) : twice_(twice) {}
  int twice_ = 1;
};

}  // namespace abcyl
