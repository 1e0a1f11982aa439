#pragma once

#include <stdexcept>
#include <string>

namespace abcyl {

/// Invalid or inconsistent user-supplied parameters.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters are valid but outside the regime an operation is defined for
/// (for example a finite-cylinder formula called with nu = 0).
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quadrature grid is too coarse for the requested evaluation point.
class ResolutionError : public std::runtime_error {
 public:
  ResolutionError(const std::string& what, std::size_t required_nodes)
      : std::runtime_error(what), required_nodes_(required_nodes) {}

  std::size_t required_nodes() const noexcept { return required_nodes_; }

 private:
  std::size_t required_nodes_;
};

/// A spinor bilinear that must be real came out with a significant
/// imaginary part.
class NonRealBilinear : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace abcyl
