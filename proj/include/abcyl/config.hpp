#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>

#include "abcyl/params.hpp"

namespace abcyl {

/// Parameter values gathered from a key=value file and/or command-line
/// overrides, before they are resolved into DimensionlessParams.
///
/// Recognised keys: mass_eV, radius_nm, length_nm, b_field_T, fermi_eV
/// (physical) and mu, nu, beta, alpha (dimensionless). A dimensionless key
/// replaces the value derived from physical keys, but giving both members of
/// a pair (mu/mass_eV, nu/length_nm, beta/b_field_T, alpha/fermi_eV) is an
/// error.
class ParamSource {
 public:
  /// Parses UTF-8 "key = value" lines; '#' starts a comment. Throws ConfigError
  /// on unknown keys, duplicate keys, or malformed numbers.
  static ParamSource parse(std::istream& in, const std::string& origin = "<config>");
  static ParamSource load(const std::filesystem::path& path);

  /// Sets or replaces a value (used for command-line overrides).
  void set(const std::string& key, double value);
  std::optional<double> get(const std::string& key) const;
  bool empty() const noexcept { return values_.empty(); }

  DimensionlessParams resolve() const;

  static bool known_key(const std::string& key);

 private:
  std::map<std::string, double> values_;
};

}  // namespace abcyl
