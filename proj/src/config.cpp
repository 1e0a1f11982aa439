#include "abcyl/config.hpp"

#include <cmath>
#include <array>
#include <charconv>
#include <fstream>
#include <utility>

#include "abcyl/constants.hpp"
#include "abcyl/errors.hpp"

namespace abcyl {

namespace {

constexpr std::array<const char*, 9> kKeys = {"mass_eV", "radius_nm", "length_nm", "b_field_T", "fermi_eV",
                                              "mu",      "nu",        "beta",      "alpha"};

constexpr std::array<std::pair<const char*, const char*>, 4> kPairs = {
    {{"mu", "mass_eV"}, {"nu", "length_nm"}, {"beta", "b_field_T"}, {"alpha", "fermi_eV"}}};

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& text, const std::string& where) {
  double value = 0.0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) throw ConfigError(where + ": not a number: '" + text + "'");
  return value;
}

}  // namespace

bool ParamSource::known_key(const std::string& key) {
  for (const char* k : kKeys)
    if (key == k) return true;
  return false;
}

ParamSource ParamSource::parse(std::istream& in, const std::string& origin) {
  ParamSource src;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = origin + ":" + std::to_string(lineno);
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!known_key(key)) throw ConfigError(where + ": unknown key '" + key + "'");
    if (src.values_.count(key)) throw ConfigError(where + ": duplicate key '" + key + "'");
    src.values_[key] = parse_number(value, where);
  }
  return src;
}

ParamSource ParamSource::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse(in, path.string());
}

void ParamSource::set(const std::string& key, double value) {
  if (!known_key(key)) throw ConfigError("unknown parameter '" + key + "'");
  values_[key] = value;
}

std::optional<double> ParamSource::get(const std::string& key) const {
  if (auto it = values_.find(key); it != values_.end()) return it->second;
  return std::nullopt;
}

DimensionlessParams ParamSource::resolve() const {
  for (const auto& [direct, physical] : kPairs)
    if (get(direct) && get(physical))
      throw ConfigError(std::string("both '") + direct + "' and '" + physical + "' given for the same quantity");

  const auto radius = get("radius_nm");
  const auto mass = get("mass_eV");
  const bool any_physical = mass || get("length_nm") || get("b_field_T") || get("fermi_eV");
  if (any_physical && !radius) throw ConfigError("physical parameters require radius_nm");
  if (radius && !(*radius > 0.0)) throw ConfigError("radius_nm must be positive");
  if (mass && !(*mass > 0.0)) throw ConfigError("mass_eV must be positive");

  DimensionlessParams d;
  std::optional<double> r_nat;
  if (radius) r_nat = *radius / constants::hbar_c_eV_nm;

  if (auto mu = get("mu")) {
    d.mu = *mu;
  } else if (mass) {
    d.mu = *mass * *r_nat;
  } else {
    throw ConfigError("missing mu (or mass_eV with radius_nm)");
  }

  if (auto nu = get("nu")) {
    d.nu = *nu;
  } else if (auto length = get("length_nm")) {
    if (!(*length > 0.0)) throw ConfigError("length_nm must be positive");
    d.nu = constants::pi * *radius / *length;
  }

  if (auto beta = get("beta")) {
    d.beta = *beta;
  } else if (auto b = get("b_field_T")) {
    d.beta = *b * *radius * *radius * constants::e_over_2hbar_per_nm2_T;
  }

  if (auto alpha = get("alpha")) {
    d.alpha = *alpha;
  } else if (auto ef = get("fermi_eV")) {
    if (!mass) throw ConfigError("fermi_eV requires mass_eV");
    if (!(*ef >= 0.0)) throw ConfigError("fermi_eV must be non-negative");
    d.alpha = *r_nat * std::sqrt(*ef * (*ef + 2.0 * *mass));
  }

  auto out = DimensionlessParams::make(d.mu, d.nu, d.beta, d.alpha);
  out.radius_natural = r_nat;
  return out;
}

}  // namespace abcyl
