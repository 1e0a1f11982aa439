#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "abcyl/constants.hpp"
#include "abcyl/currents.hpp"
#include "abcyl/errors.hpp"
#include "abcyl/fermi.hpp"
#include "abcyl/packet.hpp"
#include "abcyl/quadrature.hpp"
#include "abcyl/spectrum.hpp"

namespace abcyl::cli {

namespace {

constexpr int kSchemaVersion = 1;

Json params_json(const DimensionlessParams& d) {
  Json j;
  j["mu"] = d.mu;
  j["nu"] = d.nu;
  j["beta"] = d.beta;
  j["alpha"] = d.alpha;
  return j;
}

Json envelope(const std::string& command, const DimensionlessParams& d) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["params"] = params_json(d);
  return j;
}

/// Amperes per unit of R*I, or nullopt without --physical.
std::optional<double> ampere_scale(const RunConfig& cfg) {
  if (!cfg.physical) return std::nullopt;
  const auto r = cfg.params.get("radius_nm");
  if (!r) throw ConfigError("--physical needs radius_nm");
  return constants::e_c_A_nm / *r;
}

HalfOdd half_odd_arg(double x, const char* name) {
  try {
    return HalfOdd::from_double(x);
  } catch (const std::exception&) {
    throw ConfigError(std::string(name) + " must be a half-odd integer, got " + format_number(x));
  }
}

Cell opt(const std::optional<double>& x) { return x ? Cell{*x} : Cell{}; }

double relative_deviation(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace

CommandResult cmd_spectrum(const RunConfig& cfg) {
  const DimensionlessParams d = cfg.params.resolve();
  const auto& o = cfg.spectrum;
  const bool finite = o.geometry == "finite";
  if (!finite && o.geometry != "infinite") throw ConfigError("--geometry must be finite or infinite");
  if (finite && d.infinite()) throw RegimeError("finite geometry needs nu > 0");
  if (o.nmax < 1) throw ConfigError("--nmax must be >= 1");
  const HalfOdd lmax = half_odd_arg(o.lmax, "--lmax");
  if (lmax.twice() < 1) throw ConfigError("--lmax must be positive");

  std::vector<HalfOdd> lambdas;
  if (o.lambda) {
    lambdas.push_back(half_odd_arg(*o.lambda, "--lambda"));
  } else {
    for (int t = -lmax.twice(); t <= lmax.twice(); t += 2) lambdas.push_back(HalfOdd::from_twice(t));
  }

  struct Row {
    double label;  // n or k
    HalfOdd lambda;
    double energy, chi;
  };
  std::vector<Row> rows;
  if (finite) {
    for (int n = 1; n <= o.nmax; ++n)
      for (HalfOdd l : lambdas)
        rows.push_back({static_cast<double>(n), l, energy_finite(n, l, d), chi(n, l, d)});
  } else {
    for (double k : o.k)
      for (HalfOdd l : lambdas) rows.push_back({k, l, energy_infinite(k, l, d), chi_infinite(k, l, d)});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    if (a.label != b.label) return a.label < b.label;
    return a.lambda < b.lambda;
  });

  const auto amps = ampere_scale(cfg);
  CommandResult res;
  res.table.header = {finite ? "n" : "k", "lambda", "energy", "chi", "circular_current"};
  if (amps) res.table.header.emplace_back("circular_current_A");
  for (const auto& r : rows) {
    std::vector<Cell> cells;
    cells.push_back(finite ? Cell{static_cast<long long>(r.label)} : Cell{r.label});
    cells.insert(cells.end(), {r.lambda.value(), r.energy, r.chi, r.chi / constants::two_pi});
    if (amps) cells.emplace_back(*amps * r.chi / constants::two_pi);
    res.table.rows.push_back(std::move(cells));
  }
  res.json = envelope("spectrum", d);
  res.json["geometry"] = o.geometry;
  res.json["rows"] = table_to_json(res.table);
  return res;
}

CommandResult cmd_persistent(const RunConfig& cfg) {
  const DimensionlessParams d = cfg.params.resolve();
  if (d.infinite()) throw RegimeError("persistent currents need a finite cylinder (nu > 0)");
  const RegimeReport regime = validate_regime(d);

  std::vector<std::pair<std::string, PersistentReport>> methods;
  methods.emplace_back("exact", persistent_exact(d));
  methods.emplace_back("linearized", persistent_linearized(d));
  methods.emplace_back("compact", persistent_compact(d));
  if (regime.ring_like)
    methods.emplace_back("short", persistent_ring_limit(d));
  else if (regime.short_cylinder)
    methods.emplace_back("short", persistent_short(d));
  if (regime.nonrelativistic) methods.emplace_back("nonrel", persistent_nonrel(d));

  const auto amps = ampere_scale(cfg);
  const double exact = methods.front().second.value;
  CommandResult res;
  res.table.header = {"method", "value", "alternate_value", "N_e", "n_F", "lambda_F", "lambda_F_continuous", "c",
                      "sum_lambda_n", "empty_sea", "rel_dev_vs_exact", "notes"};
  if (amps) res.table.header.emplace_back("value_A");

  Json jm = Json::array();
  std::vector<std::string> warnings;
  for (const auto& [name, r] : methods) {
    std::string notes;
    for (const auto& n : r.notes) notes += (notes.empty() ? "" : "; ") + n;
    std::vector<Cell> row{name,
                          r.value,
                          opt(r.alternate_value),
                          r.electron_count,
                          static_cast<long long>(r.n_F),
                          opt(r.lambda_F),
                          opt(r.lambda_F_continuous),
                          opt(r.c),
                          opt(r.sum_lambda_n),
                          r.empty_sea,
                          relative_deviation(r.value, exact),
                          notes};
    if (amps) row.emplace_back(*amps * r.value);
    res.table.rows.push_back(row);

    Json m;
    m["method"] = name;
    m["value"] = r.value;
    m["alternate_value"] = r.alternate_value ? Json(*r.alternate_value) : Json(nullptr);
    if (amps) m["value_A"] = *amps * r.value;
    m["N_e"] = r.electron_count;
    m["n_F"] = r.n_F;
    m["lambda_F"] = r.lambda_F ? Json(*r.lambda_F) : Json(nullptr);
    m["lambda_F_continuous"] = r.lambda_F_continuous ? Json(*r.lambda_F_continuous) : Json(nullptr);
    m["c"] = r.c ? Json(*r.c) : Json(nullptr);
    m["sum_lambda_n"] = r.sum_lambda_n ? Json(*r.sum_lambda_n) : Json(nullptr);
    m["empty_sea"] = r.empty_sea;
    m["notes"] = r.notes;
    jm.push_back(std::move(m));
    if (r.empty_sea && warnings.empty()) warnings.emplace_back("empty Fermi sea");
  }

  Json dev = Json::array();
  for (std::size_t i = 0; i < methods.size(); ++i)
    for (std::size_t j = i + 1; j < methods.size(); ++j)
      dev.push_back({{"a", methods[i].first},
                     {"b", methods[j].first},
                     {"relative", relative_deviation(methods[i].second.value, methods[j].second.value)}});

  res.json = envelope("persistent", d);
  res.json["regime"] = regime.flags();
  res.json["warning"] = !warnings.empty();
  res.json["warnings"] = warnings;
  res.json["methods"] = std::move(jm);
  res.json["deviations"] = std::move(dev);
  return res;
}

CommandResult cmd_packet(const RunConfig& cfg) {
  DimensionlessParams d = cfg.params.resolve();
  d.nu = 0.0;  // packets live on the infinite cylinder
  const auto& o = cfg.packet;
  if (o.zsteps < 1) throw ConfigError("--zsteps must be >= 1");
  if (o.zmax < o.zmin) throw ConfigError("--zmax must not be below --zmin");
  if (o.k_nodes < 16) throw ConfigError("--k-nodes must be >= 16");
  const HalfOdd lambda = half_odd_arg(o.lambda, "--lambda");
  const PacketSpec spec = PacketSpec::gaussian(lambda, o.k0, o.width, o.mix_plus, o.mix_minus);
  const Rule1D rule = spec.momentum_rule(o.k_nodes);
  const SampledPacket sp = sample_packet(spec, d, rule);

  CommandResult res;
  res.table.header = {"quantity", "z", "value", "formula", "difference"};
  Json profile = Json::array();
  for (int i = 0; i < o.zsteps; ++i) {
    const double z = o.zsteps == 1 ? o.zmin : o.zmin + (o.zmax - o.zmin) * i / (o.zsteps - 1);
    const LongitudinalCurrent direct = longitudinal_current_direct(sp, d, o.t, z);
    const LongitudinalCurrent formula = longitudinal_current_formula(sp, d, o.t, z);
    const double diff = formula.value - direct.value;
    res.table.rows.push_back({std::string("I3"), z, direct.value, formula.value, diff});
    profile.push_back({{"z", z},
                       {"direct", direct.value},
                       {"direct_imag", direct.imag},
                       {"formula", formula.value},
                       {"difference", diff}});
  }

  // position-space norm on a window that follows the packet, with a momentum
  // grid fine enough for that window
  double v_max = 0.0;
  for (std::size_t i = 0; i < sp.rule.size(); ++i) v_max = std::max(v_max, std::abs(rule.nodes[i]) / sp.energy[i]);
  const double v_mean = packet_velocity(spec, d, rule);
  // the spinor factors add exponential tails ~ exp(-kappa |z|) beyond the Gaussian core
  const double kappa = std::max(0.5, std::hypot(d.mu, lambda.value() + d.beta));
  const double half = std::abs(o.t) * v_max + 8.0 / o.width + 20.0 / kappa;
  const double center = v_mean * o.t;
  const double k_reach = std::abs(o.k0) + 8.0 * o.width;
  const int z_panels = std::max(4, static_cast<int>(std::ceil(2.0 * half * k_reach / 4.0)));
  const Rule1D z_rule = composite_gauss_legendre(z_panels, std::min(cfg.quad_order, 32), center - half, center + half);
  const auto need = static_cast<int>(required_momentum_nodes(sp, d, o.t, std::abs(center) + half));
  const SampledPacket fine = sample_packet(spec, d, spec.momentum_rule(std::max(o.k_nodes, need)));
  const double norm = packet_norm_direct(fine, o.t, z_rule);

  const double ic = circular_current_packet(spec, d, rule);
  const double e = packet_energy(spec, d, rule);
  const double pol = packet_polarization(spec, rule);
  const std::pair<const char*, double> scalars[] = {
      {"circular_current", ic}, {"energy", e}, {"polarization", pol}, {"norm", norm}, {"velocity", v_mean}};
  for (const auto& [name, v] : scalars) res.table.rows.push_back({std::string(name), Cell{}, v, Cell{}, Cell{}});
  if (const auto amps = ampere_scale(cfg))
    res.table.rows.push_back({std::string("circular_current_A"), Cell{}, *amps * ic, Cell{}, Cell{}});

  res.json = envelope("packet", d);
  res.json["packet"] = {{"k0", o.k0},         {"width", o.width}, {"lambda", o.lambda},
                        {"mix_plus", o.mix_plus}, {"mix_minus", o.mix_minus}, {"t", o.t},
                        {"k_nodes", o.k_nodes}};
  Json sc;
  for (const auto& [name, v] : scalars) sc[name] = v;
  res.json["scalars"] = std::move(sc);
  res.json["profile"] = std::move(profile);
  return res;
}

namespace {

using Observable = double (*)(const DimensionlessParams&, int, HalfOdd);

const std::map<std::string, Observable>& observables() {
  static const std::map<std::string, Observable> table = {
      {"energy", [](const DimensionlessParams& d, int n, HalfOdd l) { return energy_finite(n, l, d); }},
      {"chi", [](const DimensionlessParams& d, int n, HalfOdd l) { return chi(n, l, d); }},
      {"circular_current",
       [](const DimensionlessParams& d, int n, HalfOdd l) { return chi(n, l, d) / constants::two_pi; }},
      {"j", [](const DimensionlessParams& d, int n, HalfOdd l) { return j_coeff(n, l, d); }},
      {"persistent_exact", [](const DimensionlessParams& d, int, HalfOdd) { return persistent_exact(d).value; }},
      {"persistent_linearized",
       [](const DimensionlessParams& d, int, HalfOdd) { return persistent_linearized(d).value; }},
      {"persistent_compact", [](const DimensionlessParams& d, int, HalfOdd) { return persistent_compact(d).value; }},
      {"persistent_short", [](const DimensionlessParams& d, int, HalfOdd) { return persistent_short(d).value; }},
      {"persistent_nonrel", [](const DimensionlessParams& d, int, HalfOdd) { return persistent_nonrel(d).value; }},
  };
  return table;
}

}  // namespace

CommandResult cmd_sweep(const RunConfig& cfg) {
  const auto& o = cfg.sweep;
  static const std::vector<std::string> params = {"beta", "mu", "nu", "alpha", "lambda", "n"};
  if (std::find(params.begin(), params.end(), o.param) == params.end())
    throw ConfigError("unknown sweep parameter '" + o.param + "'");
  const DimensionlessParams base = cfg.params.resolve();
  if (!(o.stop > o.start)) throw ConfigError("sweep needs --stop > --start");
  if (o.scale != "linear" && o.scale != "log") throw ConfigError("--scale must be linear or log");
  std::vector<Observable> fns;
  for (const auto& name : o.observables) {
    const auto it = observables().find(name);
    if (it == observables().end()) throw ConfigError("unknown observable '" + name + "'");
    fns.push_back(it->second);
  }

  std::vector<double> points;
  if (o.param == "lambda") {
    const HalfOdd a = half_odd_arg(o.start, "--start"), b = half_odd_arg(o.stop, "--stop");
    for (int t = a.twice(); t <= b.twice(); t += 2) points.push_back(t / 2.0);
  } else if (o.param == "n") {
    if (o.start != std::floor(o.start) || o.stop != std::floor(o.stop) || o.start < 1)
      throw ConfigError("n sweeps need integer bounds >= 1");
    for (double n = o.start; n <= o.stop; n += 1.0) points.push_back(n);
  } else {
    if (o.steps < 2) throw ConfigError("--steps must be >= 2");
    if (o.scale == "log" && !(o.start > 0.0)) throw ConfigError("log sweeps need --start > 0");
    for (int i = 0; i < o.steps; ++i) {
      const double s = static_cast<double>(i) / (o.steps - 1);
      points.push_back(o.scale == "log" ? o.start * std::pow(o.stop / o.start, s) : o.start + (o.stop - o.start) * s);
    }
    points.back() = o.stop;
  }

  const HalfOdd base_lambda = half_odd_arg(o.lambda, "--lambda");
  CommandResult res;
  res.table.header = {o.param};
  res.table.header.insert(res.table.header.end(), o.observables.begin(), o.observables.end());
  for (double x : points) {
    DimensionlessParams d = base;
    int n = o.n;
    HalfOdd lam = base_lambda;
    if (o.param == "beta") d.beta = x;
    else if (o.param == "mu") d.mu = x;
    else if (o.param == "nu") d.nu = x;
    else if (o.param == "alpha") d.alpha = x;
    else if (o.param == "lambda") lam = HalfOdd::from_double(x);
    else n = static_cast<int>(x);
    d = DimensionlessParams::make(d.mu, d.nu, d.beta, d.alpha);
    std::vector<Cell> row{o.param == "n" ? Cell{static_cast<long long>(n)} : Cell{x}};
    for (auto f : fns) row.emplace_back(f(d, n, lam));
    res.table.rows.push_back(std::move(row));
  }
  res.json = envelope("sweep", base);
  res.json["sweep"] = {{"param", o.param}, {"start", o.start}, {"stop", o.stop}, {"steps", o.steps},
                       {"scale", o.scale}, {"n", o.n},         {"lambda", o.lambda}};
  res.json["rows"] = table_to_json(res.table);
  return res;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  VerifyOptions vo;
  if (!cfg.params.empty()) vo.params = cfg.params.resolve();
  vo.seed = cfg.seed;
  vo.fault = cfg.fault;
  vo.z_order = cfg.quad_order;
  const VerifyReport report = run_verification(vo);

  CommandResult res;
  res.table.header = {"suite", "tolerance", "worst", "passed", "detail"};
  Json suites = Json::array();
  for (const auto& s : report.suites) {
    res.table.rows.push_back({s.name, s.tolerance, s.worst, s.passed, s.detail});
    suites.push_back({{"name", s.name},
                      {"tolerance", s.tolerance},
                      {"worst", std::isfinite(s.worst) ? Json(s.worst) : Json(nullptr)},
                      {"passed", s.passed},
                      {"detail", s.detail}});
  }
  res.json["schema_version"] = VerifyReport::schema_version;
  res.json["command"] = "verify";
  res.json["passed"] = report.passed();
  res.json["fault"] = to_string(report.fault);
  res.json["params"] = params_json(vo.params);
  res.json["seed"] = cfg.seed;
  res.json["suites"] = std::move(suites);
  res.exit_code = report.passed() ? 0 : 1;
  return res;
}

CommandResult run_command(const RunConfig& cfg) {
  if (cfg.command == "spectrum") return cmd_spectrum(cfg);
  if (cfg.command == "persistent") return cmd_persistent(cfg);
  if (cfg.command == "packet") return cmd_packet(cfg);
  if (cfg.command == "sweep") return cmd_sweep(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  throw ConfigError("unknown command '" + cfg.command + "'");
}

}  // namespace abcyl::cli
