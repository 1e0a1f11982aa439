#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "abcyl/errors.hpp"
#include "commands.hpp"

namespace {

enum ExitCode { ok = 0, verify_failed = 1, config_error = 2, regime_error = 3, resolution_error = 4 };

struct ParamFlag {
  const char* flag;
  const char* key;
  const char* help;
};

constexpr ParamFlag kParamFlags[] = {
    {"--mu", "mu", "M R"},
    {"--nu", "nu", "pi R / L (0 = infinite cylinder)"},
    {"--beta", "beta", "e B R^2 / 2"},
    {"--alpha", "alpha", "R sqrt(E_F (E_F + 2M))"},
    {"--mass-eV", "mass_eV", "rest energy [eV]"},
    {"--radius-nm", "radius_nm", "radius [nm]"},
    {"--length-nm", "length_nm", "length [nm]"},
    {"--b-field-T", "b_field_T", "axial field [T]"},
    {"--fermi-eV", "fermi_eV", "non-relativistic Fermi energy [eV]"},
};

}  // namespace

int main(int argc, char** argv) {
  using namespace abcyl;
  using namespace abcyl::cli;

  CLI::App app{"Dirac fermions on Aharonov-Bohm cylinders"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string config_path, format = "csv", out_path, fault = "none";
  std::map<std::string, double> overrides;

  app.add_option("--config", config_path, "key=value parameter file");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "write data here instead of stdout");
  app.add_option("--quad-order", cfg.quad_order, "Gauss-Legendre order for z quadrature")->check(CLI::Range(2, 256));
  app.add_option("--seed", cfg.seed, "seed for randomized sample points");
  app.add_flag("--physical", cfg.physical, "add currents in amperes (needs radius_nm)");
  for (const auto& p : kParamFlags)
    app.add_option_function<double>(p.flag, [&overrides, key = p.key](double v) { overrides[key] = v; }, p.help);

  auto* spectrum = app.add_subcommand("spectrum", "single-particle energies and currents");
  spectrum->add_option("--geometry", cfg.spectrum.geometry)->check(CLI::IsMember({"finite", "infinite"}));
  spectrum->add_option("--nmax", cfg.spectrum.nmax);
  spectrum->add_option("--lmax", cfg.spectrum.lmax);
  spectrum->add_option("--k", cfg.spectrum.k, "longitudinal momenta (infinite geometry)");
  spectrum->add_option("--lambda", cfg.spectrum.lambda, "restrict to one lambda");

  app.add_subcommand("persistent", "zero-temperature persistent current by every applicable method");

  auto* packet = app.add_subcommand("packet", "Gaussian wave packet on the infinite cylinder");
  auto& po = cfg.packet;
  packet->add_option("--k0", po.k0);
  packet->add_option("--width", po.width);
  packet->add_option("--lambda", po.lambda);
  packet->add_option("--mix-plus", po.mix_plus);
  packet->add_option("--mix-minus", po.mix_minus);
  packet->add_option("--t", po.t);
  packet->add_option("--zmin", po.zmin);
  packet->add_option("--zmax", po.zmax);
  packet->add_option("--zsteps", po.zsteps);
  packet->add_option("--k-nodes", po.k_nodes, "momentum quadrature nodes");

  auto* sweep = app.add_subcommand("sweep", "scan one parameter");
  auto& so = cfg.sweep;
  sweep->add_option("--param", so.param)->required();
  sweep->add_option("--start", so.start)->required();
  sweep->add_option("--stop", so.stop)->required();
  sweep->add_option("--steps", so.steps);
  sweep->add_option("--scale", so.scale);
  sweep->add_option("--observable", so.observables)->delimiter(',');
  sweep->add_option("--n", so.n, "fixed n for mode observables");
  sweep->add_option("--lambda", so.lambda, "fixed lambda for mode observables");

  auto* verify = app.add_subcommand("verify", "run every invariant suite");
  verify->add_option("--fault", fault, "inject a defect (testing only)")
      ->check(CLI::IsMember({"none", "energy-off-by-1e-3"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : config_error;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? Format::json : Format::csv;
  cfg.fault = *parse_fault(fault);
  if (!out_path.empty()) cfg.out = out_path;

  try {
    if (!config_path.empty()) cfg.params = ParamSource::load(config_path);
    for (const auto& [key, value] : overrides) cfg.params.set(key, value);

    const CommandResult result = run_command(cfg);

    std::ofstream file;
    if (cfg.out) {
      file.open(*cfg.out, std::ios::binary);
      if (!file) throw ConfigError("cannot open output file " + *cfg.out);
    }
    std::ostream& os = cfg.out ? static_cast<std::ostream&>(file) : std::cout;
    if (cfg.format == Format::json)
      os << result.json.dump(2) << "\n";
    else
      write_csv(os, result.table);
    os.flush();
    if (result.exit_code == verify_failed) std::cerr << "verification failed\n";
    return result.exit_code;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return config_error;
  } catch (const RegimeError& e) {
    std::cerr << "regime error: " << e.what() << "\n";
    return regime_error;
  } catch (const ResolutionError& e) {
    std::cerr << "resolution error: " << e.what() << " (required nodes: " << e.required_nodes() << ")\n";
    return resolution_error;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return config_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return config_error;
  }
}
