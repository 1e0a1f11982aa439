#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abcyl/config.hpp"
#include "abcyl/verify.hpp"
#include "output.hpp"

namespace abcyl::cli {

enum class Format { csv, json };

struct SpectrumOptions {
  std::string geometry = "finite";
  int nmax = 3;
  double lmax = 2.5;
  std::vector<double> k{0.0};
  std::optional<double> lambda;
};

struct PacketOptions {
  double k0 = 0.0;
  double width = 1.0;
  double lambda = 0.5;
  double mix_plus = 1.0;
  double mix_minus = 0.0;
  double t = 0.0;
  double zmin = -5.0;
  double zmax = 5.0;
  int zsteps = 11;
  int k_nodes = 512;
};

struct SweepOptions {
  std::string param = "beta";
  double start = 0.0;
  double stop = 1.0;
  int steps = 11;
  std::string scale = "linear";
  std::vector<std::string> observables{"chi"};
  int n = 1;
  double lambda = 0.5;
};

struct RunConfig {
  std::string command;
  ParamSource params;
  Format format = Format::csv;
  std::optional<std::string> out;
  int quad_order = 64;
  std::uint64_t seed = 0;
  bool physical = false;
  SpectrumOptions spectrum;
  PacketOptions packet;
  SweepOptions sweep;
  Fault fault = Fault::none;
};

struct CommandResult {
  Table table;
  Json json;
  int exit_code = 0;
};

CommandResult cmd_spectrum(const RunConfig& cfg);
CommandResult cmd_persistent(const RunConfig& cfg);
CommandResult cmd_packet(const RunConfig& cfg);
CommandResult cmd_sweep(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);

CommandResult run_command(const RunConfig& cfg);

}  // namespace abcyl::cli
