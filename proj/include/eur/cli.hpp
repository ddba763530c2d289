#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eur/io.hpp"

namespace eur::cli {

enum ExitCode : int {
  kSuccess = 0,       // all relations hold / entanglement certified
  kViolation = 1,     // some verdict violated, or game outside its band
  kUsage = 2,         // bad flags, unsupported dimension, malformed input
  kInconclusive = 3,  // witness not triggered
};

struct RunConfig {
  std::string command;
  std::string relation = "main";  // main | monogamy | bounds | two-to-all
  int d = 2;
  int db = 0;  // 0: same as d
  int de = 0;  // 0: same as d
  std::string family = "mub";     // mub | sic | clifford | file:<path>
  std::string state = "random";   // max-entangled | maximally-mixed | random | pure | separable | file:<path>
  double nu = 0.0;
  int n = 0;  // bounds: number of bases, 0 for every n in 1..d+1
  long samples = 10;
  long trials = 100000;
  std::uint64_t seed = 1;
  int grid = 101;
  int threads = 0;
  std::optional<double> tolerance;
  std::string input;
  std::string output;
  std::string format = "json";  // json | csv

  bool operator==(const RunConfig&) const = default;
};

json config_to_json(const RunConfig& c);
RunConfig config_from_json(const json& j);

/// Parses argv into a RunConfig; throws CLI11 parse errors.
RunConfig parse_args(int argc, const char* const* argv);

/// Runs a full command line, returning the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes an already-parsed configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace eur::cli
