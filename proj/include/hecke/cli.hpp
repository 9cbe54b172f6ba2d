#pragma once

// Batch front end. Exit status: 0 all checks pass, 1 a check failed,
// 2 usage error.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace hecke::cli {

enum class Output { Json, Csv, Text };

struct RunConfig {
  std::string command = "all";  // presentation|eigen|coefficient|growth|poincare|distinction|gelfand|all
  int e = 3;
  int f = 1;
  long q0 = 2;
  int L = 8;
  std::string chi_pi = "1";
  Output output = Output::Json;
  std::uint64_t seed = 20240917;
  int samples = 20;
  std::string rep_file;  // gelfand: optional catalog entry instead of the shipped pairs
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command; the report goes to out, diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (without the program name) and runs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hecke::cli
