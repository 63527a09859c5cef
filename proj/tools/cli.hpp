#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bigrade::cli {

/// One invocation of the command-line tool.
struct JobSpec {
  /// analyze, decompose, filtration, seqcm, lc, gencm, growth,
  /// hypersurface, crosscheck or suite.
  std::string command;
  std::string input;
  /// P, Q or all.
  std::string axis = "Q";
  int index = 0;
  std::vector<int> radii{1, 2, 3, 4};
  int characteristic = 0;
  /// hypersurface: profile text given inline instead of a file.
  std::string factors;
  /// hypersurface / crosscheck: ring sizes m, n.
  std::vector<int> ring;
  /// crosscheck: the monomial f.
  std::string monomial;
  /// suite options.
  std::string suite = "all";
  std::uint64_t seed = 20240601;
  int count = 200;
};

struct RunResult {
  int exit_code = 0;
  /// JSON document, newline-terminated.
  std::string output;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;

/// Executes a job. Never throws for input or precondition errors; those
/// become an error document with exit code 2 or 3.
RunResult run(const JobSpec& job);

}  // namespace bigrade::cli
