#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace curvetopo::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kBadInput = 1,      ///< unreadable or malformed input, bad flags
  kRejected = 2,      ///< non-generic curve, generation failure, invalid move site
  kTheoremFailed = 3  ///< rotation methods disagree or a move broke its delta
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CheckOptions {
  int trials = 100;
  int max_order = 4;
  std::uint64_t seed = 0;
  int samples = 512;
  int threads = 0;  ///< 0 picks the hardware concurrency
};

struct TrialResult {
  std::uint64_t seed = 0;
  int order = 0;
  int crossings = 0;
  int turning = 0, whitney = 0, rotation_new = 0;
  bool agree = false;
  bool basepoint_independent = false;
  bool euler_ok = false;
  std::string error;  ///< set when the trial could not be evaluated
  bool generation_failed = false;

  bool passed() const { return error.empty() && agree && basepoint_independent && euler_ok; }
};

struct CheckSummary {
  std::vector<TrialResult> trials;  ///< in seed order
  int agreements = 0;
  int basepoint_checks = 0;
  int euler_checks = 0;
  int failures = 0;
};

/// Trial i draws a generic curve of order 1 + i mod max_order from seed + i.
CheckSummary run_check(const CheckOptions& options);

}  // namespace curvetopo::cli
