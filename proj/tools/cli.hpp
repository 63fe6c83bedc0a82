#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <schlicht/io.hpp>

namespace schlicht::cli {

/// Exit codes: 0 success, 1 computation error, 2 validation error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitValidation = 2;

/// Runs one command line (args excludes the program name). Documents go to
/// `out`, diagnostics to `err`; `in` backs inputs whose path is omitted.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

struct SuiteOptions {
  std::uint64_t seed = 0;
  int samples = 100;
  int atoms = 8;
  int order = 64;
};

/// Batch sweep: sample i uses seed + i, then runs every coefficient bound and
/// class constructor. "violations" counts margins below -1e-9.
io::json report_suite(const SuiteOptions& options);

}  // namespace schlicht::cli
