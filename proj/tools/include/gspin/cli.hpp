#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gspin::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

struct RunConfig {
  std::uint64_t seed = 7;
  double tolerance = 1e-8;
  int truncation = 200;
  std::string convention = "both";  // literal | paper | both
  std::string discriminant = "plain";  // plain | signed
  std::string gspin2 = "single";  // single | squared
  std::string out;
};

// Throws UsageError naming the offending flag.
void validate(const RunConfig& config);

struct UsageError {
  std::string flag;
  std::string message;
};

// args excludes the program name. Writes one JSON document to `out` (or to
// the --out file on success); exit codes follow ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gspin::cli
