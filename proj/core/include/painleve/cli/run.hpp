#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace painleve::cli {

enum class InputMode : std::uint8_t { Rhs, Coefficients, Implicit };

enum ExitCode : int { kEquivalent = 0, kNotEquivalent = 1, kInconclusive = 2, kInputError = 3 };

struct RunConfig {
  InputMode mode = InputMode::Rhs;
  /// One string (rhs), four (P, Q, R, S) or two (lead, rest).
  std::vector<std::string> inputs;
  /// Parameter declarations: "b", "b!=0" or "b>0".
  std::vector<std::string> params;
  std::uint64_t seed = 0x5eedULL;
  std::optional<double> abs_tol;
  std::optional<unsigned> samples;
  bool json = false;
  /// Re-checks every emitted transformation with an independent seed and more oracle samples.
  bool verify = false;
};

/// Runs the invariant tower, the classification and both equivalence tests and writes the report
/// to out. Input errors go to err. Returns the process exit status.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace painleve::cli
