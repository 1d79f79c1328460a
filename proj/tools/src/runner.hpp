#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace mittag::cli {

/// Malformed or invalid problem specification.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitSpecError = 2;
inline constexpr int kExitNumericalFailure = 3;

/// Command-line values that take precedence over the spec file.
struct Overrides {
  std::optional<std::string> format;  ///< "csv" or "json"
  std::optional<std::string> out;
  std::optional<double> tol;          ///< series relative tolerance
  std::optional<std::string> grid;    ///< "START:STOP:N"
};

struct RunResult {
  int exit_code = kExitOk;
  /// Complete output artifact; empty on failure.
  std::string output;
  /// Destination from --out or the spec; empty means stdout.
  std::string out_path;
  /// JSON error object {"error": {"kind", "message"}} on failure.
  std::string error;
  /// Non-fatal diagnostics (e.g. growing modes).
  std::vector<std::string> warnings;
};

/// Parses, validates and executes one task. Nothing is computed until the
/// whole spec has validated; no output is produced on any failure.
RunResult run(const std::string& task, const nlohmann::json& spec,
              const Overrides& overrides = {});

/// The tasks accepted by run().
const std::vector<std::string>& task_names();

}  // namespace mittag::cli
