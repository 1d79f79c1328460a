#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "runner.hpp"

namespace {

int fail(int code, const std::string& kind, const std::string& message) {
  std::cerr << nlohmann::json{{"error", {{"kind", kind}, {"message", message}}}}.dump()
            << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using mittag::cli::kExitNumericalFailure;
  using mittag::cli::kExitSpecError;

  CLI::App app{"Mittag-Leffler functions, fractional kinetics and reaction-diffusion"};
  std::string task;
  std::string spec_path;
  mittag::cli::Overrides ov;
  std::string out, format, grid;
  double tol = 0.0;

  app.add_option("task", task, "Task to run")
      ->required()
      ->check(CLI::IsMember(mittag::cli::task_names()));
  app.add_option("--spec", spec_path, "JSON problem specification")
      ->required()
      ->check(CLI::ExistingFile);
  auto* out_opt = app.add_option("--out", out, "Output file (default stdout)");
  auto* format_opt = app.add_option("--format", format, "csv or json")
                         ->check(CLI::IsMember({"csv", "json"}));
  auto* tol_opt = app.add_option("--tol", tol, "Relative tolerance of every series")
                      ->check(CLI::PositiveNumber);
  auto* grid_opt = app.add_option("--grid", grid, "START:STOP:N, overrides the spec grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kExitSpecError, "SpecError", e.what());
  }
  if (*out_opt) ov.out = out;
  if (*format_opt) ov.format = format;
  if (*tol_opt) ov.tol = tol;
  if (*grid_opt) ov.grid = grid;

  nlohmann::json spec;
  {
    std::ifstream in(spec_path);
    try {
      spec = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      return fail(kExitSpecError, "SpecError", std::string("spec is not valid JSON: ") + e.what());
    }
  }

  const mittag::cli::RunResult result = mittag::cli::run(task, spec, ov);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
  if (result.exit_code != 0) {
    std::cerr << result.error << '\n';
    return result.exit_code;
  }

  if (result.out_path.empty()) {
    std::cout << result.output;
    std::cout.flush();
  } else {
    std::ofstream file(result.out_path, std::ios::binary);
    file << result.output;
    if (!file) return fail(kExitNumericalFailure, "IOError", "cannot write " + result.out_path);
  }
  return 0;
}
