#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "toroidal/config.hpp"
#include "toroidal/gradings.hpp"

namespace toroidal {

enum ExitCode : int { kExitOk = 0, kExitMath = 1, kExitConfig = 2, kExitWindow = 3 };

struct RunResult {
  int exit_code = kExitOk;
  nlohmann::json summary;
  /// file name -> contents, written in name order
  std::map<std::string, std::string> files;
};

/// Automorphisms, assumptions, Jacobi with central corrections, dA-equivariance and gradings.
RunResult verify_algebra(const RunConfig& cfg);
/// Module constructions and the window-scale consequences on top of a passing algebra.
RunResult verify_modules(const RunConfig& cfg);
/// Classification tables; every tau-level decomposition when `kind` is empty.
RunResult run_decompose(const RunConfig& cfg, const std::string& kind);
/// Characters of S' and of the Tau0 quotient of the module induced from T'.
RunResult run_character(const RunConfig& cfg);
RunResult run_check_jacobi(const RunConfig& cfg);

/// Writes every file of the result plus summary.json into `dir`.
void write_result(const RunResult& r, const std::filesystem::path& dir);

}  // namespace toroidal
