#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "toroidal/multiloop.hpp"
#include "toroidal/toroidal.hpp"

namespace toroidal {

/// Malformed or inconsistent configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WindowSpec {
  long k = 2;       // |k|_inf of symbols and weights
  long depth = 1;   // d0-depth for the D0 and Affine inductions
  long height = 2;  // root height for the Tau0 induction
};
/// "k=2,depth=1,height=2"; missing fields keep the values of `base`.
WindowSpec parse_window(const std::string& text, WindowSpec base);

struct RunConfig {
  std::string name;
  nlohmann::json algebra;  // {"type": "A2"} or {"raw": {...}}
  int order = 0;           // 0: least common multiple of the automorphism orders
  std::vector<nlohmann::json> automorphisms;
  A1Convention a1 = A1Convention::Auto;
  std::string cocycle = "0,0";
  std::uint64_t seed = 1;
  std::size_t jacobi_samples = 1000;
  std::size_t derivation_samples = 200;
  std::size_t module_pairs = 500;
  WindowSpec window;
  nlohmann::json module;  // null when the config has no module section
};

/// Throws ConfigError.
RunConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);
RunConfig load_config(const std::filesystem::path& path);

struct AlgebraSetup {
  SimpleLieAlgebraData alg;
  std::vector<FiniteAutomorphism> autos;
  CocycleConfig cocycle;
};
/// Algebra and automorphisms over the field fixed by the config. Throws ConfigError.
AlgebraSetup build_algebra(const RunConfig& cfg);

}  // namespace toroidal
