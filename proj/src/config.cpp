#include "toroidal/config.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace toroidal {

namespace {

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

int declared_order(const nlohmann::json& a) {
  const std::string type = a.value("type", "");
  if (type == "identity") return 1;
  if (type == "negative_transpose" || type == "negative_j_transpose") return 2;
  if (type == "inner_diagonal" || type == "matrix") return a.at("order").get<int>();
  throw ConfigError("unknown automorphism type '" + type + "'");
}

FiniteAutomorphism make_automorphism(const SimpleLieAlgebraData& alg, const nlohmann::json& a) {
  const std::string type = a.at("type").get<std::string>();
  if (type == "identity") return identity_automorphism(alg);
  if (type == "negative_transpose") return negative_transpose(alg);
  if (type == "negative_j_transpose") return negative_j_transpose(alg);
  if (type == "inner_diagonal") return inner_diagonal(alg, a.at("exponents").get<std::vector<long>>(), a.at("order").get<int>());
  // explicit matrix on the basis of g
  const auto& rows = a.at("matrix");
  if (rows.size() != alg.dim) throw ConfigError("automorphism matrix must be dim g x dim g");
  Matrix m(alg.order, alg.dim, alg.dim);
  for (std::size_t r = 0; r < alg.dim; ++r) {
    if (rows[r].size() != alg.dim) throw ConfigError("automorphism matrix must be dim g x dim g");
    for (std::size_t c = 0; c < alg.dim; ++c) m(r, c) = scalar_from_json(rows[r][c], alg.order);
  }
  return {m, a.at("order").get<int>(), a.value("name", "matrix")};
}

}  // namespace

WindowSpec parse_window(const std::string& text, WindowSpec base) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("window entries look like k=2,depth=1,height=2");
    const std::string key = item.substr(0, eq);
    long value = 0;
    try {
      value = std::stol(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ConfigError("window value for " + key + " is not an integer");
    }
    if (value < 0) throw ConfigError("window values must be non-negative");
    if (key == "k") base.k = value;
    else if (key == "depth") base.depth = value;
    else if (key == "height") base.height = value;
    else throw ConfigError("unknown window field '" + key + "'");
  }
  return base;
}

RunConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  RunConfig c;
  try {
    c.name = j.value("name", "unnamed");
    c.algebra = j.at("algebra");
    c.order = j.value("order", 0);
    for (const auto& a : j.at("automorphisms")) c.automorphisms.push_back(a);
    if (c.automorphisms.size() < 2) throw ConfigError("need sigma_0 and at least one sigma_i");
    c.a1 = parse_a1_convention(j.value("a1_as_b1", "auto"));
    if (j.contains("cocycle")) {
      const auto& co = j["cocycle"];
      c.cocycle = co.is_string() ? co.get<std::string>() : co.at(0).dump() + "," + co.at(1).dump();
      std::erase(c.cocycle, '"');
    }
    c.seed = j.value("seed", std::uint64_t{1});
    const auto samples = j.value("samples", nlohmann::json::object());
    c.jacobi_samples = samples.value("jacobi", c.jacobi_samples);
    c.derivation_samples = samples.value("derivations", c.derivation_samples);
    c.module_pairs = samples.value("module_pairs", c.module_pairs);
    const auto w = j.value("window", nlohmann::json::object());
    c.window.k = w.value("k", c.window.k);
    c.window.depth = w.value("depth", c.window.depth);
    c.window.height = w.value("height", c.window.height);
    if (j.contains("module")) {
      const auto& m = j["module"];
      c.module = m.is_string() ? read_json(base_dir / m.get<std::string>()) : m;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  return config_from_json(read_json(path), path.parent_path());
}

AlgebraSetup build_algebra(const RunConfig& cfg) {
  AlgebraSetup s;
  try {
    int order = 1;
    for (const auto& a : cfg.automorphisms) order = std::lcm(order, declared_order(a));
    if (cfg.order != 0) {
      if (cfg.order % order != 0) throw ConfigError("order must be a multiple of every automorphism order");
      order = cfg.order;
    }
    if (cfg.algebra.contains("type")) s.alg = build_chevalley(cfg.algebra["type"].get<std::string>(), order);
    else if (cfg.algebra.contains("raw")) s.alg = algebra_from_json(cfg.algebra["raw"], order);
    else throw ConfigError("algebra needs 'type' or 'raw'");
    for (const auto& a : cfg.automorphisms) s.autos.push_back(make_automorphism(s.alg, a));
    s.cocycle = parse_cocycle(cfg.cocycle, order);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return s;
}

}  // namespace toroidal
