#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toroidal/config.hpp"
#include "toroidal/induction.hpp"
#include "toroidal/verify.hpp"

namespace py = pybind11;
using namespace toroidal;

namespace {

RunConfig prepare(const std::string& path, std::optional<std::uint64_t> seed, const std::string& window,
                  const std::string& cocycle) {
  RunConfig cfg = load_config(path);
  if (seed) cfg.seed = *seed;
  if (!window.empty()) cfg.window = parse_window(window, cfg.window);
  if (!cocycle.empty()) cfg.cocycle = cocycle;
  return cfg;
}

// JSON crosses as text; the Python side decodes it
py::dict to_python(const RunResult& r) {
  py::dict d;
  d["exit_code"] = r.exit_code;
  d["summary"] = r.summary.dump();
  d["files"] = r.files;
  return d;
}

template <class F>
void def_command(py::module_& m, const char* name, F run) {
  m.def(
      name,
      [run](const std::string& config, std::optional<std::uint64_t> seed, const std::string& window,
            const std::string& cocycle) { return to_python(run(prepare(config, seed, window, cocycle))); },
      py::arg("config"), py::arg("seed") = py::none(), py::arg("window") = "", py::arg("cocycle") = "");
}

}  // namespace

PYBIND11_MODULE(_toroidal, m) {
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<WindowError>(m, "WindowError", PyExc_RuntimeError);

  def_command(m, "verify_algebra", [](const RunConfig& c) { return verify_algebra(c); });
  def_command(m, "verify_modules", [](const RunConfig& c) { return verify_modules(c); });
  def_command(m, "character", [](const RunConfig& c) { return run_character(c); });
  def_command(m, "check_jacobi", [](const RunConfig& c) { return run_check_jacobi(c); });
  m.def(
      "decompose",
      [](const std::string& config, const std::string& kind, std::optional<std::uint64_t> seed,
         const std::string& window) { return to_python(run_decompose(prepare(config, seed, window, ""), kind)); },
      py::arg("config"), py::arg("kind") = "", py::arg("seed") = py::none(), py::arg("window") = "");
}
