#include <CLI11.hpp>

#include <iostream>

#include "toroidal/induction.hpp"
#include "toroidal/verify.hpp"

using namespace toroidal;

int main(int argc, char** argv) {
  CLI::App app{"exact checks for twisted full toroidal Lie algebras and their bounded modules"};
  app.require_subcommand(1);

  std::string config, window, cocycle, out = "out", kind;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config, "run configuration (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "sampling seed");
    sub->add_option("--window", window, "k=K,depth=D,height=H");
    sub->add_option("--cocycle", cocycle, "c1,c2");
    sub->add_option("--out", out, "output directory");
  };
  auto* va = app.add_subcommand("verify-algebra", "automorphisms, assumptions, Jacobi, dA, gradings");
  auto* vm = app.add_subcommand("verify-modules", "T', W2(sigma_0), S' and the window-scale consequences");
  auto* de = app.add_subcommand("decompose", "classification tables of the triangular decompositions");
  auto* ch = app.add_subcommand("character", "characters of S' and of the Tau0 quotient");
  auto* cj = app.add_subcommand("check-jacobi", "Jacobi identity with central corrections");
  for (auto* s : {va, vm, de, ch, cj}) common(s);
  cj->add_option("--samples", samples, "number of triples");
  de->add_option("--kind", kind, "affine, d0, tau0 or gsigma0 (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    RunConfig cfg = load_config(config);
    if (seed) cfg.seed = *seed;
    if (!window.empty()) cfg.window = parse_window(window, cfg.window);
    if (!cocycle.empty()) cfg.cocycle = cocycle;
    if (samples) cfg.jacobi_samples = *samples;
    RunResult r;
    if (*va) r = verify_algebra(cfg);
    else if (*vm) r = verify_modules(cfg);
    else if (*de) r = run_decompose(cfg, kind);
    else if (*ch) r = run_character(cfg);
    else r = run_check_jacobi(cfg);
    write_result(r, out);
    std::cout << r.summary.dump(2) << "\n";
    return r.exit_code;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const WindowError& e) {
    std::cerr << "window cap: " << e.what() << "\n";
    return kExitWindow;
  }
}
