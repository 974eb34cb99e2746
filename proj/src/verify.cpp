#include "toroidal/verify.hpp"

#include <fstream>
#include <memory>
#include <optional>

#include "toroidal/induction.hpp"
#include "toroidal/thin_cover.hpp"

namespace toroidal {

namespace {

struct Prepared {
  RunConfig cfg;
  AlgebraSetup setup;
  Report report;
  std::optional<EigenDecomposition> dec;
  AssumptionOutcome outcome;
  std::unique_ptr<ToroidalAlgebra> tau;
  bool ok = false;
};

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json base_summary(const std::string& command, const RunConfig& cfg) {
  return {{"command", command}, {"config", cfg.name}, {"seed", cfg.seed}, {"cocycle", cfg.cocycle},
          {"window", {{"k", cfg.window.k}, {"depth", cfg.window.depth}, {"height", cfg.window.height}}}};
}

// algebra, automorphisms and assumptions; everything else needs these
std::unique_ptr<Prepared> prepare(const RunConfig& cfg) {
  auto p = std::make_unique<Prepared>();
  p->cfg = cfg;
  p->setup = build_algebra(cfg);
  p->report.append(validate_algebra(p->setup.alg), "algebra");
  p->report.append(validate_automorphisms(p->setup.alg, p->setup.autos), "automorphisms");
  if (!p->report.ok()) return p;
  p->dec = eigen_decompose(p->setup.alg, p->setup.autos);
  p->outcome = check_assumptions(p->setup.alg, *p->dec, cfg.a1);
  p->report.append(p->outcome.report, "assumptions");
  if (!p->report.ok()) return p;
  p->tau = std::make_unique<ToroidalAlgebra>(adapted_basis(p->setup.alg, *p->dec));
  p->ok = true;
  return p;
}

nlohmann::json algebra_facts(const Prepared& p) {
  nlohmann::json j{{"algebra", p.setup.alg.name}, {"dim_g", p.setup.alg.dim}, {"field_order", p.setup.alg.order}};
  if (p.dec) {
    j["m0"] = p.dec->m0;
    j["m"] = p.dec->m;
    j["dim_g00"] = p.outcome.dim_g00;
    j["a1_as_b1"] = p.outcome.a1_as_b1;
  }
  return j;
}

std::string verdict(const Report& r) { return r.ok() ? "pass" : "fail"; }

long spread(const ToroidalAlgebra& tau) {
  long s = 0;
  for (auto mi : tau.m()) s = std::max(s, mi - 1);
  return s;
}

std::vector<WeightKey> nonzero(const TopModule& m, const std::vector<WeightKey>& keys) {
  std::vector<WeightKey> out;
  for (const auto& k : keys)
    if (m.dim(k) > 0) out.push_back(k);
  return out;
}

std::vector<BasisSymbol> acting(const LoopModule& m, const ToroidalAlgebra& tau, long kmax) {
  std::vector<BasisSymbol> out;
  for (const auto& s : symbols_in_window(tau, 0, kmax))
    if (m.acts(s)) out.push_back(s);
  return out;
}

Character character_of(const TopModule& m, const std::vector<WeightKey>& keys) {
  Character c;
  for (const auto& k : keys) c[k] = m.dim(k);
  return c;
}

bool is_scalar(const Matrix& m, const CycScalar& c) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == (i == j ? c : CycScalar(c.order())))) return false;
  return true;
}

struct ModuleStage {
  ModuleParams params;
  Vector mu;
  std::unique_ptr<WeightModule> w2, w2s;
  std::unique_ptr<LoopModule> T, S;
};

// Tau0-induced quotient of T' against S' on the interior of the (k, height) window
Report tau0_character(const ToroidalAlgebra& tau, const TauView& view, const LoopModule& T, const LoopModule& S,
                      const WindowSpec& w, Character& quotient, Character& target) {
  Report rep;
  const long interior = w.k - w.height * spread(tau);
  if (interior < 0) {
    rep.fail("window", "window interior is empty: enlarge k", {{"k", w.k}, {"height", w.height}});
    return rep;
  }
  InducedModule L(view, T, InductionWindow{w.k, w.height});
  InducedModule L2(view, T, InductionWindow{w.k + 1, w.height});
  std::size_t bad = 0, unstable = 0;
  nlohmann::json witness = nlohmann::json::array();
  for (const auto& key : L.window_keys(interior)) {
    if (L.depth(key) < -w.height) continue;
    const std::size_t d = L.quotient_dim(key), d2 = L2.quotient_dim(key), s = S.dim(key);
    quotient[key] = d;
    target[key] = s;
    if (d != d2) ++unstable;
    if (d != s) {
      ++bad;
      if (witness.size() < 5) witness.push_back({{"key", to_json(key)}, {"quotient", d}, {"sprime", s}});
    }
  }
  const nlohmann::json info{{"keys", quotient.size()}, {"interior_k", interior}, {"memo", L.memo_size()}};
  if (bad == 0) rep.pass("character", "L(T) and S' agree on every interior key", info);
  else rep.fail("character", "L(T) and S' differ", witness);
  if (unstable == 0) rep.pass("stability", "k window + 1 gives the same dimensions");
  else rep.fail("stability", "dimensions still grow with the k window", {{"keys", unstable}});
  return rep;
}

// D0 induction of S' against Affine induction of T' down to d0-depth w.depth
Report bounded_character(const ToroidalAlgebra& tau, const TauView& d0, const TauView& aff, const LoopModule& T,
                         const LoopModule& S, const Vector& mu, const WindowSpec& w, Character& from_s,
                         Character& from_t) {
  Report rep;
  const long interior = w.k - w.depth * std::max<long>(1, spread(tau));
  if (interior < 0) {
    rep.fail("window", "window interior is empty: enlarge k", {{"k", w.k}, {"depth", w.depth}});
    return rep;
  }
  InducedModule Ld(d0, S, InductionWindow{w.k, w.depth});
  const auto keys = Ld.window_keys(interior);
  const Rational top = aff.key_depth(WeightKey{0, std::vector<long>(tau.n(), 0), mu});
  long dmax = 0;
  for (const auto& key : keys) {
    const Rational d = top - aff.key_depth(key);
    dmax = std::max(dmax, static_cast<long>(mpz_class(d.get_num() / d.get_den()).get_si()) + 1);
  }
  InducedModule La(aff, T, InductionWindow{w.k, dmax});
  std::size_t bad = 0;
  nlohmann::json witness = nlohmann::json::array();
  for (const auto& key : keys) {
    const std::size_t a = Ld.quotient_dim(key), b = La.quotient_dim(key);
    from_s[key] = a;
    from_t[key] = b;
    if (a != b) {
      ++bad;
      if (witness.size() < 5) witness.push_back({{"key", to_json(key)}, {"from_sprime", a}, {"from_tprime", b}});
    }
  }
  const nlohmann::json info{{"keys", keys.size()}, {"interior_k", interior}, {"affine_depth", dmax}};
  if (bad == 0) rep.pass("character", "both inductions agree down to the d0-depth window", info);
  else rep.fail("character", "the two inductions differ", witness);
  return rep;
}

Report bpsi_membership(const ToroidalAlgebra& tau, const TauView& view, const LoopModule& S, const ModuleParams& p,
                       const std::vector<WeightKey>& keys) {
  Report rep;
  const int N = tau.order();
  const auto& ab = tau.basis();
  const std::vector<long> zero(tau.n(), 0);
  std::size_t weight_bad = 0, central_bad = 0;
  for (const auto& key : keys) {
    for (std::size_t j = 0; j < ab.h0_dim(); ++j)
      if (!is_scalar(action_matrix(S, view, BasisSymbol::loop(ab.h0_index[j], 0, zero), key), key.alpha[j])) ++weight_bad;
    for (std::size_t i = 1; i <= tau.n(); ++i)
      if (!is_scalar(action_matrix(S, view, BasisSymbol::deriv(i, 0, zero), key),
                     CycScalar(N, key.k[i - 1]) + p.alpha_shift[i - 1]))
        ++weight_bad;
    if (!is_scalar(action_matrix(S, view, BasisSymbol::deriv(0, 0, zero), key), p.d0shift)) ++weight_bad;
    if (!is_scalar(action_matrix(S, view, BasisSymbol::central(0, 0, zero), key), p.C0)) ++central_bad;
    for (std::size_t i = 1; i <= tau.n(); ++i)
      if (!action_matrix(S, view, BasisSymbol::central(i, 0, zero), key).is_zero()) ++central_bad;
  }
  if (weight_bad == 0) rep.pass("weights", "h(0), d_0 and the d_i act diagonally by the key");
  else rep.fail("weights", "a Cartan element does not act by its weight", {{"count", weight_bad}});
  if (central_bad == 0) rep.pass("central", "K_0 acts by C_0 and K_i by 0", p.C0.str());
  else rep.fail("central", "central character differs from psi", {{"count", central_bad}});
  std::size_t largest = 0;
  for (const auto& key : keys) largest = std::max(largest, S.dim(key));
  rep.pass("finite", "weight spaces are finite-dimensional", {{"largest", largest}});
  rep.pass("bounded", "the top sits at d0-degree 0 and inductions only lower it");
  return rep;
}

void add_character_files(RunResult& r, const std::string& name, const Character& c) {
  r.files["character_" + name + ".csv"] = character_csv(c);
  r.files["character_" + name + ".json"] = dump(character_json(c));
}

// Builds the module data in place (T and S keep references into it); throws ConfigError or WindowError
void build_modules(const Prepared& p, Report& rep, ModuleStage& m) {
  if (p.cfg.module.is_null()) throw ConfigError("config has no module section");
  const auto& tau = *p.tau;
  try {
    m.params = params_from_json(p.cfg.module, tau.order(), tau.n());
    m.mu = weight_from_labels(*p.outcome.delta0, m.params.w2_labels, tau.order());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("module: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("module: ") + e.what());
  }
  rep.append(check_params(m.params, p.setup.alg.dual_coxeter), "");
  if (!rep.ok()) return;
  m.w2 = std::make_unique<WeightModule>(w2_top(tau.basis(), m.mu, m.params.w2_grade));
  const FiniteLieView gs = gsigma0_view(tau.basis(), *p.outcome.delta0);
  std::vector<BasisSymbol> zero_part;
  for (const auto& s : gs.all_symbols())
    if (gs.part(s) == Part::Zero) zero_part.push_back(s);
  rep.append(check_module_axioms(*m.w2, gs, zero_part, m.w2->key_classes(), 50, p.cfg.seed), "W2");
  m.w2s = std::make_unique<WeightModule>(w2_sigma0(tau.basis(), *p.outcome.delta0, *m.w2));
  m.T = std::make_unique<LoopModule>(tau, m.params, *m.w2, false);
  m.S = std::make_unique<LoopModule>(tau, m.params, *m.w2s, true);
}

}  // namespace

RunResult verify_algebra(const RunConfig& cfg) {
  RunResult r;
  r.summary = base_summary("verify-algebra", cfg);
  auto p = prepare(cfg);
  Report rep = p->report;
  if (p->ok) {
    const auto& tau = *p->tau;
    rep.append(check_jacobi(tau, cfg.jacobi_samples, cfg.seed, p->setup.cocycle), "jacobi");
    rep.append(check_antisymmetry(tau, cfg.jacobi_samples / 4 + 1, cfg.seed, p->setup.cocycle), "antisymmetry");
    rep.append(check_da_equivariance(tau, random_derivation_samples(tau, cfg.derivation_samples, cfg.seed)), "dA");
    rep.append(check_gradings(tau, 1, std::min<long>(cfg.window.k, 2), p->setup.cocycle), "gradings");
  }
  r.exit_code = rep.ok() ? kExitOk : kExitMath;
  r.summary["facts"] = algebra_facts(*p);
  r.summary["verdict"] = verdict(rep);
  r.summary["exit_code"] = r.exit_code;
  r.files["algebra_report.json"] = dump({{"summary", r.summary}, {"report", rep.to_json()}});
  return r;
}

RunResult verify_modules(const RunConfig& cfg) {
  RunResult r;
  r.summary = base_summary("verify-modules", cfg);
  auto p = prepare(cfg);
  r.summary["facts"] = algebra_facts(*p);
  nlohmann::json sections = nlohmann::json::object();
  nlohmann::json verdicts = nlohmann::json::object();
  auto finish = [&](int code) {
    r.exit_code = code;
    r.summary["verdicts"] = verdicts;
    r.summary["exit_code"] = code;
    r.files["modules_report.json"] = dump({{"summary", r.summary}, {"sections", sections}});
    return r;
  };
  if (!p->ok) {
    sections["algebra"] = p->report.to_json();
    verdicts["algebra"] = "fail";
    return finish(kExitMath);
  }
  const auto& tau = *p->tau;
  const auto& w = cfg.window;
  Report params;
  ModuleStage m;
  try {
    build_modules(*p, params, m);
  } catch (const WindowError& e) {
    sections["params"] = params.to_json();
    r.summary["diagnostic"] = e.what();
    verdicts["params"] = "window";
    return finish(kExitWindow);
  }
  sections["params"] = params.to_json();
  verdicts["params"] = params.ok() ? "pass" : "rejected";
  if (!params.ok()) return finish(kExitMath);
  r.summary["W2_sigma0_dim"] = m.w2s->total_dim();

  const auto& delta0 = *p->outcome.delta0;
  const TauView tau0(tau, p->setup.cocycle, DecompositionKind::Tau0, delta0);
  const TauView d0(tau, p->setup.cocycle, DecompositionKind::D0, delta0);
  const TauView aff(tau, p->setup.cocycle, DecompositionKind::Affine, delta0);
  const auto tkeys = nonzero(*m.T, box_keys(m.T->key_classes(), w.k));
  const auto skeys = nonzero(*m.S, box_keys(m.S->key_classes(), w.k));
  WeightKey cyclic = tkeys.front();
  for (const auto& k : tkeys)
    if (k.alpha == m.mu) {
      cyclic = k;
      break;
    }

  Report tp;
  tp.append(check_module_axioms(*m.T, tau0, acting(*m.T, tau, w.k), tkeys, cfg.module_pairs, cfg.seed), "axioms");
  tp.append(window_irreducibility(*m.T, tau0, acting(*m.T, tau, 2 * w.k), tkeys, cyclic), "irreducible");
  sections["tprime_consistency"] = tp.to_json();
  verdicts["tprime_consistency"] = verdict(tp);

  Report sp;
  sp.append(check_module_axioms(*m.S, tau0, acting(*m.S, tau, w.k), skeys, cfg.module_pairs, cfg.seed), "axioms");
  sp.append(window_irreducibility(*m.S, tau0, acting(*m.S, tau, 2 * w.k), skeys, cyclic), "irreducible");
  {
    const auto plus = tau0.symbols(Part::Plus, w.k, 1000);
    std::size_t bad = 0, total = 0;
    nlohmann::json witness = nlohmann::json::array();
    for (const auto& key : skeys) {
      const std::size_t s = singular_vectors(*m.S, tau0, plus, key).size();
      total += s;
      if (s != m.T->dim(key)) {
        ++bad;
        if (witness.size() < 5) witness.push_back({{"key", to_json(key)}, {"singular", s}, {"tprime", m.T->dim(key)}});
      }
    }
    if (bad == 0) sp.pass("singular", "singular vectors are exactly the embedded T'", {{"dim", total}});
    else sp.fail("singular", "singular vectors differ from T'", witness);
    std::size_t mismatch = 0;
    for (const auto& x : acting(*m.T, tau, w.k))
      for (const auto& key : tkeys)
        if (!(action_matrix(*m.S, tau0, x, key) == action_matrix(*m.T, tau0, x, key))) ++mismatch;
    if (mismatch == 0) sp.pass("top_action", "S' restricted to T' is the T' action");
    else sp.fail("top_action", "S' and T' actions differ on the top", {{"count", mismatch}});
  }
  sections["sprime_structure"] = sp.to_json();
  verdicts["sprime_structure"] = verdict(sp);

  Report bp = bpsi_membership(tau, tau0, *m.S, m.params, skeys);
  sections["bpsi_membership"] = bp.to_json();
  verdicts["bpsi_membership"] = verdict(bp);

  Character lt, sc, from_s, from_t;
  Report qc, bc;
  try {
    qc = tau0_character(tau, tau0, *m.T, *m.S, w, lt, sc);
    bc = bounded_character(tau, d0, aff, *m.T, *m.S, m.mu, w, from_s, from_t);
  } catch (const WindowError& e) {
    sections["tau0_quotient_character"] = qc.to_json();
    r.summary["diagnostic"] = e.what();
    verdicts["tau0_quotient_character"] = "window";
    return finish(kExitWindow);
  }
  sections["tau0_quotient_character"] = qc.to_json();
  verdicts["tau0_quotient_character"] = verdict(qc);
  sections["bounded_quotient_character"] = bc.to_json();
  verdicts["bounded_quotient_character"] = verdict(bc);
  add_character_files(r, "sprime", character_of(*m.S, skeys));
  add_character_files(r, "tau0_quotient", lt);
  add_character_files(r, "d0_from_sprime", from_s);
  add_character_files(r, "affine_from_tprime", from_t);

  Report tc;
  {
    const auto h = heisenberg_example();
    tc.append(thin_cover_lift_restrict(h.g, h.n, h.cover, 3), h.name);
    const auto s = sl3_gl2_example();
    tc.append(thin_cover_lift_restrict(s.g, s.n, s.cover, 2), s.name);
  }
  sections["thin_covering"] = tc.to_json();
  verdicts["thin_covering"] = verdict(tc);

  bool all = true;
  for (const auto& [k, v] : verdicts.items()) all = all && v == "pass";
  r.summary["verdict"] = all ? "pass" : "fail";
  return finish(all ? kExitOk : kExitMath);
}

RunResult run_decompose(const RunConfig& cfg, const std::string& kind) {
  RunResult r;
  r.summary = base_summary("decompose", cfg);
  auto p = prepare(cfg);
  if (!p->ok) {
    r.exit_code = kExitMath;
    r.summary["exit_code"] = r.exit_code;
    r.files["decompose.json"] = dump({{"summary", r.summary}, {"report", p->report.to_json()}});
    return r;
  }
  std::vector<DecompositionKind> kinds;
  if (kind.empty()) kinds = {DecompositionKind::D0, DecompositionKind::Affine, DecompositionKind::Tau0, DecompositionKind::GSigma0};
  else {
    try {
      kinds = {parse_kind(kind)};
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  nlohmann::json tables = nlohmann::json::array();
  for (auto k : kinds) tables.push_back(decompose_json(*p->tau, k, cfg.window.depth, cfg.window.k));
  r.summary["exit_code"] = 0;
  r.files["decompose.json"] = dump({{"summary", r.summary}, {"tables", tables}});
  return r;
}

RunResult run_character(const RunConfig& cfg) {
  RunResult r;
  r.summary = base_summary("character", cfg);
  auto p = prepare(cfg);
  if (!p->ok) {
    r.exit_code = kExitMath;
    r.summary["exit_code"] = r.exit_code;
    r.files["character_report.json"] = dump({{"summary", r.summary}, {"report", p->report.to_json()}});
    return r;
  }
  Report params;
  ModuleStage m;
  try {
    build_modules(*p, params, m);
  } catch (const WindowError& e) {
    r.exit_code = kExitWindow;
    r.summary["diagnostic"] = e.what();
    r.summary["exit_code"] = r.exit_code;
    r.files["character_report.json"] = dump({{"summary", r.summary}});
    return r;
  }
  if (!params.ok()) {
    r.exit_code = kExitMath;
    r.summary["exit_code"] = r.exit_code;
    r.files["character_report.json"] = dump({{"summary", r.summary}, {"params", params.to_json()}});
    return r;
  }
  const TauView tau0(*p->tau, p->setup.cocycle, DecompositionKind::Tau0, *p->outcome.delta0);
  Character lt, sc;
  Report qc;
  try {
    qc = tau0_character(*p->tau, tau0, *m.T, *m.S, cfg.window, lt, sc);
  } catch (const WindowError& e) {
    r.exit_code = kExitWindow;
    r.summary["diagnostic"] = e.what();
  }
  add_character_files(r, "sprime", sc);
  add_character_files(r, "tau0_quotient", lt);
  if (r.exit_code == kExitOk) r.exit_code = qc.ok() ? kExitOk : kExitMath;
  r.summary["exit_code"] = r.exit_code;
  r.files["character_report.json"] = dump({{"summary", r.summary}, {"report", qc.to_json()}});
  return r;
}

RunResult run_check_jacobi(const RunConfig& cfg) {
  RunResult r;
  r.summary = base_summary("check-jacobi", cfg);
  auto p = prepare(cfg);
  Report rep = p->report;
  if (p->ok) rep.append(check_jacobi(*p->tau, cfg.jacobi_samples, cfg.seed, p->setup.cocycle), "jacobi");
  r.exit_code = rep.ok() ? kExitOk : kExitMath;
  r.summary["samples"] = cfg.jacobi_samples;
  r.summary["exit_code"] = r.exit_code;
  r.files["jacobi_report.json"] = dump({{"summary", r.summary}, {"report", rep.to_json()}});
  return r;
}

void write_result(const RunResult& r, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, text] : r.files) {
    std::ofstream out(dir / name, std::ios::binary);
    out << text;
  }
  std::ofstream out(dir / "summary.json", std::ios::binary);
  out << dump(r.summary);
}

}  // namespace toroidal
