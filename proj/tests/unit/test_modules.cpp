#include <doctest.h>

#include "toroidal/induction.hpp"

using namespace toroidal;

namespace {

struct Setup {
  SimpleLieAlgebraData alg;
  AssumptionOutcome out;
  ToroidalAlgebra tau;
  CocycleConfig cfg;
  FiniteRootSystem delta0() const { return *out.delta0; }
};

Setup make(const std::string& type, int order, const std::function<std::vector<FiniteAutomorphism>(const SimpleLieAlgebraData&)>& autos) {
  auto alg = build_chevalley(type, order);
  const auto dec = eigen_decompose(alg, autos(alg));
  auto out = check_assumptions(alg, dec, A1Convention::Auto);
  INFO(out.report.to_json().dump());
  REQUIRE(out.report.ok());
  ToroidalAlgebra tau(adapted_basis(alg, dec));
  return {std::move(alg), std::move(out), std::move(tau), CocycleConfig{CycScalar(order), CycScalar(order)}};
}

Setup sl2_untwisted() {
  return make("A1", 2, [](const auto& g) { return std::vector{identity_automorphism(g), identity_automorphism(g)}; });
}
// twist along t1: Lambda = Z/2, g(sigma_0) = sl3 graded over a = so3
Setup sl3_graded() {
  return make("A2", 2, [](const auto& g) { return std::vector{identity_automorphism(g), negative_j_transpose(g)}; });
}
Setup sl3_twisted() {
  return make("A2", 2, [](const auto& g) { return std::vector{negative_j_transpose(g), identity_automorphism(g)}; });
}

ModuleParams params(const Setup& s, const std::string& extra = "{}") {
  nlohmann::json j = nlohmann::json::parse(extra);
  if (!j.contains("C0")) j["C0"] = "1";
  return params_from_json(j, s.tau.order(), s.tau.n());
}

std::vector<BasisSymbol> acting(const LoopModule& m, const TauView& view, long kmax) {
  std::vector<BasisSymbol> out;
  for (const auto& s : symbols_in_window(view.tau(), 0, kmax))
    if (m.acts(s)) out.push_back(s);
  return out;
}

// LoopModule keeps references, so the pieces live together and never move.
struct Modules {
  Modules(const Setup& s, const std::vector<Rational>& labels, const std::string& extra)
      : p(params(s, extra)),
        mu(weight_from_labels(s.delta0(), labels, s.tau.order())),
        w2(w2_top(s.tau.basis(), mu, std::vector<long>(s.tau.n(), 0))),
        w2s(w2_sigma0(s.tau.basis(), s.delta0(), w2)),
        T(s.tau, p, w2, false),
        S(s.tau, p, w2s, true) {}
  Modules(const Modules&) = delete;
  ModuleParams p;
  Vector mu;
  WeightModule w2;
  WeightModule w2s;
  LoopModule T;
  LoopModule S;
};

std::unique_ptr<Modules> build(const Setup& s, const std::vector<Rational>& labels, const std::string& extra = "{}") {
  return std::make_unique<Modules>(s, labels, extra);
}

}  // namespace

TEST_CASE("gradings: classification of sample symbols") {
  const auto s = sl2_untwisted();
  const auto& ab = s.tau.basis();
  std::size_t e = 0, f = 0;
  for (std::size_t i = 0; i < ab.alpha.size(); ++i) {
    if (is_zero(ab.alpha[i])) continue;
    if (s.delta0().height(ab.alpha[i]).value() > 0) e = i;
    else f = i;
  }
  const auto d1 = BasisSymbol::deriv(1, 0, {0});
  for (auto kind : {DecompositionKind::D0, DecompositionKind::Affine, DecompositionKind::Tau0})
    CHECK(classify(s.tau, d1, kind) == Part::Zero);
  const auto e0 = BasisSymbol::loop(e, 0, {3});
  CHECK(classify(s.tau, e0, DecompositionKind::D0) == Part::Zero);
  CHECK(classify(s.tau, e0, DecompositionKind::Tau0) == Part::Plus);
  CHECK(classify(s.tau, e0, DecompositionKind::Affine) == Part::Plus);
  const auto f2 = BasisSymbol::loop(f, 2, {-1});
  CHECK(classify(s.tau, f2, DecompositionKind::D0) == Part::Plus);
  CHECK(classify(s.tau, f2, DecompositionKind::Affine) == Part::Plus);
  CHECK_THROWS_AS(classify(s.tau, f2, DecompositionKind::Tau0), std::invalid_argument);
  const auto w = weight_of(s.tau, f2);
  CHECK(w.k0 == 2);
  CHECK(w.k == std::vector<long>{-1});
  CHECK(w.alpha == ab.alpha[f]);
  CHECK(check_gradings(s.tau, 1, 1, s.cfg).ok());
  CHECK(check_gradings(sl3_twisted().tau, 1, 1, s.cfg).ok());
}

TEST_CASE("T': central and derivation symbols act as prescribed") {
  const auto s = sl2_untwisted();
  auto m = build(s, {2}, R"({"C0": "3/2", "alpha_shift": ["1/3"], "W1": {"type": "gl1", "scalar": "1/2"}})");
  const TauView view(s.tau, s.cfg, DecompositionKind::Tau0, s.delta0());
  const WeightKey key{0, {4}, m->mu};
  REQUIRE(m->T.dim(key) == 1);
  const int N = s.tau.order();
  CHECK(action_matrix(m->T, view, BasisSymbol::central(0, 0, {0}), key)(0, 0) == CycScalar(N, Rational(3, 2)));
  CHECK(action_matrix(m->T, view, BasisSymbol::central(1, 0, {0}), key)(0, 0).is_zero());
  // D(e1, 0) acts by k1 + alpha_1
  CHECK(action_matrix(m->T, view, BasisSymbol::deriv(1, 0, {0}), key)(0, 0) == CycScalar(N, Rational(13, 3)));
  CHECK(check_params(m->p, 2).ok());
}

TEST_CASE("check_params: central character gates") {
  const auto s = sl2_untwisted();
  CHECK_FALSE(check_params(params(s, R"({"psi": ["1", "1"]})"), 2).ok());
  CHECK_FALSE(check_params(params(s, R"({"C0": "0"})"), 2).ok());
  const Report crit = check_params(params(s, R"({"C0": "-2"})"), 2);
  CHECK(crit.ok());
  CHECK(crit.to_json().dump().find("critical") != std::string::npos);
}

TEST_CASE("W2(sigma_0): Lambda-graded sl3 over so3") {
  const auto s = sl3_graded();
  const auto& ab = s.tau.basis();
  auto w2s = [&](long lab) {
    return w2_sigma0(ab, s.delta0(), w2_top(ab, weight_from_labels(s.delta0(), {Rational(lab)}, 2), {0}));
  };
  CHECK(w2s(0).total_dim() == 1);
  // the adjoint of sl3, Weyl dimension 8
  CHECK(w2s(4).total_dim() == 8);
  CHECK_THROWS_AS(w2s(1), WindowError);
}

TEST_CASE("T' and S': module axioms, irreducibility and the top") {
  for (const auto& [s, lab] : {std::pair{sl2_untwisted(), 1L}, {sl3_graded(), 4L}, {sl3_twisted(), 1L}}) {
    const std::vector<Rational> labels(s.delta0().simple_roots().size(), Rational(lab));
    auto m = build(s, labels);
    const TauView view(s.tau, s.cfg, DecompositionKind::Tau0, s.delta0());
    const auto tkeys = box_keys(m->T.key_classes(), 2);
    const auto skeys = box_keys(m->S.key_classes(), 2);
    CHECK(check_module_axioms(m->T, view, acting(m->T, view, 2), tkeys, 200, 7).ok());
    CHECK(check_module_axioms(m->S, view, acting(m->S, view, 2), skeys, 200, 7).ok());
    const WeightKey top{0, std::vector<long>(s.tau.n(), 0), m->mu};
    CHECK(window_irreducibility(m->S, view, acting(m->S, view, 4), skeys, top).ok());
    // singular vectors of S' are the embedded T'
    const auto plus = view.symbols(Part::Plus, 2, 100);
    for (const auto& key : skeys) {
      const auto sing = singular_vectors(m->S, view, plus, key);
      CHECK(sing.size() == m->T.dim(key));
    }
    // S' restricted to tau^0 agrees with T' on the top
    for (const auto& x : acting(m->T, view, 2))
      for (const auto& key : tkeys)
        if (m->T.dim(key) > 0) CHECK(action_matrix(m->S, view, x, key) == action_matrix(m->T, view, x, key));
  }
}

TEST_CASE("Tau0 induction: the irreducible quotient of T' matches S'") {
  for (const auto& [s, top] : {std::pair{sl2_untwisted(), 2L}, {sl3_graded(), 4L}, {sl3_twisted(), 2L}}) {
    for (long lab : {0L, top}) {
      const std::vector<Rational> labels(s.delta0().simple_roots().size(), Rational(lab));
      auto m = build(s, labels);
      const TauView view(s.tau, s.cfg, DecompositionKind::Tau0, s.delta0());
      InducedModule L(view, m->T, InductionWindow{2, 4});
      long spread = 0;
      for (auto mi : s.tau.m()) spread = std::max(spread, mi - 1);
      const long interior = 2 - 2 * spread;
      std::size_t compared = 0;
      for (const auto& key : L.window_keys(interior)) {
        if (L.depth(key) < -2) continue;
        CHECK_MESSAGE(L.quotient_dim(key) == m->S.dim(key), to_string(key));
        ++compared;
      }
      CHECK(compared > 0);
    }
  }
}

TEST_CASE("bounded quotient: D0 induction of S' agrees with Affine induction of T'") {
  const auto s = sl2_untwisted();
  for (long lab : {0L, 2L}) {
    auto m = build(s, {Rational(lab)});
    const TauView d0(s.tau, s.cfg, DecompositionKind::D0, s.delta0());
    const TauView aff(s.tau, s.cfg, DecompositionKind::Affine, s.delta0());
    const long K = 2, D = 1;
    InducedModule Ld(d0, m->S, InductionWindow{K, D});
    // deepest Affine depth among the D0 keys
    const auto keys = Ld.window_keys(K - D);
    const Rational top = aff.key_depth(WeightKey{0, {0}, m->mu});
    long dmax = 0;
    for (const auto& key : keys) dmax = std::max(dmax, static_cast<long>(Rational(top - aff.key_depth(key)).get_num().get_si()));
    InducedModule La(aff, m->T, InductionWindow{K, dmax});
    std::size_t nonzero = 0;
    for (const auto& key : keys) {
      const auto dd = Ld.quotient_dim(key);
      CHECK_MESSAGE(dd == La.quotient_dim(key), to_string(key));
      nonzero += dd > 0 && key.k0 == -1;
    }
    CHECK(nonzero > 0);
  }
}
