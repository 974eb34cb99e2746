#include <doctest.h>

#include "toroidal/toroidal.hpp"

using namespace toroidal;

namespace {

ToroidalAlgebra sl3_twisted() {
  const auto sl3 = build_chevalley("A2", 2);
  const auto dec = eigen_decompose(sl3, {negative_j_transpose(sl3), identity_automorphism(sl3)});
  return ToroidalAlgebra(adapted_basis(sl3, dec));
}

ToroidalAlgebra sl2_untwisted(std::size_t n = 1) {
  const auto sl2 = build_chevalley("A1", 2);
  std::vector<FiniteAutomorphism> autos(n + 1, identity_automorphism(sl2));
  const auto dec = eigen_decompose(sl2, autos);
  return ToroidalAlgebra(adapted_basis(sl2, dec));
}

CycScalar q(long a, long b = 1) { return CycScalar(2, Rational(a, b)); }

const CocycleConfig kNone{q(0), q(0)};

}  // namespace

TEST_CASE("normalize_central: worked examples") {
  const auto tau = sl3_twisted();
  const auto k0 = tau.normalize_central(0, 0, {0}, q(1));
  CHECK(k0 == TauElement(BasisSymbol::central(0, 0, {0}), q(1)));
  // 2 t0^2 t1 K0 + t0^2 t1 K1 = 0
  const auto r = tau.normalize_central(0, 2, {1}, q(1));
  CHECK(r == TauElement(BasisSymbol::central(1, 2, {1}), q(-1, 2)));
  const auto u = tau.normalize_central(0, 0, {1}, q(1));
  CHECK(u == TauElement(BasisSymbol::central(0, 0, {1}), q(1)));
  CHECK_THROWS(tau.normalize_central(0, 1, {0}, q(1)));
}

TEST_CASE("normalize_central: idempotent and degree preserving") {
  const auto tau = sl3_twisted();
  for (long s0 : {-4, -2, 0, 2, 4})
    for (long s1 : {-2, -1, 0, 1, 3})
      for (std::size_t i = 0; i < 2; ++i) {
        const auto once = tau.normalize_central(i, s0, {s1}, q(3));
        TauElement twice;
        for (const auto& [sym, c] : once.terms()) {
          CHECK(sym.k0 == s0);
          CHECK(sym.k == std::vector<long>{s1});
          twice.add(tau.normalize_central(sym.index, sym.k0, sym.k, c), q(1));
        }
        CHECK(twice == once);
      }
}

TEST_CASE("bracket: worked examples") {
  const auto tau = sl3_twisted();
  const auto& ab = tau.basis();
  for (std::size_t v = 0; v < ab.dim; ++v) {
    const long k0 = ab.residue[v].k0 + 2, k1 = 3;
    const auto x = BasisSymbol::loop(v, k0, {k1});
    CHECK(tau.bracket(BasisSymbol::deriv(1, 0, {0}), x, kNone) == TauElement(x, q(k1)));
    CHECK(tau.bracket(BasisSymbol::deriv(0, 0, {0}), x, kNone) == TauElement(x, q(k0)));
  }
  CHECK(tau.bracket(BasisSymbol::deriv(0, 2, {0}), BasisSymbol::central(0, -2, {0}), kNone).is_zero());
  const auto c = BasisSymbol::central(1, 2, {1});
  CHECK(tau.bracket(c, BasisSymbol::loop(0, ab.residue[0].k0, {0}), kNone).is_zero());
  CHECK(tau.bracket(c, BasisSymbol::central(0, 0, {0}), kNone).is_zero());
}

TEST_CASE("bracket: cocycle values on t0^m0 d0, t0^-m0 d0") {
  const auto tau = sl3_twisted();
  const long m0 = tau.m0();
  const auto a = BasisSymbol::deriv(0, m0, {0}), b = BasisSymbol::deriv(0, -m0, {0});
  const auto k0 = BasisSymbol::central(0, 0, {0});
  const auto d0 = BasisSymbol::deriv(0, 0, {0});
  const auto base = tau.bracket(a, b, kNone);
  // s_a t^{r+s} d_b - r_b t^{r+s} d_a = -m0 d0 - m0 d0
  CHECK(base == TauElement(d0, q(-2 * m0)));
  auto phi1 = tau.bracket(a, b, {q(1), q(0)});
  phi1.add(base, q(-1));
  CHECK(phi1 == TauElement(k0, q(m0 * m0 * m0)));
  auto phi2 = tau.bracket(a, b, {q(0), q(1)});
  phi2.add(base, q(-1));
  CHECK(phi2 == TauElement(k0, q(-m0 * m0 * m0)));
}

TEST_CASE("bracket: loop degrees add and land in the right residue") {
  const auto tau = sl3_twisted();
  const auto& ab = tau.basis();
  Sampler rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto x = random_symbol(tau, SymbolKind::Loop, rng, 2);
    const auto y = random_symbol(tau, SymbolKind::Loop, rng, 2);
    const auto b = tau.bracket(x, y, kNone);
    for (const auto& [s, c] : b.terms()) {
      CHECK(s.k0 == x.k0 + y.k0);
      CHECK(s.k[0] == x.k[0] + y.k[0]);
      if (s.kind == SymbolKind::Loop) CHECK(ab.admits(s.index, s.k0, s.k));
    }
  }
}

TEST_CASE("jacobi: explicit triples") {
  const auto tau = sl2_untwisted();
  const std::array<BasisSymbol, 3> centrals = {BasisSymbol::central(0, 0, {0}), BasisSymbol::central(1, 0, {0}),
                                               BasisSymbol::central(0, 0, {0})};
  CHECK(check_jacobi_triples(tau, {centrals}, kNone).ok());
  const std::array<BasisSymbol, 3> mixed = {BasisSymbol::deriv(0, 0, {0}), BasisSymbol::deriv(1, 0, {0}),
                                            BasisSymbol::loop(0, 2, {-1})};
  CHECK(check_jacobi_triples(tau, {mixed}, kNone).ok());
}

TEST_CASE("jacobi and antisymmetry: seeded samples for every cocycle") {
  for (const auto& tau : {sl2_untwisted(), sl2_untwisted(2), sl3_twisted()}) {
    for (const auto& cfg : {CocycleConfig{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}}) {
      CHECK(check_jacobi(tau, 150, 42, cfg).ok());
      CHECK(check_antisymmetry(tau, 90, 42, cfg).ok());
    }
  }
}

TEST_CASE("jacobi: a non-invariant form is caught") {
  const auto sl2 = build_chevalley("A1", 2);
  const auto dec = eigen_decompose(sl2, {identity_automorphism(sl2), identity_automorphism(sl2)});
  auto ab = adapted_basis(sl2, dec);
  ab.form(0, 2) += q(1);
  ab.form(2, 0) += q(1);
  const ToroidalAlgebra broken(ab);
  CHECK_FALSE(check_jacobi(broken, 300, 1, kNone).ok());
}

TEST_CASE("da equivariance: worked examples and random samples") {
  const auto tau = sl3_twisted();
  CHECK(check_da_equivariance(tau, {{0, 0, {0}, 0, {0}}}).ok());
  CHECK(check_da_equivariance(tau, {{1, 0, {1}, 2, {0}}}).ok());
  CHECK(check_da_equivariance(tau, random_derivation_samples(tau, 200, 9)).ok());
}
