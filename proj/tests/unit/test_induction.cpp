#include <doctest.h>

#include "toroidal/induction.hpp"

using namespace toroidal;

namespace {

std::vector<std::size_t> dims_by_depth(const WeightModule& m, const AlgebraView& view, const Vector& top_alpha) {
  std::map<long, std::size_t> by;
  const Rational t = view.key_depth(WeightKey{0, {}, top_alpha});
  for (const auto& [k, d] : m.spaces()) {
    const Rational q = t - view.key_depth(k);
    by[q.get_num().get_si()] += d;
  }
  std::vector<std::size_t> out;
  for (const auto& [q, d] : by) out.push_back(d);
  return out;
}

struct Sl2 {
  SimpleLieAlgebraData alg = build_chevalley("A1");
  EigenDecomposition dec = eigen_decompose(alg, {identity_automorphism(alg)});
  AssumptionOutcome out = check_assumptions(alg, dec, A1Convention::Off);
  AdaptedBasis ab = adapted_basis(alg, dec);
};

}  // namespace

TEST_CASE("finite_dim_irrep: sl2 dimensions follow the Weyl formula") {
  const auto sl2 = build_chevalley("A1");
  CHECK(finite_dim_irrep(sl2, {0}).total_dim() == 1);
  CHECK(finite_dim_irrep(sl2, {1}).total_dim() == 2);
  CHECK(finite_dim_irrep(sl2, {2}).total_dim() == 3);
  CHECK(finite_dim_irrep(sl2, {5}).total_dim() == 6);
}

TEST_CASE("finite_dim_irrep: A2 and B2 dimensions follow the Weyl formula") {
  const auto sl3 = build_chevalley("A2");
  CHECK(finite_dim_irrep(sl3, {1, 0}).total_dim() == 3);
  CHECK(finite_dim_irrep(sl3, {1, 1}).total_dim() == 8);
  CHECK(finite_dim_irrep(sl3, {2, 0}).total_dim() == 6);
  const auto so5 = build_chevalley("B2");
  // Weyl: dims 4 and 5 for the two fundamental weights, 10 for the adjoint
  std::vector<std::size_t> fundamentals{finite_dim_irrep(so5, {1, 0}).total_dim(),
                                        finite_dim_irrep(so5, {0, 1}).total_dim()};
  std::sort(fundamentals.begin(), fundamentals.end());
  CHECK(fundamentals == std::vector<std::size_t>{4, 5});
}

TEST_CASE("finite_dim_irrep: a non-dominant weight overflows the cap") {
  const auto sl2 = build_chevalley("A1");
  CHECK_THROWS_AS(finite_dim_irrep(sl2, {-1}, 8), WindowError);
}

TEST_CASE("induction: sl2 Verma and its quotient at weight 2") {
  Sl2 s;
  const FiniteLieView view = gsigma0_view(s.ab, *s.out.delta0);
  const Vector mu = weight_from_labels(*s.out.delta0, {2}, 1);
  const WeightModule top = w2_top(s.ab, mu, {});
  InducedModule m(view, top, InductionWindow{0, 4});
  const auto keys = m.window_keys(0);
  REQUIRE(keys.size() == 5);
  std::vector<std::size_t> verma, quotient;
  for (auto it = keys.rbegin(); it != keys.rend(); ++it) {
    verma.push_back(m.induced_dim(*it));
    quotient.push_back(m.quotient_dim(*it));
  }
  CHECK(verma == std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(quotient == std::vector<std::size_t>{1, 1, 1, 0, 0});
}

TEST_CASE("induction: empty MINUS window returns the top") {
  Sl2 s;
  const FiniteLieView view = gsigma0_view(s.ab, *s.out.delta0);
  const WeightModule top = w2_top(s.ab, weight_from_labels(*s.out.delta0, {3}, 1), {});
  InducedModule m(view, top, InductionWindow{0, 0});
  CHECK(m.minus_ops().empty());
  const auto keys = m.window_keys(0);
  REQUIRE(keys.size() == 1);
  CHECK(m.quotient_dim(keys[0]) == 1);
}

TEST_CASE("irreducible quotient: module axioms, singular space and irreducibility") {
  Sl2 s;
  const FiniteLieView view = gsigma0_view(s.ab, *s.out.delta0);
  const WeightModule adj = finite_dim_irrep(s.alg, {2});
  const auto keys = adj.key_classes();
  CHECK(check_module_axioms(adj, view, view.all_symbols(), keys, 30, 5).ok());
  std::size_t singular = 0;
  for (const auto& k : keys) singular += singular_vectors(adj, view, view.symbols(Part::Plus, 0, 10), k).size();
  CHECK(singular == 1);
  CHECK(window_irreducibility(adj, view, view.all_symbols(), keys, keys.back()).ok());
  const auto by = dims_by_depth(adj, view, keys.back().alpha);
  CHECK(by == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("window irreducibility: a reducible module is caught") {
  Sl2 s;
  const FiniteLieView view = gsigma0_view(s.ab, *s.out.delta0);
  const WeightModule triv = finite_dim_irrep(s.alg, {0});
  const WeightModule adj = finite_dim_irrep(s.alg, {2});
  // direct sum C + adjoint: the trivial summand at weight 0 never reaches the highest weight
  WeightModule sum(1);
  for (const auto& [k, d] : adj.spaces()) sum.set_space(k, d + triv.dim(k));
  for (const auto& x : view.all_symbols())
    for (const auto& [k, d] : adj.spaces()) {
      const WeightKey t = view.add(k, view.weight(x));
      if (sum.dim(t) == 0) continue;
      Matrix big(1, sum.dim(t), sum.dim(k));
      const Matrix a = adj.matrix(x, k, t);
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) big(r, c) = a(r, c);
      sum.set_action(x, k, t, big);
    }
  const auto keys = sum.key_classes();
  CHECK(check_module_axioms(sum, view, view.all_symbols(), keys, 30, 5).ok());
  WeightKey top = keys.back();
  CHECK_FALSE(window_irreducibility(sum, view, view.all_symbols(), keys, top).ok());
}
