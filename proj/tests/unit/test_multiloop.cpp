#include <doctest.h>

#include "toroidal/multiloop.hpp"

using namespace toroidal;

namespace {

std::size_t dim_of(const EigenDecomposition& d, long k0, std::vector<long> k) {
  return d.piece_dim(Residue{k0, std::move(k)});
}

void check_grading(const SimpleLieAlgebraData& alg, const EigenDecomposition& dec) {
  std::size_t total = 0;
  for (const auto& [r, v] : dec.pieces) total += v.size();
  CHECK(total == alg.dim);
  for (const auto& [r, v] : dec.pieces)
    for (const auto& [s, w] : dec.pieces)
      for (const auto& x : v)
        for (const auto& y : w) {
          Residue sum{(r.k0 + s.k0) % dec.m0, {}};
          for (std::size_t i = 0; i < dec.m.size(); ++i) sum.k.push_back((r.k[i] + s.k[i]) % dec.m[i]);
          const auto it = dec.pieces.find(sum);
          const Vector b = alg.bracket(x, y);
          if (it == dec.pieces.end()) CHECK(is_zero(b));
          else CHECK(span_contains(it->second, b, alg.order, alg.dim));
          if (!(sum == dec.zero_residue())) CHECK(alg.pair(x, y).is_zero());
        }
}

}  // namespace

TEST_CASE("eigen_decompose: trivial automorphisms on sl2") {
  const auto sl2 = build_chevalley("A1");
  const auto dec = eigen_decompose(sl2, {identity_automorphism(sl2), identity_automorphism(sl2)});
  CHECK(dec.pieces.size() == 1);
  CHECK(dim_of(dec, 0, {0}) == 3);
  check_grading(sl2, dec);
  const auto out = check_assumptions(sl2, dec);
  CHECK(out.ok());
  CHECK(out.delta0->type() == "A1");
  CHECK_FALSE(out.a1_as_b1);
  const auto a = subalgebra_a(dec);
  CHECK(a.dim_a() == 1);
  CHECK(a.dim_gsigma0() == 3);
}

TEST_CASE("eigen_decompose: sl3 with x -> -x^t") {
  const auto sl3 = build_chevalley("A2", 2);
  const auto dec = eigen_decompose(sl3, {negative_transpose(sl3), identity_automorphism(sl3)});
  CHECK(dim_of(dec, 0, {0}) == 3);
  CHECK(dim_of(dec, 1, {0}) == 5);
  check_grading(sl3, dec);
  // The fixed algebra is the split-free so3: it meets the diagonal Cartan in zero.
  CHECK(dec.h0.empty());
}

TEST_CASE("assumptions: sl3 with the antidiagonal transpose passes with a doubled A1") {
  const auto sl3 = build_chevalley("A2", 2);
  const auto dec = eigen_decompose(sl3, {negative_j_transpose(sl3), identity_automorphism(sl3)});
  CHECK(dim_of(dec, 0, {0}) == 3);
  CHECK(dim_of(dec, 1, {0}) == 5);
  check_grading(sl3, dec);
  const auto out = check_assumptions(sl3, dec);
  CHECK(out.ok());
  CHECK(out.dim_g00 == 3);
  CHECK(out.delta0->type() == "A1");
  CHECK(out.a1_as_b1);
  CHECK_FALSE(check_assumptions(sl3, dec, A1Convention::Off).ok());
  const auto a = subalgebra_a(dec);
  CHECK(a.dim_gsigma0() == 3);
  CHECK(a.dim_a() == 1);
  CHECK(a.plus.size() == 1);
  CHECK(a.minus.size() == 1);
}

TEST_CASE("assumptions: sl2 with the Chevalley involution fails clause 1") {
  const auto sl2 = build_chevalley("A1", 2);
  const auto dec = eigen_decompose(sl2, {negative_transpose(sl2), identity_automorphism(sl2)});
  CHECK(dim_of(dec, 0, {0}) == 1);
  const auto out = check_assumptions(sl2, dec);
  CHECK(out.report.has_failure("assumption.1"));
}

TEST_CASE("assumptions: B2 untwisted keeps doubled short roots out") {
  const auto so5 = build_chevalley("B2");
  const auto dec = eigen_decompose(so5, {identity_automorphism(so5)});
  const auto out = check_assumptions(so5, dec);
  // Type B needs the doubled short roots, which the adjoint weights do not contain.
  CHECK(out.report.has_failure("assumption.3"));
  CHECK(out.delta0->type() == "B2");
}

TEST_CASE("eigen_decompose: order-4 inner automorphism uses the cyclotomic field") {
  const auto sl2 = build_chevalley("A1", 4);
  const auto s1 = inner_diagonal(sl2, {1, 0}, 4);
  CHECK(s1.order == 4);
  const auto dec = eigen_decompose(sl2, {identity_automorphism(sl2), s1});
  CHECK(dim_of(dec, 0, {0}) == 1);
  CHECK(dim_of(dec, 0, {1}) == 1);
  CHECK(dim_of(dec, 0, {3}) == 1);
  check_grading(sl2, dec);
}

TEST_CASE("adapted basis: constants respect residues and weights") {
  const auto sl3 = build_chevalley("A2", 2);
  const auto dec = eigen_decompose(sl3, {negative_j_transpose(sl3), identity_automorphism(sl3)});
  const auto ab = adapted_basis(sl3, dec);
  CHECK(ab.dim == 8);
  CHECK(ab.h0_dim() == 1);
  for (std::size_t u = 0; u < ab.dim; ++u)
    for (std::size_t v = 0; v < ab.dim; ++v)
      for (const auto& [w, c] : ab.sc[u][v]) {
        CHECK(ab.residue[w].k0 == (ab.residue[u].k0 + ab.residue[v].k0) % 2);
        Vector sum = ab.alpha[u];
        sum[0] += ab.alpha[v][0];
        CHECK(sum == ab.alpha[w]);
      }
}
