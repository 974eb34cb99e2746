#include <doctest.h>

#include "toroidal/lie_algebra.hpp"

using namespace toroidal;

TEST_CASE("chevalley: dimensions and dual Coxeter numbers") {
  const auto a1 = build_chevalley("A1");
  CHECK(a1.dim == 3);
  CHECK(a1.dual_coxeter == 2);
  const auto a2 = build_chevalley("A2");
  CHECK(a2.dim == 8);
  CHECK(a2.dual_coxeter == 3);
  const auto b2 = build_chevalley("B2");
  CHECK(b2.dim == 10);
  CHECK(b2.dual_coxeter == 3);
  CHECK_THROWS(build_chevalley("E8"));
}

TEST_CASE("chevalley: structure constants are integral and the algebra validates") {
  for (const char* t : {"A1", "A2", "B2"}) {
    const auto alg = build_chevalley(t);
    CHECK(validate_algebra(alg).ok());
    for (const auto& row : alg.sc)
      for (const auto& v : row)
        for (const auto& c : v) CHECK(c.rational().get_den() == 1);
    const auto rs = alg.root_system();
    CHECK(rs.type() == t);
    Rational longest = 0;
    for (const auto& r : rs.roots()) longest = std::max(longest, rs.inner(r, r).rational());
    CHECK(longest == 2);
  }
}

TEST_CASE("automorphisms: worked examples") {
  const auto sl2 = build_chevalley("A1");
  CHECK(validate_automorphisms(sl2, {identity_automorphism(sl2)}).ok());
  auto chev = negative_transpose(sl2);
  CHECK(validate_automorphisms(sl2, {chev}).ok());
  // e -> -f, h -> -h, f -> -e
  CHECK(chev.matrix(2, 0) == CycScalar(1, -1L));
  CHECK(chev.matrix(1, 1) == CycScalar(1, -1L));
  auto bad = identity_automorphism(sl2);
  bad.order = 2;
  const auto rep = validate_automorphisms(sl2, {bad});
  CHECK_FALSE(rep.ok());
  REQUIRE(rep.find("automorphism[0].order") != nullptr);
  CHECK(rep.find("automorphism[0].order")->message == "order not minimal");
}

TEST_CASE("automorphisms: non-commuting pair is reported with a witness") {
  const auto sl3 = build_chevalley("A2", 3);
  const auto t = negative_transpose(sl3);
  const auto inner = inner_diagonal(sl3, {1, 0, 0}, 3);
  CHECK(inner.order == 3);
  const auto rep = validate_automorphisms(sl3, {t, inner});
  CHECK(rep.has_failure("commute[0,1]"));
  CHECK_FALSE(rep.find("commute[0,1]")->witness.is_null());
}

TEST_CASE("automorphisms: broken bracket and form are reported") {
  const auto sl2 = build_chevalley("A1");
  FiniteAutomorphism scale{Matrix::identity(1, 3).scaled(CycScalar(1, -1L)), 2, "minus"};
  const auto rep = validate_automorphisms(sl2, {scale});
  CHECK(rep.has_failure("automorphism[0].bracket"));
  CHECK_FALSE(rep.has_failure("automorphism[0].form"));
}
