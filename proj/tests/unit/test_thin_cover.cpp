#include <doctest.h>

#include "toroidal/thin_cover.hpp"

using namespace toroidal;

namespace {
bool passed(const Report& r, const std::string& clause) {
  const auto* e = r.find(clause);
  return e && e->status == Status::Pass;
}
}  // namespace

TEST_CASE("decompose_module: commuting involution splits into eigenlines") {
  Matrix z(1, 2, 2);
  z(0, 1) = CycScalar(1, 1L);
  z(1, 0) = CycScalar(1, 1L);
  const auto d = decompose_module({z}, 1, 2);
  CHECK(d.split);
  CHECK(d.summands.size() == 2);
}

TEST_CASE("decompose_module: N + N for gl2 gives two copies") {
  const auto ex = sl3_gl2_example();
  std::vector<Matrix> ops;
  const WeightKey key{0, {}, {}};
  for (const auto& x : ex.g.all_symbols()) {
    if (ex.g.part(x) != Part::Zero) continue;
    const Matrix a = ex.n.matrix(x, key, key);
    Matrix big(1, 4, 4);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) big(r, c) = big(r + 2, c + 2) = a(r, c);
    ops.push_back(big);
  }
  const auto d = decompose_module(ops, 1, 4);
  CHECK(d.split);
  REQUIRE(d.summands.size() == 2);
  CHECK(d.summands[0].size() == 2);
  CHECK(d.summands[1].size() == 2);
}

TEST_CASE("thin cover: Heisenberg with z odd lifts and restricts") {
  const auto ex = heisenberg_example();
  const Report r = thin_cover_lift_restrict(ex.g, ex.n, ex.cover, 3);
  INFO(r.to_json().dump(1));
  CHECK(r.ok());
  CHECK(passed(r, "thin_cover.decomposition"));
  CHECK(passed(r, "thin_cover.minimal"));
  CHECK(passed(r, "thin_cover.axiom1"));
  CHECK(passed(r, "thin_cover.axiom2"));
  CHECK(passed(r, "thin_cover.lift_split"));
  CHECK(passed(r, "thin_cover.restrict"));
  // N_gr = N + (z = -1)
  CHECK(r.find("thin_cover.decomposition")->witness["summand_dims"] == nlohmann::json{1, 1});
}

TEST_CASE("thin cover: sl3 over gl2, two lines e1 | e2") {
  const auto ex = sl3_gl2_example();
  const Report r = thin_cover_lift_restrict(ex.g, ex.n, ex.cover, 2);
  INFO(r.to_json().dump(1));
  CHECK(r.ok());
  // L(N) is the natural sl3 module: levels of dimension 2 and 1
  const auto table = r.find("thin_cover.axiom1")->witness;
  std::vector<std::size_t> dims;
  for (const auto& row : table) dims.push_back(row["dim_L_N"]);
  CHECK(dims == std::vector<std::size_t>{2, 1});
}

TEST_CASE("thin cover: a non-minimal family has N twice and is flagged") {
  const auto ex = sl3_gl2_example();
  const Vector e1{CycScalar(1, 1L), CycScalar(1)}, e2{CycScalar(1), CycScalar(1, 1L)};
  const CoverFamily both{{{0}, {e1, e2}}, {{1}, {e1, e2}}};
  const Report r = thin_cover_lift_restrict(ex.g, ex.n, both, 2);
  INFO(r.to_json().dump(1));
  CHECK(passed(r, "thin_cover.decomposition"));
  CHECK(r.find("thin_cover.decomposition")->witness["summand_dims"] == nlohmann::json{2, 2});
  CHECK(r.has_failure("thin_cover.minimal"));
  CHECK(passed(r, "thin_cover.restrict"));
}

TEST_CASE("thin cover: a family that is not stable is rejected") {
  const auto ex = sl3_gl2_example();
  const Vector e1{CycScalar(1, 1L), CycScalar(1)}, e2{CycScalar(1), CycScalar(1, 1L)};
  const Report r = thin_cover_lift_restrict(ex.g, ex.n, CoverFamily{{{0}, {e1}}, {{1}, {e1}}}, 2);
  CHECK(r.has_failure("thin_cover.family"));
}

TEST_CASE("thin cover: trivial Lambda keeps the whole module") {
  const auto ex = sl3_gl2_example();
  const auto& d = ex.g.data();
  std::vector<Matrix> basis;
  // regrade with every tag zero
  FiniteLieData flat = d;
  for (auto& [i, w] : flat.weight) w.k = {0};
  const FiniteLieView g(flat);
  const Vector e1{CycScalar(1, 1L), CycScalar(1)}, e2{CycScalar(1), CycScalar(1, 1L)};
  const Report r = thin_cover_lift_restrict(g, ex.n, CoverFamily{{{0}, {e1, e2}}}, 2);
  INFO(r.to_json().dump(1));
  CHECK(r.ok());
}
