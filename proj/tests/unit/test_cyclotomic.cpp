#include <doctest.h>

#include <random>

#include "toroidal/cyclotomic.hpp"

using namespace toroidal;

TEST_CASE("cyclotomic: worked examples") {
  CHECK(CycScalar(1, 1L) + CycScalar(1, 0L) == CycScalar(1, 1L));
  const auto i = CycScalar::root_of_unity(4, 1);
  CHECK(i * i == CycScalar(4, -1L));
  const auto w = CycScalar::root_of_unity(3, 1);
  CHECK(w + CycScalar::root_of_unity(3, 2) == CycScalar(3, -1L));
  CHECK(CycScalar::root_of_unity(1, 5) == CycScalar(1, 1L));
  CHECK(CycScalar::root_of_unity(2, 1) == CycScalar(2, -1L));
  CHECK(CycScalar::root_of_unity(6, 3) == CycScalar(6, -1L));
}

TEST_CASE("cyclotomic: coefficient length is the totient") {
  for (int n : {1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15}) {
    CHECK(CycScalar(n, 3L).coeffs().size() == static_cast<std::size_t>(euler_phi(n)));
    CHECK(CycScalar::root_of_unity(n, 7).coeffs().size() == static_cast<std::size_t>(euler_phi(n)));
  }
}

TEST_CASE("cyclotomic: root_of_unity periodicity and order") {
  for (int n : {1, 2, 3, 4, 6, 8, 12}) {
    for (int k = 0; k < n; ++k) {
      CHECK(CycScalar::root_of_unity(n, k).pow(n).is_one());
      CHECK(CycScalar::root_of_unity(n, k) == CycScalar::root_of_unity(n, k + 3 * n));
      CHECK(CycScalar::root_of_unity(n, k) == CycScalar::root_of_unity(n, k - n));
    }
  }
}

TEST_CASE("cyclotomic: errors") {
  CHECK_THROWS_AS(CycScalar(3, 1L) / CycScalar(3, 0L), FieldError);
  CHECK_THROWS_AS(CycScalar(3, 1L) + CycScalar(4, 1L), FieldError);
  CHECK_THROWS_AS(CycScalar(4, 1L).embed(6), FieldError);
}

namespace {
CycScalar random_scalar(std::mt19937_64& rng, int n) {
  std::vector<Rational> c;
  for (int j = 0; j < euler_phi(n); ++j)
    c.emplace_back(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
  return CycScalar(n, c);
}
}  // namespace

TEST_CASE("cyclotomic: field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int n : {3, 4, 5, 8, 12}) {
    for (int t = 0; t < 20; ++t) {
      const auto a = random_scalar(rng, n), b = random_scalar(rng, n), c = random_scalar(rng, n);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) * c == a * c + b * c);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("cyclotomic: embedding commutes with operations") {
  std::mt19937_64 rng(11);
  for (auto [m, n] : {std::pair{2, 4}, {3, 12}, {4, 12}, {1, 6}}) {
    for (int t = 0; t < 10; ++t) {
      const auto a = random_scalar(rng, m), b = random_scalar(rng, m);
      CHECK((a * b).embed(n) == a.embed(n) * b.embed(n));
      CHECK((a + b).embed(n) == a.embed(n) + b.embed(n));
      if (!b.is_zero()) CHECK((a / b).embed(n) == a.embed(n) / b.embed(n));
    }
    CHECK(CycScalar::root_of_unity(m, 1).embed(n) == CycScalar::root_of_unity(n, n / m));
  }
}

TEST_CASE("cyclotomic: json round trip") {
  std::mt19937_64 rng(3);
  for (int n : {1, 5, 12}) {
    const auto a = random_scalar(rng, n);
    CHECK(from_json_exact(to_json(a)) == a);
    CHECK(to_json(from_json_exact(to_json(a))).dump() == to_json(a).dump());
  }
  CHECK(scalar_from_json("-3/4", 4) == CycScalar(4, Rational(-3, 4)));
  CHECK(scalar_from_json(5, 1) == CycScalar(1, 5L));
}
