#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toroidal/linalg.hpp"

namespace toroidal {

/// Sign of the first nonzero coordinate (coordinates must be rational).
/// This lexicographic order is the fixed positivity used everywhere.
int lex_sign(const Vector& v);
/// Deterministic comparison of weight vectors, for ordering only.
bool weight_less(const Vector& a, const Vector& b);

/// A finite set of nonzero roots in coordinates alpha(h_1..h_r), together with
/// the inner product induced by the invariant form on the Cartan subalgebra.
class FiniteRootSystem {
 public:
  FiniteRootSystem() = default;
  FiniteRootSystem(std::vector<Vector> roots, Matrix gram_inverse);

  int order() const { return gram_inverse_.order(); }
  std::size_t rank() const { return simple_.size(); }
  std::size_t coordinate_dim() const { return gram_inverse_.rows(); }
  const std::vector<Vector>& roots() const { return roots_; }
  const std::vector<Vector>& positive_roots() const { return positive_; }
  const std::vector<Vector>& simple_roots() const { return simple_; }
  CycScalar inner(const Vector& a, const Vector& b) const;

  bool irreducible() const { return irreducible_; }
  bool reduced() const { return reduced_; }
  /// Dynkin type such as "A1", "B2", "G2"; "reducible" or "non-reduced" otherwise.
  const std::string& type() const { return type_; }
  bool is_type_b() const;
  bool contains(const Vector& v) const;
  /// Short roots (all roots when there is a single length).
  std::vector<Vector> short_roots() const;
  /// Coordinates in the simple-root basis, when alpha lies in their span.
  std::optional<std::vector<Rational>> simple_coordinates(const Vector& alpha) const;
  /// Sum of simple-root coordinates.
  std::optional<Rational> height(const Vector& alpha) const;

 private:
  void classify();

  std::vector<Vector> roots_;
  Matrix gram_inverse_;
  std::vector<Vector> positive_;
  std::vector<Vector> simple_;
  bool irreducible_ = false;
  bool reduced_ = false;
  std::string type_;
};

/// The enlarged root set (with zero): doubled short roots are added for type B,
/// and for type A1 when `a1_as_b1` is set. Throws on reducible input.
std::vector<Vector> enlarge_roots(const FiniteRootSystem& delta0, bool a1_as_b1);

}  // namespace toroidal
