#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toroidal/linalg.hpp"
#include "toroidal/report.hpp"
#include "toroidal/root_system.hpp"

namespace toroidal {

/// Finite-dimensional simple Lie algebra over Q(z_N) in a fixed basis.
struct SimpleLieAlgebraData {
  std::string name;
  int order = 1;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  /// sc[i][j] = coordinates of [b_i, b_j].
  std::vector<std::vector<Vector>> sc;
  Matrix form;
  /// Indices of the basis vectors spanning the Cartan subalgebra h.
  std::vector<std::size_t> cartan;
  int dual_coxeter = 0;
  /// Matrix realization of each basis vector, when the algebra came from one.
  std::vector<Matrix> realization;

  Vector basis_vector(std::size_t i) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  CycScalar pair(const Vector& x, const Vector& y) const;
  /// Matrix of ad(x) on the basis.
  Matrix ad(const Vector& x) const;
  Matrix killing() const;
  /// Roots of (g, h) in coordinates alpha(h_i), with the form-induced inner product.
  FiniteRootSystem root_system() const;
  /// Same algebra over a larger cyclotomic field (order must be a multiple).
  SimpleLieAlgebraData embed(int new_order) const;
};

struct FiniteAutomorphism {
  Matrix matrix;
  int order = 1;
  std::string name;
};

/// Chevalley basis for A1, A2, B2 (positive root vectors, simple coroots,
/// negative root vectors). The form gives long roots square length 2.
SimpleLieAlgebraData build_chevalley(const std::string& cartan_type, int order = 1);

/// Raw import: {"labels", "structure_constants": [[i,j,k,"c"],...], "form", "cartan"}.
/// ad(h) must act diagonally on the given basis.
SimpleLieAlgebraData algebra_from_json(const nlohmann::json& j, int order);

/// Structure constants, form invariance, nondegeneracy and a diagonal Cartan action.
Report validate_algebra(const SimpleLieAlgebraData& alg);

/// Matrix of the linear map x -> f(x) on the basis of a realized algebra.
Matrix induced_map(const SimpleLieAlgebraData& alg, const std::function<Matrix(const Matrix&)>& f);

/// x -> -x^t
FiniteAutomorphism negative_transpose(const SimpleLieAlgebraData& alg);
/// x -> -J x^t J with J the antidiagonal permutation matrix.
FiniteAutomorphism negative_j_transpose(const SimpleLieAlgebraData& alg);
/// Ad(diag(z_N^{e_1}, ..., z_N^{e_r})) on the realization.
FiniteAutomorphism inner_diagonal(const SimpleLieAlgebraData& alg, const std::vector<long>& exponents,
                                  int order);
FiniteAutomorphism identity_automorphism(const SimpleLieAlgebraData& alg);

/// Commutation, exact orders, bracket and form invariance. Never throws on a
/// mathematical violation.
Report validate_automorphisms(const SimpleLieAlgebraData& alg, const std::vector<FiniteAutomorphism>& autos);

}  // namespace toroidal
