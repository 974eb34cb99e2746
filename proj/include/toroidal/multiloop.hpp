#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/lie_algebra.hpp"

namespace toroidal {

/// (k0 mod m0, k_i mod m_i): a class in Lambda_0 x Lambda.
struct Residue {
  long k0 = 0;
  std::vector<long> k;
  auto operator<=>(const Residue&) const = default;
  bool operator==(const Residue&) const = default;
};

struct EigenPiece {
  Residue residue;
  Vector alpha;  // h(0)-weight, coordinates on the basis of h(0)
  std::vector<Vector> basis;
};

/// Simultaneous eigenspaces g(k0, k) of sigma_0..sigma_n and their refinement by h(0)-weights.
struct EigenDecomposition {
  int order = 1;
  long m0 = 1;
  std::vector<long> m;
  std::map<Residue, std::vector<Vector>> pieces;
  /// Basis of h(0) = h intersect g(0,0), as vectors of g.
  std::vector<Vector> h0;
  /// Refined pieces ordered by (residue, alpha).
  std::vector<EigenPiece> refined;

  std::size_t n() const { return m.size(); }
  std::size_t piece_dim(const Residue& r) const;
  Residue zero_residue() const { return Residue{0, std::vector<long>(m.size(), 0)}; }
  /// Canonical representative of (k0, k) modulo (m0, m).
  Residue residue_of(long k0, const std::vector<long>& k) const;
};

/// autos[0] is sigma_0, autos[1..n] are sigma_1..sigma_n. Throws if the pieces
/// do not add up to g (impossible for genuine finite-order automorphisms).
EigenDecomposition eigen_decompose(const SimpleLieAlgebraData& alg, const std::vector<FiniteAutomorphism>& autos);

enum class A1Convention { Auto, On, Off };
A1Convention parse_a1_convention(const std::string& s);
std::string to_string(A1Convention c);

struct AssumptionOutcome {
  Report report;
  std::size_t dim_g00 = 0;
  std::optional<FiniteRootSystem> delta0;
  /// Whether the doubled-root branch was used for type A1.
  bool a1_as_b1 = false;
  bool ok() const { return report.ok(); }
};

/// Clause (1): g(0,0) simple. Clause (2): h(0) a Cartan subalgebra of g(0,0)
/// inside h. Clause (3): the h(0)-weights of g equal the enlarged root set.
AssumptionOutcome check_assumptions(const SimpleLieAlgebraData& alg, const EigenDecomposition& dec,
                                    A1Convention a1 = A1Convention::Auto);

/// g(sigma_0) and a, with Lambda-gradings and the split by the sign of the h(0)-weight.
struct SubalgebraA {
  std::vector<EigenPiece> gsigma0;  // pieces with k0 = 0, all k
  std::vector<EigenPiece> a;        // alpha = 0
  std::vector<EigenPiece> plus;     // alpha > 0
  std::vector<EigenPiece> minus;    // alpha < 0
  std::size_t dim_gsigma0() const;
  std::size_t dim_a() const;
};
SubalgebraA subalgebra_a(const EigenDecomposition& dec);

/// g in a basis adapted to the refined decomposition; this is the basis used
/// for Loop symbols.
struct AdaptedBasis {
  int order = 1;
  std::size_t dim = 0;
  long m0 = 1;
  std::vector<long> m;
  Matrix to_standard;  // columns: adapted basis vectors in the original basis
  Matrix from_standard;
  std::vector<Residue> residue;
  std::vector<Vector> alpha;
  std::vector<std::string> labels;
  /// sc[u][v]: sparse coordinates of [b_u, b_v].
  std::vector<std::vector<std::vector<std::pair<std::size_t, CycScalar>>>> sc;
  Matrix form;
  /// Adapted indices spanning h(0), in order of the h(0) basis.
  std::vector<std::size_t> h0_index;
  std::size_t h0_dim() const { return h0_index.size(); }
  std::size_t n() const { return m.size(); }
  /// Whether (k0, k) matches the residue of basis index v.
  bool admits(std::size_t v, long k0, const std::vector<long>& k) const;
};
AdaptedBasis adapted_basis(const SimpleLieAlgebraData& alg, const EigenDecomposition& dec);

long positive_mod(long a, long m);

}  // namespace toroidal
