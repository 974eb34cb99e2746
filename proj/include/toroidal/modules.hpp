#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "toroidal/gradings.hpp"
#include "toroidal/toroidal.hpp"

namespace toroidal {

/// (d0-degree, Z^n-degree or Lambda tag, h(0)-weight). Finite views reuse k for Lambda tags.
struct WeightKey {
  long k0 = 0;
  std::vector<long> k;
  Vector alpha;
  auto operator<=>(const WeightKey&) const = default;
  bool operator==(const WeightKey&) const = default;
};
nlohmann::json to_json(const WeightKey& key);
std::string to_string(const WeightKey& key);

using SparseVec = std::vector<std::pair<std::size_t, CycScalar>>;

/// PBW order on symbols: degree first, then kind and index.
bool pbw_less(const BasisSymbol& a, const BasisSymbol& b);

/// A Lie algebra with a basis of symbols, a triangular split and a weight grading.
class AlgebraView {
 public:
  virtual ~AlgebraView() = default;
  virtual int order() const = 0;
  virtual TauElement bracket(const BasisSymbol& a, const BasisSymbol& b) const = 0;
  virtual Part part(const BasisSymbol& s) const = 0;
  virtual WeightKey weight(const BasisSymbol& s) const = 0;
  /// A linear functional on weights; MINUS symbols have negative integer depth.
  virtual Rational key_depth(const WeightKey& key) const = 0;
  /// Symbols of one part with |Z^n-degree| <= kmax and |depth| <= dmax, in PBW order.
  virtual std::vector<BasisSymbol> symbols(Part p, long kmax, long dmax) const = 0;
  /// True when k is a Z^n-degree (unbounded); false when it is a Lambda tag.
  virtual bool loop_degrees() const = 0;

  WeightKey zero_key() const;
  WeightKey add(const WeightKey& a, const WeightKey& b) const;
  WeightKey sub(const WeightKey& a, const WeightKey& b) const;
  long depth(const BasisSymbol& s) const;

 protected:
  std::size_t k_size_ = 0;
  std::size_t alpha_size_ = 0;
  std::vector<long> modulus_;  // empty: no reduction of k
};

/// The full toroidal algebra split by one of the four decompositions.
class TauView : public AlgebraView {
 public:
  TauView(const ToroidalAlgebra& tau, CocycleConfig cfg, DecompositionKind kind, FiniteRootSystem delta0);
  int order() const override { return tau_.order(); }
  TauElement bracket(const BasisSymbol& a, const BasisSymbol& b) const override;
  Part part(const BasisSymbol& s) const override;
  WeightKey weight(const BasisSymbol& s) const override;
  Rational key_depth(const WeightKey& key) const override;
  std::vector<BasisSymbol> symbols(Part p, long kmax, long dmax) const override;
  bool loop_degrees() const override { return true; }

  const ToroidalAlgebra& tau() const { return tau_; }
  DecompositionKind kind() const { return kind_; }
  Rational height(const Vector& alpha) const;
  /// Weight of a d0 step in Affine depth units.
  long affine_scale() const { return scale_; }

 private:
  const ToroidalAlgebra& tau_;
  CocycleConfig cfg_;
  DecompositionKind kind_;
  FiniteRootSystem delta0_;
  long scale_ = 1;
};

/// Finite-dimensional Lie algebra on symbols Loop(i, 0, {}) with explicit weights.
struct FiniteLieData {
  int order = 1;
  std::vector<std::size_t> indices;  // symbol indices in use
  std::vector<std::string> labels;   // parallel to indices
  std::map<std::pair<std::size_t, std::size_t>, SparseVec> sc;  // keyed by symbol indices
  std::map<std::size_t, WeightKey> weight;
  std::map<std::size_t, Part> part;
  std::vector<long> modulus;  // Lambda orders for the k tags
  std::size_t alpha_size = 0;
  std::function<Rational(const WeightKey&)> depth;
};

class FiniteLieView : public AlgebraView {
 public:
  explicit FiniteLieView(FiniteLieData data);
  int order() const override { return d_.order; }
  TauElement bracket(const BasisSymbol& a, const BasisSymbol& b) const override;
  Part part(const BasisSymbol& s) const override;
  WeightKey weight(const BasisSymbol& s) const override;
  Rational key_depth(const WeightKey& key) const override { return d_.depth(key); }
  std::vector<BasisSymbol> symbols(Part p, long kmax, long dmax) const override;
  bool loop_degrees() const override { return false; }

  const FiniteLieData& data() const { return d_; }
  std::vector<BasisSymbol> all_symbols() const;

 private:
  FiniteLieData d_;
};

/// g(sigma_0) on adapted indices with residue k0 = 0; Lambda tags are the residues,
/// depth is the height in the base of Delta_0.
FiniteLieView gsigma0_view(const AdaptedBasis& ab, const FiniteRootSystem& delta0);
/// The same algebra with every Lambda tag dropped.
FiniteLieView forget_grading(const FiniteLieView& v);

/// A module for the zero part of some view; the view fixes how keys shift.
class TopModule {
 public:
  virtual ~TopModule() = default;
  virtual int order() const = 0;
  virtual std::size_t dim(const WeightKey& key) const = 0;
  /// Image of basis vector idx of `key` under s, at key + weight(s).
  virtual SparseVec act(const BasisSymbol& s, const WeightKey& key, std::size_t idx) const = 0;
  /// One key per (k0, h(0)-weight, tag) class; Z^n-degrees zeroed for loop modules.
  virtual std::vector<WeightKey> key_classes() const = 0;
};

/// Frozen module with finitely many nonzero weight spaces; a missing action entry is zero.
class WeightModule : public TopModule {
 public:
  explicit WeightModule(int order) : order_(order) {}
  int order() const override { return order_; }
  std::size_t dim(const WeightKey& key) const override;
  SparseVec act(const BasisSymbol& s, const WeightKey& key, std::size_t idx) const override;
  std::vector<WeightKey> key_classes() const override;

  void set_space(const WeightKey& key, std::size_t dim) { spaces_[key] = dim; }
  void set_action(const BasisSymbol& s, const WeightKey& key, const WeightKey& target, Matrix m);
  const std::map<WeightKey, std::size_t>& spaces() const { return spaces_; }
  std::size_t total_dim() const;
  /// Matrix of s on `key` (zero when absent); rows follow dim(target).
  Matrix matrix(const BasisSymbol& s, const WeightKey& key, const WeightKey& target) const;

 private:
  int order_;
  std::map<WeightKey, std::size_t> spaces_;
  std::map<std::pair<BasisSymbol, WeightKey>, std::pair<WeightKey, Matrix>> action_;
};

/// Finite-dimensional gl_n module: E[i*n+j] is the matrix of E_ij, d0 the d0-operator.
struct GlModule {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<Matrix> E;
  Matrix d0;
};
GlModule gl1_scalar(int order, const CycScalar& c, const CycScalar& d0);
/// p-th symmetric power of the natural gl_2 module, basis x^(p-i) y^i.
GlModule gl2_sym_power(int order, unsigned p, const CycScalar& d0);
GlModule gl_from_json(const nlohmann::json& j, int order, std::size_t n, const CycScalar& d0shift);
/// gl_n relations and that d0 commutes with every E_ij.
Report validate_gl(const GlModule& w1);

struct ModuleParams {
  CycScalar C0;
  std::vector<CycScalar> psi;  // psi(K_0), ..., psi(K_n)
  CycScalar d0shift;
  std::vector<CycScalar> alpha_shift;
  std::vector<CycScalar> lambda_shift;
  GlModule w1;
  std::vector<Rational> w2_labels;  // Dynkin labels in the base of Delta_0
  std::vector<long> w2_grade;       // Lambda tag of W2
};
/// {"C0", "psi", "d0shift", "alpha_shift", "lambda_shift", "W1", "W2": {"labels", "grade"}}.
ModuleParams params_from_json(const nlohmann::json& j, int order, std::size_t n);
/// Central character gate, C0 != 0, W1 validity; flags C0 = -h^vee.
Report check_params(const ModuleParams& p, int dual_coxeter);

/// h(0)-weight with the given Dynkin labels.
Vector weight_from_labels(const FiniteRootSystem& delta0, const std::vector<Rational>& labels, int order);
/// One-dimensional a-module: h(0) acts by mu, the rest of a by zero.
WeightModule w2_top(const AdaptedBasis& ab, const Vector& mu, const std::vector<long>& grade);

/// T' (over tau^0, W2 an a-module) or S' (over tau_0, W2 = W2(sigma_0)).
class LoopModule : public TopModule {
 public:
  LoopModule(const ToroidalAlgebra& tau, const ModuleParams& params, const WeightModule& w2, bool full_gsigma0);
  int order() const override { return tau_.order(); }
  std::size_t dim(const WeightKey& key) const override;
  SparseVec act(const BasisSymbol& s, const WeightKey& key, std::size_t idx) const override;
  std::vector<WeightKey> key_classes() const override;

  /// Whether s lies in the algebra this module is defined over.
  bool acts(const BasisSymbol& s) const;
  const WeightModule& w2() const { return w2_; }
  bool is_sprime() const { return full_; }

 private:
  WeightKey w2_key(const WeightKey& key) const;
  const ToroidalAlgebra& tau_;
  const ModuleParams& p_;
  const WeightModule& w2_;
  bool full_;
};

/// Every class with its Z^n-degree replaced by each point of the box |k_i| <= kbox.
std::vector<WeightKey> box_keys(const std::vector<WeightKey>& classes, long kbox);

/// Matrix of s from `key` to key + weight(s).
Matrix action_matrix(const TopModule& m, const AlgebraView& view, const BasisSymbol& s, const WeightKey& key);
/// Action of a combination of symbols on a vector of `key`.
Vector act_element(const TopModule& m, const AlgebraView& view, const TauElement& x, const WeightKey& key,
                   const Vector& v);

/// action([x,y]) = [action(x), action(y)] on every basis vector of every listed key.
Report check_module_axioms(const TopModule& m, const AlgebraView& view, const std::vector<BasisSymbol>& symbols,
                           const std::vector<WeightKey>& keys, std::size_t pairs, std::uint64_t seed);

/// Every nonzero vector on `keys` generates, inside the window, a submodule containing
/// the cyclic weight space, and that space is irreducible under its return algebra.
Report window_irreducibility(const TopModule& m, const AlgebraView& view, const std::vector<BasisSymbol>& symbols,
                             const std::vector<WeightKey>& keys, const WeightKey& cyclic);

/// Joint kernel of the given symbols on V_key.
std::vector<Vector> singular_vectors(const TopModule& m, const AlgebraView& view,
                                     const std::vector<BasisSymbol>& plus, const WeightKey& key);

}  // namespace toroidal
