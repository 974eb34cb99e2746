#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "toroidal/modules.hpp"

namespace toroidal {

/// Raised when a computation would need weights or symbols beyond the window.
class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InductionWindow {
  long kmax = 2;  // |Z^n-degree| of every MINUS and PLUS symbol used
  long dmax = 2;  // depth below the top
};

/// PBW monomial x_1 ... x_p (x) v, x_1 <= ... <= x_p in pbw order, v a top basis vector.
struct Monomial {
  std::vector<BasisSymbol> ops;
  WeightKey top;
  std::size_t idx = 0;
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};
using MVec = std::map<Monomial, CycScalar>;

/// Induced module U(g) (x) top and its irreducible quotient L.
///
/// A vector lies in the radical iff every word of PLUS symbols carries it to zero in
/// the top. L_key is computed as the image of a spanning set under the map
/// G(v) = (F(p v))_p, p over the PLUS symbols of the window, where F are the
/// coordinates already fixed at shallower keys. Intermediate vectors are straightened
/// exactly, whatever their degree; only the spanning set and the PLUS symbols are
/// windowed, so every reported dimension is a lower bound that is exact once the
/// window is wide enough.
class InducedModule {
 public:
  InducedModule(const AlgebraView& view, const TopModule& top, InductionWindow w);

  const AlgebraView& view() const { return view_; }
  const TopModule& top() const { return top_; }
  const InductionWindow& window() const { return w_; }
  const std::vector<BasisSymbol>& minus_ops() const { return minus_; }
  const std::vector<BasisSymbol>& plus_ops() const { return plus_; }

  /// Depth of a key below the top (0 at the top, negative below).
  long depth(const WeightKey& key) const;
  WeightKey key_of(const Monomial& m) const;

  MVec act(const BasisSymbol& y, const MVec& v);
  /// Number of windowed PBW monomials of this weight (the truncated induced module).
  std::size_t induced_dim(const WeightKey& key);

  std::size_t quotient_dim(const WeightKey& key);
  const std::vector<MVec>& quotient_basis(const WeightKey& key);
  /// Coordinates of the image of v in L_key, in the basis above.
  Vector coordinates(const WeightKey& key, const MVec& v);
  /// Matrix of y on L from `key` to key + weight(y).
  Matrix quotient_action(const BasisSymbol& y, const WeightKey& key);

  /// Keys reachable from the top through MINUS symbols down to dmax; Z^n-degrees of
  /// loop views are replaced by the full box |k| <= kbox.
  std::vector<WeightKey> window_keys(long kbox) const;

  std::size_t memo_size() const { return act_memo_.size(); }

 private:
  struct Slot {
    BasisSymbol p;
    WeightKey target;
    std::size_t offset = 0;
    std::size_t dim = 0;
  };
  struct Level {
    long depth = 0;
    bool ready = false;
    std::size_t dim = 0;
    std::vector<MVec> basis;
    std::vector<Slot> layout;
    std::size_t gdim = 0;
    Matrix basis_g;
    std::vector<std::size_t> rows;
    Matrix rows_inv;
  };

  const MVec& act_mono(const BasisSymbol& y, const Monomial& m);
  Level& level(const WeightKey& key);
  const Vector& g_mono(const Monomial& m);
  const Vector& f_mono(const Monomial& m);
  Vector g_vec(const MVec& v, std::size_t gdim);

  const AlgebraView& view_;
  const TopModule& top_;
  InductionWindow w_;
  std::vector<BasisSymbol> minus_, plus_;
  Rational top_depth_;
  std::map<std::pair<BasisSymbol, Monomial>, MVec> act_memo_;
  std::map<WeightKey, Level> levels_;
  std::map<Monomial, Vector> g_memo_, f_memo_;
  std::vector<std::pair<WeightKey, long>> pbw_offsets_;
  bool pbw_ready_ = false;
};

/// L frozen on the keys reachable from the top. With `require_finite`, every nonzero
/// weight space must sit well inside dmax, else WindowError ("not finite-dimensional
/// at this cap"); otherwise keys deeper than dmax are dropped.
WeightModule freeze_quotient(InducedModule& m, const std::vector<BasisSymbol>& symbols, bool require_finite);

using Character = std::map<WeightKey, std::size_t>;
nlohmann::json character_json(const Character& c);
std::string character_csv(const Character& c);

/// Irreducible Lambda-graded quotient of the module induced from W2 along g(sigma_0).
WeightModule w2_sigma0(const AdaptedBasis& ab, const FiniteRootSystem& delta0, const WeightModule& w2, long cap = 24);
/// Finite-dimensional irreducible of g with the given Dynkin labels.
WeightModule finite_dim_irrep(const SimpleLieAlgebraData& alg, const std::vector<Rational>& labels, long cap = 24);

}  // namespace toroidal
