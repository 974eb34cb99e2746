#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toroidal/toroidal.hpp"

namespace toroidal {

/// Weight of a basis symbol under the Cartan H: h(0)-weight, d0 degree, Z^n degree.
/// The w coordinates (pairing with the K_i) are carried but never populated.
struct WeightVector {
  Vector alpha;
  long k0 = 0;
  std::vector<long> k;
  std::vector<Rational> w;
  bool operator==(const WeightVector&) const = default;
};

enum class DecompositionKind { Affine, D0, Tau0, GSigma0 };
enum class Part { Minus, Zero, Plus };

DecompositionKind parse_kind(const std::string& s);
std::string to_string(DecompositionKind k);
std::string to_string(Part p);

WeightVector weight_of(const ToroidalAlgebra& tau, const BasisSymbol& s);
/// Throws std::invalid_argument when the symbol is outside the domain of the kind
/// (k0 != 0 for Tau0, non-loop or k0 != 0 for GSigma0).
Part classify(const ToroidalAlgebra& tau, const BasisSymbol& s, DecompositionKind kind);

/// All valid symbols with |k0| <= k0max and |k_i| <= kmax.
std::vector<BasisSymbol> symbols_in_window(const ToroidalAlgebra& tau, long k0max, long kmax);

/// Classification table of every symbol in the window, as JSON.
nlohmann::json decompose_json(const ToroidalAlgebra& tau, DecompositionKind kind, long k0max, long kmax);

/// Additivity of weights under brackets, closure of each part, and
/// Affine-zero = (D0-zero and Tau0-zero), all over a symbol window.
Report check_gradings(const ToroidalAlgebra& tau, long k0max, long kmax, const CocycleConfig& cfg);

}  // namespace toroidal
