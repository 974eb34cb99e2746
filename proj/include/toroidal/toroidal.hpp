#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "toroidal/multiloop.hpp"
#include "toroidal/report.hpp"
#include "toroidal/sampling.hpp"

namespace toroidal {

enum class SymbolKind { Loop, Central, Deriv };
std::string to_string(SymbolKind k);

/// Loop: X_index (x) t0^k0 t^k, index into the adapted basis of g.
/// Central: t0^k0 t^k K_index.  Deriv: t0^k0 t^k d_index.  index runs over 0..n for
/// Central and Deriv.
struct BasisSymbol {
  SymbolKind kind = SymbolKind::Loop;
  std::size_t index = 0;
  long k0 = 0;
  std::vector<long> k;

  auto operator<=>(const BasisSymbol&) const = default;
  bool operator==(const BasisSymbol&) const = default;

  static BasisSymbol loop(std::size_t v, long k0, std::vector<long> k) { return {SymbolKind::Loop, v, k0, std::move(k)}; }
  static BasisSymbol central(std::size_t i, long k0, std::vector<long> k) {
    return {SymbolKind::Central, i, k0, std::move(k)};
  }
  static BasisSymbol deriv(std::size_t i, long k0, std::vector<long> k) { return {SymbolKind::Deriv, i, k0, std::move(k)}; }
  /// Exponent of t_p, with p = 0 meaning t0.
  long exponent(std::size_t p) const { return p == 0 ? k0 : k[p - 1]; }
  std::string str() const;
};

/// Finitely supported combination of basis symbols; zero coefficients are never stored.
class TauElement {
 public:
  TauElement() = default;
  TauElement(const BasisSymbol& s, const CycScalar& c) { add(s, c); }

  void add(const BasisSymbol& s, const CycScalar& c);
  void add(const TauElement& o, const CycScalar& c);
  TauElement scaled(const CycScalar& c) const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<BasisSymbol, CycScalar>& terms() const { return terms_; }
  CycScalar coefficient(const BasisSymbol& s, int order) const;
  bool operator==(const TauElement& o) const { return terms_ == o.terms_; }

  nlohmann::json to_json() const;
  std::string str() const;

 private:
  std::map<BasisSymbol, CycScalar> terms_;
};

struct CocycleConfig {
  CycScalar c1;
  CycScalar c2;
};
CocycleConfig parse_cocycle(const std::string& text, int order);

/// The twisted full toroidal algebra attached to an adapted basis of g.
class ToroidalAlgebra {
 public:
  explicit ToroidalAlgebra(AdaptedBasis basis);

  const AdaptedBasis& basis() const { return ab_; }
  int order() const { return ab_.order; }
  std::size_t n() const { return ab_.n(); }
  long m0() const { return ab_.m0; }
  const std::vector<long>& m() const { return ab_.m; }

  /// Degree lies in Gamma_0 x Gamma.
  bool in_gamma(long k0, const std::vector<long>& k) const;
  bool valid(const BasisSymbol& s) const;
  /// Throws std::invalid_argument for an invalid symbol.
  void require_valid(const BasisSymbol& s) const;

  /// c t0^s0 t^s K_i in dA-normal form.
  TauElement normalize_central(std::size_t i, long s0, const std::vector<long>& s, const CycScalar& c) const;
  /// A symbol as an element; Central symbols are normalized.
  TauElement element(const BasisSymbol& s, const CycScalar& c) const;
  TauElement element(const BasisSymbol& s) const { return element(s, CycScalar(order(), 1L)); }

  TauElement bracket(const BasisSymbol& a, const BasisSymbol& b, const CocycleConfig& cfg) const;
  TauElement bracket(const TauElement& a, const TauElement& b, const CocycleConfig& cfg) const;

  /// Action of t0^r0 t^r d_a on the central symbol t0^s0 t^s K_b, before the
  /// quotient: coefficients of K_0..K_n at degree r + s.
  std::vector<CycScalar> derivation_on_central(std::size_t a, long r0, const std::vector<long>& r, std::size_t b,
                                               long s0, const std::vector<long>& s) const;

 private:
  TauElement central_combination(long s0, const std::vector<long>& s, const std::vector<CycScalar>& coeffs) const;
  TauElement bracket_ordered(const BasisSymbol& a, const BasisSymbol& b, const CocycleConfig& cfg) const;

  AdaptedBasis ab_;
};

/// Random basis symbol of the given kind with exponents |k0|, |k_i| bounded by
/// `reach` periods.
BasisSymbol random_symbol(const ToroidalAlgebra& tau, SymbolKind kind, Sampler& rng, long reach);

/// Jacobiator of seeded triples, stratified over the ten multisets of kinds.
Report check_jacobi(const ToroidalAlgebra& tau, std::size_t samples, std::uint64_t seed, const CocycleConfig& cfg,
                    long reach = 2);
/// Jacobiator on explicit triples.
Report check_jacobi_triples(const ToroidalAlgebra& tau, const std::vector<std::array<BasisSymbol, 3>>& triples,
                            const CocycleConfig& cfg);
/// Antisymmetry on seeded pairs.
Report check_antisymmetry(const ToroidalAlgebra& tau, std::size_t samples, std::uint64_t seed,
                          const CocycleConfig& cfg, long reach = 2);

struct DerivationSample {
  std::size_t a;
  long r0;
  std::vector<long> r;
  long s0;
  std::vector<long> s;
};
/// Each derivation maps the relation sum_p s_p t^s K_p into the span of the
/// relation at degree r + s.
Report check_da_equivariance(const ToroidalAlgebra& tau, const std::vector<DerivationSample>& samples);
std::vector<DerivationSample> random_derivation_samples(const ToroidalAlgebra& tau, std::size_t count,
                                                        std::uint64_t seed, long reach = 2);

}  // namespace toroidal
