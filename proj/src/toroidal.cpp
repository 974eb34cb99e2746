#include "toroidal/toroidal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace toroidal {

std::string to_string(SymbolKind k) {
  switch (k) {
    case SymbolKind::Loop: return "loop";
    case SymbolKind::Central: return "central";
    case SymbolKind::Deriv: return "deriv";
  }
  return "?";
}

std::string BasisSymbol::str() const {
  std::ostringstream os;
  os << (kind == SymbolKind::Loop ? "X" : kind == SymbolKind::Central ? "K" : "d") << index << "(" << k0;
  for (auto x : k) os << "," << x;
  os << ")";
  return os.str();
}

void TauElement::add(const BasisSymbol& s, const CycScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    terms_.emplace(s, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void TauElement::add(const TauElement& o, const CycScalar& c) {
  for (const auto& [s, x] : o.terms_) add(s, x * c);
}

TauElement TauElement::scaled(const CycScalar& c) const {
  TauElement out;
  out.add(*this, c);
  return out;
}

CycScalar TauElement::coefficient(const BasisSymbol& s, int order) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? CycScalar(order) : it->second;
}

nlohmann::json TauElement::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [s, c] : terms_) {
    nlohmann::json exps = nlohmann::json::array({s.k0});
    for (auto x : s.k) exps.push_back(x);
    out.push_back({{"kind", to_string(s.kind)}, {"index", s.index}, {"exponents", exps}, {"scalar", toroidal::to_json(c)}});
  }
  return out;
}

std::string TauElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.str() << ")" << s.str();
    first = false;
  }
  return os.str();
}

CocycleConfig parse_cocycle(const std::string& text, int order) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("cocycle must be given as c1,c2");
  return {CycScalar(order, parse_rational(text.substr(0, comma))),
          CycScalar(order, parse_rational(text.substr(comma + 1)))};
}

ToroidalAlgebra::ToroidalAlgebra(AdaptedBasis basis) : ab_(std::move(basis)) {}

bool ToroidalAlgebra::in_gamma(long k0, const std::vector<long>& k) const {
  if (k.size() != n()) return false;
  if (positive_mod(k0, m0()) != 0) return false;
  for (std::size_t i = 0; i < n(); ++i)
    if (positive_mod(k[i], ab_.m[i]) != 0) return false;
  return true;
}

bool ToroidalAlgebra::valid(const BasisSymbol& s) const {
  if (s.k.size() != n()) return false;
  if (s.kind == SymbolKind::Loop) return s.index < ab_.dim && ab_.admits(s.index, s.k0, s.k);
  return s.index <= n() && in_gamma(s.k0, s.k);
}

void ToroidalAlgebra::require_valid(const BasisSymbol& s) const {
  if (!valid(s)) throw std::invalid_argument("invalid basis symbol " + s.str());
}

TauElement ToroidalAlgebra::normalize_central(std::size_t i, long s0, const std::vector<long>& s,
                                              const CycScalar& c) const {
  if (i > n() || !in_gamma(s0, s)) throw std::invalid_argument("normalize_central: degree not in Gamma_0 x Gamma");
  TauElement out;
  std::size_t j = 0;
  auto exponent = [&](std::size_t p) { return p == 0 ? s0 : s[p - 1]; };
  while (j <= n() && exponent(j) == 0) ++j;
  if (j > n() || j != i) {
    out.add(BasisSymbol::central(i, s0, s), c);
    return out;
  }
  // K_j = -(1/e_j) sum_{p != j} e_p K_p at this monomial.
  const CycScalar f = -c / CycScalar(order(), exponent(j));
  for (std::size_t p = 0; p <= n(); ++p)
    if (p != j && exponent(p) != 0) out.add(BasisSymbol::central(p, s0, s), f * CycScalar(order(), exponent(p)));
  return out;
}

TauElement ToroidalAlgebra::element(const BasisSymbol& s, const CycScalar& c) const {
  require_valid(s);
  if (s.kind == SymbolKind::Central) return normalize_central(s.index, s.k0, s.k, c);
  return TauElement(s, c);
}

TauElement ToroidalAlgebra::central_combination(long s0, const std::vector<long>& s,
                                                const std::vector<CycScalar>& coeffs) const {
  TauElement out;
  for (std::size_t p = 0; p < coeffs.size(); ++p)
    if (!coeffs[p].is_zero()) out.add(normalize_central(p, s0, s, coeffs[p]), CycScalar(order(), 1L));
  return out;
}

std::vector<CycScalar> ToroidalAlgebra::derivation_on_central(std::size_t a, long r0, const std::vector<long>& r,
                                                              std::size_t b, long s0,
                                                              const std::vector<long>& s) const {
  const int N = order();
  std::vector<CycScalar> out(n() + 1, CycScalar(N));
  const long sa = a == 0 ? s0 : s[a - 1];
  out[b] += CycScalar(N, sa);
  if (a == b)
    for (std::size_t p = 0; p <= n(); ++p) out[p] += CycScalar(N, p == 0 ? r0 : r[p - 1]);
  return out;
}

namespace {
std::vector<long> add_k(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}
}  // namespace

TauElement ToroidalAlgebra::bracket_ordered(const BasisSymbol& a, const BasisSymbol& b, const CocycleConfig& cfg) const {
  const int N = order();
  const long t0 = a.k0 + b.k0;
  const std::vector<long> t = add_k(a.k, b.k);
  TauElement out;
  using K = SymbolKind;
  if (a.kind == K::Loop && b.kind == K::Loop) {
    for (const auto& [w, c] : ab_.sc[a.index][b.index]) out.add(BasisSymbol::loop(w, t0, t), c);
    const CycScalar f = ab_.form(a.index, b.index);
    if (!f.is_zero()) {
      std::vector<CycScalar> coeffs;
      for (std::size_t p = 0; p <= n(); ++p) coeffs.push_back(f * CycScalar(N, a.exponent(p)));
      out.add(central_combination(t0, t, coeffs), CycScalar(N, 1L));
    }
    return out;
  }
  if (a.kind == K::Deriv && b.kind == K::Loop) {
    const long ka = b.exponent(a.index);
    if (ka != 0) out.add(BasisSymbol::loop(b.index, t0, t), CycScalar(N, ka));
    return out;
  }
  if (a.kind == K::Deriv && b.kind == K::Central) {
    return central_combination(t0, t, derivation_on_central(a.index, a.k0, a.k, b.index, b.k0, b.k));
  }
  if (a.kind == K::Deriv && b.kind == K::Deriv) {
    const long sa = b.exponent(a.index), rb = a.exponent(b.index);
    if (sa != 0) out.add(BasisSymbol::deriv(b.index, t0, t), CycScalar(N, sa));
    if (rb != 0) out.add(BasisSymbol::deriv(a.index, t0, t), CycScalar(N, -rb));
    // c1 phi1 + c2 phi2, both multiples of sum_p r_p t^{r+s} K_p
    const long ra = a.exponent(a.index), sb = b.exponent(b.index);
    const CycScalar scale = cfg.c1 * CycScalar(N, -sa * rb) + cfg.c2 * CycScalar(N, ra * sb);
    if (!scale.is_zero()) {
      std::vector<CycScalar> coeffs;
      for (std::size_t p = 0; p <= n(); ++p) coeffs.push_back(scale * CycScalar(N, a.exponent(p)));
      out.add(central_combination(t0, t, coeffs), CycScalar(N, 1L));
    }
    return out;
  }
  // Central against Loop or Central, and Loop against Central: zero.
  return out;
}

TauElement ToroidalAlgebra::bracket(const BasisSymbol& a, const BasisSymbol& b, const CocycleConfig& cfg) const {
  require_valid(a);
  require_valid(b);
  using K = SymbolKind;
  const auto rank = [](K k) { return k == K::Deriv ? 0 : k == K::Loop ? 1 : 2; };
  // The listed brackets have the derivation first, then loops; other orders by antisymmetry.
  if (rank(a.kind) > rank(b.kind)) return bracket_ordered(b, a, cfg).scaled(CycScalar(order(), -1L));
  return bracket_ordered(a, b, cfg);
}

TauElement ToroidalAlgebra::bracket(const TauElement& a, const TauElement& b, const CocycleConfig& cfg) const {
  TauElement out;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) out.add(bracket(x, y, cfg), cx * cy);
  return out;
}

BasisSymbol random_symbol(const ToroidalAlgebra& tau, SymbolKind kind, Sampler& rng, long reach) {
  const auto& ab = tau.basis();
  if (kind == SymbolKind::Loop) {
    const std::size_t v = rng.index(ab.dim);
    const long k0 = ab.residue[v].k0 + ab.m0 * rng.uniform(-reach, reach);
    std::vector<long> k;
    for (std::size_t i = 0; i < ab.n(); ++i) k.push_back(ab.residue[v].k[i] + ab.m[i] * rng.uniform(-reach, reach));
    return BasisSymbol::loop(v, k0, k);
  }
  const std::size_t i = rng.index(tau.n() + 1);
  const long k0 = ab.m0 * rng.uniform(-reach, reach);
  std::vector<long> k;
  for (std::size_t p = 0; p < ab.n(); ++p) k.push_back(ab.m[p] * rng.uniform(-reach, reach));
  if (kind == SymbolKind::Central) return BasisSymbol::central(i, k0, k);
  return BasisSymbol::deriv(i, k0, k);
}

namespace {

nlohmann::json symbol_json(const BasisSymbol& s) {
  nlohmann::json exps = nlohmann::json::array({s.k0});
  for (auto x : s.k) exps.push_back(x);
  return {{"kind", to_string(s.kind)}, {"index", s.index}, {"exponents", exps}};
}

TauElement jacobiator(const ToroidalAlgebra& tau, const TauElement& x, const TauElement& y, const TauElement& z,
                      const CocycleConfig& cfg) {
  const CycScalar one(tau.order(), 1L);
  TauElement j = tau.bracket(x, tau.bracket(y, z, cfg), cfg);
  j.add(tau.bracket(y, tau.bracket(z, x, cfg), cfg), one);
  j.add(tau.bracket(z, tau.bracket(x, y, cfg), cfg), one);
  return j;
}

const std::array<std::array<SymbolKind, 3>, 10> kKindMultisets = {{
    {SymbolKind::Loop, SymbolKind::Loop, SymbolKind::Loop},
    {SymbolKind::Loop, SymbolKind::Loop, SymbolKind::Central},
    {SymbolKind::Loop, SymbolKind::Loop, SymbolKind::Deriv},
    {SymbolKind::Loop, SymbolKind::Central, SymbolKind::Central},
    {SymbolKind::Loop, SymbolKind::Central, SymbolKind::Deriv},
    {SymbolKind::Loop, SymbolKind::Deriv, SymbolKind::Deriv},
    {SymbolKind::Central, SymbolKind::Central, SymbolKind::Central},
    {SymbolKind::Central, SymbolKind::Central, SymbolKind::Deriv},
    {SymbolKind::Central, SymbolKind::Deriv, SymbolKind::Deriv},
    {SymbolKind::Deriv, SymbolKind::Deriv, SymbolKind::Deriv},
}};

}  // namespace

Report check_jacobi_triples(const ToroidalAlgebra& tau, const std::vector<std::array<BasisSymbol, 3>>& triples,
                            const CocycleConfig& cfg) {
  Report rep;
  std::size_t failures = 0;
  for (const auto& t : triples) {
    const TauElement j = jacobiator(tau, tau.element(t[0]), tau.element(t[1]), tau.element(t[2]), cfg);
    if (!j.is_zero()) {
      if (failures < 5)
        rep.fail("jacobi", "nonzero Jacobiator",
                 {{"triple", {symbol_json(t[0]), symbol_json(t[1]), symbol_json(t[2])}}, {"residual", j.to_json()}});
      ++failures;
    }
  }
  if (failures == 0) rep.pass("jacobi", std::to_string(triples.size()) + " triples, all Jacobiators zero",
                              {{"triples", triples.size()}});
  else rep.fail("jacobi.summary", std::to_string(failures) + " of " + std::to_string(triples.size()) + " triples failed");
  return rep;
}

Report check_jacobi(const ToroidalAlgebra& tau, std::size_t samples, std::uint64_t seed, const CocycleConfig& cfg,
                    long reach) {
  Sampler rng(seed);
  std::vector<std::array<BasisSymbol, 3>> triples;
  std::vector<std::size_t> per_stratum(kKindMultisets.size(), 0);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto& kinds = kKindMultisets[i % kKindMultisets.size()];
    ++per_stratum[i % kKindMultisets.size()];
    std::array<BasisSymbol, 3> t;
    for (std::size_t j = 0; j < 3; ++j) t[j] = random_symbol(tau, kinds[j], rng, reach);
    // vary the order inside the triple
    const std::size_t rot = rng.index(3);
    std::rotate(t.begin(), t.begin() + static_cast<long>(rot), t.end());
    if (rng.uniform(0, 1)) std::swap(t[0], t[1]);
    triples.push_back(std::move(t));
  }
  Report rep = check_jacobi_triples(tau, triples, cfg);
  nlohmann::json strata = nlohmann::json::object();
  for (std::size_t s = 0; s < kKindMultisets.size(); ++s) {
    std::string key;
    for (auto k : kKindMultisets[s]) key += to_string(k).substr(0, 1);
    strata[key] = per_stratum[s];
  }
  rep.info("jacobi.strata", "samples per kind multiset", strata);
  return rep;
}

Report check_antisymmetry(const ToroidalAlgebra& tau, std::size_t samples, std::uint64_t seed,
                          const CocycleConfig& cfg, long reach) {
  Sampler rng(seed);
  Report rep;
  std::size_t failures = 0;
  const SymbolKind kinds[3] = {SymbolKind::Loop, SymbolKind::Central, SymbolKind::Deriv};
  for (std::size_t i = 0; i < samples; ++i) {
    const auto a = random_symbol(tau, kinds[i % 3], rng, reach);
    const auto b = random_symbol(tau, kinds[(i / 3) % 3], rng, reach);
    TauElement s = tau.bracket(tau.element(a), tau.element(b), cfg);
    s.add(tau.bracket(tau.element(b), tau.element(a), cfg), CycScalar(tau.order(), 1L));
    if (!s.is_zero()) {
      if (failures < 5) rep.fail("antisymmetry", "[a,b] + [b,a] != 0", {{"pair", {symbol_json(a), symbol_json(b)}}});
      ++failures;
    }
  }
  if (failures == 0) rep.pass("antisymmetry", std::to_string(samples) + " pairs");
  return rep;
}

Report check_da_equivariance(const ToroidalAlgebra& tau, const std::vector<DerivationSample>& samples) {
  Report rep;
  const int N = tau.order();
  std::size_t failures = 0;
  for (const auto& smp : samples) {
    // relation vector at degree s: sum_p s_p K_p
    std::vector<CycScalar> image(tau.n() + 1, CycScalar(N));
    for (std::size_t b = 0; b <= tau.n(); ++b) {
      const long sb = b == 0 ? smp.s0 : smp.s[b - 1];
      if (sb == 0) continue;
      const auto part = tau.derivation_on_central(smp.a, smp.r0, smp.r, b, smp.s0, smp.s);
      for (std::size_t p = 0; p <= tau.n(); ++p) image[p] += CycScalar(N, sb) * part[p];
    }
    // dA at degree e = r + s is spanned by (e_0, ..., e_n).
    std::vector<long> e{smp.r0 + smp.s0};
    for (std::size_t i = 0; i < tau.n(); ++i) e.push_back(smp.r[i] + smp.s[i]);
    bool member;
    if (std::all_of(e.begin(), e.end(), [](long x) { return x == 0; })) {
      member = is_zero(image);
    } else {
      Matrix col(N, e.size(), 1);
      for (std::size_t p = 0; p < e.size(); ++p) col(p, 0) = CycScalar(N, e[p]);
      member = solve(col, image).has_value();
    }
    if (!member) {
      if (failures < 5) {
        nlohmann::json img = nlohmann::json::array();
        for (const auto& x : image) img.push_back(x.str());
        rep.fail("da_equivariance", "derivation maps a dA relation outside dA",
                 {{"derivation", smp.a}, {"r", smp.r0}, {"s", smp.s0}, {"image", img}});
      }
      ++failures;
    }
  }
  if (failures == 0) rep.pass("da_equivariance", std::to_string(samples.size()) + " samples in dA");
  return rep;
}

std::vector<DerivationSample> random_derivation_samples(const ToroidalAlgebra& tau, std::size_t count,
                                                        std::uint64_t seed, long reach) {
  Sampler rng(seed);
  std::vector<DerivationSample> out;
  for (std::size_t i = 0; i < count; ++i) {
    DerivationSample s;
    s.a = rng.index(tau.n() + 1);
    s.r0 = tau.m0() * rng.uniform(-reach, reach);
    s.s0 = tau.m0() * rng.uniform(-reach, reach);
    for (std::size_t p = 0; p < tau.n(); ++p) {
      s.r.push_back(tau.m()[p] * rng.uniform(-reach, reach));
      s.s.push_back(tau.m()[p] * rng.uniform(-reach, reach));
    }
    // every tenth sample sits at degree zero, where all K_i survive
    if (i % 10 == 0) {
      s.s0 = 0;
      std::fill(s.s.begin(), s.s.end(), 0);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace toroidal
