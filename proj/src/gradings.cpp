#include "toroidal/gradings.hpp"

#include <stdexcept>

namespace toroidal {

DecompositionKind parse_kind(const std::string& s) {
  if (s == "affine") return DecompositionKind::Affine;
  if (s == "d0") return DecompositionKind::D0;
  if (s == "tau0") return DecompositionKind::Tau0;
  if (s == "gsigma0") return DecompositionKind::GSigma0;
  throw std::invalid_argument("unknown decomposition kind '" + s + "' (affine, d0, tau0, gsigma0)");
}

std::string to_string(DecompositionKind k) {
  switch (k) {
    case DecompositionKind::Affine: return "affine";
    case DecompositionKind::D0: return "d0";
    case DecompositionKind::Tau0: return "tau0";
    case DecompositionKind::GSigma0: return "gsigma0";
  }
  return "?";
}

std::string to_string(Part p) {
  switch (p) {
    case Part::Minus: return "minus";
    case Part::Zero: return "zero";
    case Part::Plus: return "plus";
  }
  return "?";
}

WeightVector weight_of(const ToroidalAlgebra& tau, const BasisSymbol& s) {
  tau.require_valid(s);
  WeightVector w;
  w.k0 = s.k0;
  w.k = s.k;
  w.w.assign(tau.n() + 1, Rational(0));
  if (s.kind == SymbolKind::Loop) w.alpha = tau.basis().alpha[s.index];
  else w.alpha = zero_vector(tau.order(), tau.basis().h0_dim());
  return w;
}

namespace {
Part sign_part(int s) { return s > 0 ? Part::Plus : s < 0 ? Part::Minus : Part::Zero; }
int sign(long x) { return (x > 0) - (x < 0); }
}  // namespace

Part classify(const ToroidalAlgebra& tau, const BasisSymbol& s, DecompositionKind kind) {
  const WeightVector w = weight_of(tau, s);
  switch (kind) {
    case DecompositionKind::D0: return sign_part(sign(w.k0));
    case DecompositionKind::Affine:
      if (w.k0 != 0) return sign_part(sign(w.k0));
      return sign_part(lex_sign(w.alpha));
    case DecompositionKind::Tau0:
      if (w.k0 != 0) throw std::invalid_argument("classify: symbol " + s.str() + " is not in the d0-degree zero part");
      return sign_part(lex_sign(w.alpha));
    case DecompositionKind::GSigma0:
      if (s.kind != SymbolKind::Loop || w.k0 != 0)
        throw std::invalid_argument("classify: symbol " + s.str() + " is not a vector of g(sigma_0)");
      return sign_part(lex_sign(w.alpha));
  }
  return Part::Zero;
}

std::vector<BasisSymbol> symbols_in_window(const ToroidalAlgebra& tau, long k0max, long kmax) {
  std::vector<BasisSymbol> out;
  const std::size_t n = tau.n();
  std::vector<long> k(n, -kmax);
  auto next = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      if (++k[i] <= kmax) return true;
      k[i] = -kmax;
    }
    return false;
  };
  for (long k0 = -k0max; k0 <= k0max; ++k0) {
    std::fill(k.begin(), k.end(), -kmax);
    do {
      for (std::size_t v = 0; v < tau.basis().dim; ++v) {
        const auto s = BasisSymbol::loop(v, k0, k);
        if (tau.valid(s)) out.push_back(s);
      }
      for (std::size_t i = 0; i <= n; ++i) {
        const auto c = BasisSymbol::central(i, k0, k);
        // only symbols that are their own normal form
        if (tau.valid(c) && tau.element(c) == TauElement(c, CycScalar(tau.order(), 1L))) out.push_back(c);
        const auto d = BasisSymbol::deriv(i, k0, k);
        if (tau.valid(d)) out.push_back(d);
      }
    } while (next());
  }
  return out;
}

nlohmann::json decompose_json(const ToroidalAlgebra& tau, DecompositionKind kind, long k0max, long kmax) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& s : symbols_in_window(tau, k0max, kmax)) {
    if (kind == DecompositionKind::Tau0 && s.k0 != 0) continue;
    if (kind == DecompositionKind::GSigma0 && (s.k0 != 0 || s.kind != SymbolKind::Loop)) continue;
    const auto w = weight_of(tau, s);
    nlohmann::json alpha = nlohmann::json::array();
    for (const auto& a : w.alpha) alpha.push_back(a.str());
    nlohmann::json exps = nlohmann::json::array({s.k0});
    for (auto x : s.k) exps.push_back(x);
    rows.push_back({{"kind", to_string(s.kind)},
                    {"index", s.index},
                    {"exponents", exps},
                    {"alpha", alpha},
                    {"part", to_string(classify(tau, s, kind))}});
  }
  return {{"decomposition", to_string(kind)}, {"window", {{"k0", k0max}, {"k", kmax}}}, {"symbols", rows}};
}

Report check_gradings(const ToroidalAlgebra& tau, long k0max, long kmax, const CocycleConfig& cfg) {
  Report rep;
  const auto syms = symbols_in_window(tau, k0max, kmax);
  std::size_t additivity = 0, closure = 0, relation = 0;
  const DecompositionKind kinds[] = {DecompositionKind::Affine, DecompositionKind::D0};
  for (const auto& a : syms) {
    const bool d0z = classify(tau, a, DecompositionKind::D0) == Part::Zero;
    const bool affz = classify(tau, a, DecompositionKind::Affine) == Part::Zero;
    const bool tauz = a.k0 == 0 && classify(tau, a, DecompositionKind::Tau0) == Part::Zero;
    if (affz != (d0z && tauz)) {
      if (relation++ < 3) rep.fail("gradings.zero_parts", "affine zero part differs from the d0/tau0 intersection", a.str());
    }
  }
  for (std::size_t i = 0; i < syms.size(); ++i)
    for (std::size_t j = i; j < syms.size(); ++j) {
      const auto& a = syms[i];
      const auto& b = syms[j];
      const TauElement br = tau.bracket(a, b, cfg);
      if (br.is_zero()) continue;
      const auto wa = weight_of(tau, a), wb = weight_of(tau, b);
      for (const auto& [s, c] : br.terms()) {
        const auto ws = weight_of(tau, s);
        Vector sum = wa.alpha;
        for (std::size_t p = 0; p < sum.size(); ++p) sum[p] += wb.alpha[p];
        bool ok = ws.k0 == wa.k0 + wb.k0 && ws.alpha == sum;
        for (std::size_t p = 0; p < tau.n() && ok; ++p) ok = ws.k[p] == wa.k[p] + wb.k[p];
        if (!ok && additivity++ < 3) rep.fail("gradings.additivity", "weight of a bracket term is not the sum", {a.str(), b.str(), s.str()});
        for (auto kind : kinds) {
          const Part pa = classify(tau, a, kind), pb = classify(tau, b, kind), ps = classify(tau, s, kind);
          if (pa == pb && ps != pa && closure++ < 3)
            rep.fail("gradings.closure", to_string(kind) + " part not closed under the bracket", {a.str(), b.str(), s.str()});
        }
        if (a.k0 == 0 && b.k0 == 0) {
          const Part pa = classify(tau, a, DecompositionKind::Tau0), pb = classify(tau, b, DecompositionKind::Tau0);
          if (pa == pb && classify(tau, s, DecompositionKind::Tau0) != pa && closure++ < 3)
            rep.fail("gradings.closure", "tau0 part not closed under the bracket", {a.str(), b.str(), s.str()});
        }
      }
    }
  if (relation == 0) rep.pass("gradings.zero_parts", std::to_string(syms.size()) + " symbols");
  if (additivity == 0) rep.pass("gradings.additivity");
  if (closure == 0) rep.pass("gradings.closure");
  return rep;
}

}  // namespace toroidal
