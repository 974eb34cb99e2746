#include "toroidal/induction.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace toroidal {

namespace {
long to_long(const Rational& q, const char* what) {
  if (q.get_den() != 1) throw std::logic_error(std::string(what) + " is not an integer");
  return q.get_num().get_si();
}

void add_into(MVec& acc, const MVec& v, const CycScalar& c) {
  for (const auto& [m, x] : v) {
    auto it = acc.find(m);
    if (it == acc.end()) acc.emplace(m, c * x);
    else {
      it->second += c * x;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}
}  // namespace

InducedModule::InducedModule(const AlgebraView& view, const TopModule& top, InductionWindow w)
    : view_(view), top_(top), w_(w) {
  if (view.order() != top.order()) throw std::invalid_argument("induction: algebra and top use different fields");
  const auto classes = top.key_classes();
  if (classes.empty()) throw std::invalid_argument("induction: the top module is zero");
  top_depth_ = view.key_depth(classes[0]);
  for (const auto& c : classes)
    if (view.key_depth(c) != top_depth_) throw std::invalid_argument("induction: top weights lie at different depths");
  minus_ = view.symbols(Part::Minus, w.kmax, w.dmax);
  plus_ = view.symbols(Part::Plus, w.kmax, w.dmax);
}

long InducedModule::depth(const WeightKey& key) const { return to_long(view_.key_depth(key) - top_depth_, "depth"); }

WeightKey InducedModule::key_of(const Monomial& m) const {
  WeightKey k = m.top;
  for (const auto& s : m.ops) k = view_.add(k, view_.weight(s));
  return k;
}

MVec InducedModule::act(const BasisSymbol& y, const MVec& v) {
  MVec out;
  for (const auto& [m, c] : v) add_into(out, act_mono(y, m), c);
  return out;
}

const MVec& InducedModule::act_mono(const BasisSymbol& y, const Monomial& m) {
  const auto key = std::make_pair(y, m);
  if (auto it = act_memo_.find(key); it != act_memo_.end()) return it->second;
  MVec out;
  const Part py = view_.part(y);
  const CycScalar one(view_.order(), 1L);
  if (m.ops.empty()) {
    if (py == Part::Minus) out.emplace(Monomial{{y}, m.top, m.idx}, one);
    else if (py == Part::Zero) {
      const WeightKey t = view_.add(m.top, view_.weight(y));
      for (const auto& [j, c] : top_.act(y, m.top, m.idx)) out.emplace(Monomial{{}, t, j}, c);
    }
  } else if (py == Part::Minus && !pbw_less(m.ops[0], y)) {
    Monomial n = m;
    n.ops.insert(n.ops.begin(), y);
    out.emplace(std::move(n), one);
  } else {
    // y x1 R = x1 (y R) + [y, x1] R
    const BasisSymbol x1 = m.ops[0];
    Monomial rest{std::vector<BasisSymbol>(m.ops.begin() + 1, m.ops.end()), m.top, m.idx};
    const MVec yr = act_mono(y, rest);
    out = act(x1, yr);
    const TauElement br = view_.bracket(y, x1);
    for (const auto& [s, c] : br.terms()) add_into(out, act_mono(s, rest), c);
  }
  return act_memo_.emplace(key, std::move(out)).first->second;
}

std::size_t InducedModule::induced_dim(const WeightKey& key) {
  if (!pbw_ready_) {
    // every multiset of MINUS symbols within the depth window
    pbw_offsets_.push_back({view_.zero_key(), 0});
    std::function<void(const WeightKey&, long, std::size_t)> rec = [&](const WeightKey& off, long d, std::size_t from) {
      for (std::size_t i = from; i < minus_.size(); ++i) {
        const long nd = d + view_.depth(minus_[i]);
        if (nd < -w_.dmax) continue;
        const WeightKey no = view_.add(off, view_.weight(minus_[i]));
        pbw_offsets_.push_back({no, nd});
        rec(no, nd, i);
      }
    };
    rec(view_.zero_key(), 0, 0);
    pbw_ready_ = true;
  }
  std::size_t n = 0;
  for (const auto& [off, d] : pbw_offsets_) n += top_.dim(view_.sub(key, off));
  return n;
}

InducedModule::Level& InducedModule::level(const WeightKey& key) {
  auto it = levels_.find(key);
  if (it != levels_.end()) {
    if (!it->second.ready) throw std::logic_error("induction: cyclic level dependency at " + to_string(key));
    return it->second;
  }
  Level& L = levels_[key];
  L.depth = depth(key);
  const int N = view_.order();
  if (L.depth > 0) {
    L.ready = true;
    return L;
  }
  if (L.depth == 0) {
    L.dim = top_.dim(key);
    for (std::size_t i = 0; i < L.dim; ++i) L.basis.push_back(MVec{{Monomial{{}, key, i}, CycScalar(N, 1L)}});
    L.ready = true;
    return L;
  }
  if (L.depth < -w_.dmax) {
    levels_.erase(key);
    throw WindowError("weight " + to_string(key) + " lies below the depth window " + std::to_string(w_.dmax));
  }
  for (const auto& p : plus_) {
    if (L.depth + view_.depth(p) > 0) continue;
    const WeightKey t = view_.add(key, view_.weight(p));
    const std::size_t d = level(t).dim;
    if (d == 0) continue;
    L.layout.push_back({p, t, L.gdim, d});
    L.gdim += d;
  }
  std::vector<MVec> span;
  if (L.gdim > 0)
    for (const auto& x : minus_) {
      if (L.depth - view_.depth(x) > 0) continue;
      const WeightKey src = view_.sub(key, view_.weight(x));
      const auto basis = level(src).basis;
      for (const auto& b : basis) {
        MVec v = act(x, b);
        if (!v.empty()) span.push_back(std::move(v));
      }
    }
  L.ready = true;  // layout is final; g_mono may now be evaluated at this key
  if (span.empty()) return L;
  Matrix g(N, L.gdim, span.size());
  for (std::size_t c = 0; c < span.size(); ++c) {
    const Vector v = g_vec(span[c], L.gdim);
    for (std::size_t r = 0; r < L.gdim; ++r) g(r, c) = v[r];
  }
  Matrix red = g;
  const auto pivots = rref(red);
  L.dim = pivots.size();
  if (L.dim == 0) return L;
  std::vector<std::size_t> all_rows(L.gdim);
  for (std::size_t r = 0; r < L.gdim; ++r) all_rows[r] = r;
  for (auto p : pivots) L.basis.push_back(span[p]);
  L.basis_g = g.select(all_rows, pivots);
  Matrix t = L.basis_g.transpose();
  L.rows = rref(t);
  std::vector<std::size_t> cols(L.dim);
  for (std::size_t c = 0; c < L.dim; ++c) cols[c] = c;
  L.rows_inv = *inverse(L.basis_g.select(L.rows, cols));
  return L;
}

Vector InducedModule::g_vec(const MVec& v, std::size_t gdim) {
  Vector out = zero_vector(view_.order(), gdim);
  for (const auto& [m, c] : v) {
    const Vector& g = g_mono(m);
    for (std::size_t i = 0; i < gdim; ++i) out[i] += c * g[i];
  }
  return out;
}

const Vector& InducedModule::g_mono(const Monomial& m) {
  if (auto it = g_memo_.find(m); it != g_memo_.end()) return it->second;
  const WeightKey key = key_of(m);
  const Level& L = level(key);
  Vector g = zero_vector(view_.order(), L.gdim);
  for (const auto& s : L.layout) {
    const MVec img = act_mono(s.p, m);
    const Vector f = coordinates(s.target, img);
    for (std::size_t i = 0; i < s.dim; ++i) g[s.offset + i] = f[i];
  }
  return g_memo_.emplace(m, std::move(g)).first->second;
}

const Vector& InducedModule::f_mono(const Monomial& m) {
  if (auto it = f_memo_.find(m); it != f_memo_.end()) return it->second;
  const WeightKey key = key_of(m);
  const Level& L = level(key);
  Vector f;
  if (L.depth == 0) {
    f = zero_vector(view_.order(), L.dim);
    f[m.idx] = CycScalar(view_.order(), 1L);
  } else if (L.dim > 0) {
    const Vector& g = g_mono(m);
    Vector sub;
    for (auto r : L.rows) sub.push_back(g[r]);
    f = L.rows_inv * sub;
    if (!(L.basis_g * f == g))
      throw WindowError("the windowed spanning set misses a vector of weight " + to_string(key) +
                        "; enlarge the k window");
  }
  return f_memo_.emplace(m, std::move(f)).first->second;
}

Vector InducedModule::coordinates(const WeightKey& key, const MVec& v) {
  const Level& L = level(key);
  Vector out = zero_vector(view_.order(), L.dim);
  if (L.dim == 0) return out;
  for (const auto& [m, c] : v) {
    const Vector& f = f_mono(m);
    for (std::size_t i = 0; i < L.dim; ++i) out[i] += c * f[i];
  }
  return out;
}

std::size_t InducedModule::quotient_dim(const WeightKey& key) { return level(key).dim; }

const std::vector<MVec>& InducedModule::quotient_basis(const WeightKey& key) { return level(key).basis; }

Matrix InducedModule::quotient_action(const BasisSymbol& y, const WeightKey& key) {
  const WeightKey t = view_.add(key, view_.weight(y));
  const std::size_t src = level(key).dim;
  const std::size_t dt = depth(t) > 0 ? 0 : level(t).dim;
  Matrix out(view_.order(), dt, src);
  if (dt == 0) return out;
  const auto basis = level(key).basis;
  for (std::size_t c = 0; c < src; ++c) {
    const Vector f = coordinates(t, act(y, basis[c]));
    for (std::size_t r = 0; r < dt; ++r) out(r, c) = f[r];
  }
  return out;
}

std::vector<WeightKey> InducedModule::window_keys(long kbox) const {
  auto strip = [&](WeightKey k) {
    if (view_.loop_degrees()) std::fill(k.k.begin(), k.k.end(), 0);
    return k;
  };
  std::set<WeightKey> classes;
  std::vector<WeightKey> todo;
  for (const auto& c : top_.key_classes()) {
    const auto s = strip(c);
    if (classes.insert(s).second) todo.push_back(s);
  }
  while (!todo.empty()) {
    const WeightKey k = todo.back();
    todo.pop_back();
    for (const auto& x : minus_) {
      const WeightKey n = strip(view_.add(k, view_.weight(x)));
      if (depth(n) < -w_.dmax) continue;
      if (classes.insert(n).second) todo.push_back(n);
    }
  }
  if (!view_.loop_degrees()) return {classes.begin(), classes.end()};
  return box_keys({classes.begin(), classes.end()}, kbox);
}

WeightModule freeze_quotient(InducedModule& m, const std::vector<BasisSymbol>& symbols, bool require_finite) {
  const AlgebraView& view = m.view();
  long band = 0;
  for (const auto& x : m.minus_ops()) band = std::max(band, -view.depth(x));
  std::set<WeightKey> nonzero;
  std::vector<WeightKey> todo = m.top().key_classes();
  std::set<WeightKey> seen(todo.begin(), todo.end());
  while (!todo.empty()) {
    const WeightKey k = todo.back();
    todo.pop_back();
    if (m.quotient_dim(k) == 0) continue;
    nonzero.insert(k);
    for (const auto& x : m.minus_ops()) {
      const WeightKey n = view.add(k, view.weight(x));
      if (m.depth(n) < -m.window().dmax) {
        if (require_finite)
          throw WindowError("not finite-dimensional at this cap: weight " + to_string(k) +
                            " is nonzero and the next step leaves depth " + std::to_string(m.window().dmax));
        continue;
      }
      if (seen.insert(n).second) todo.push_back(n);
    }
  }
  WeightModule out(view.order());
  for (const auto& k : nonzero) out.set_space(k, m.quotient_dim(k));
  for (const auto& k : nonzero)
    for (const auto& s : symbols) {
      const WeightKey t = view.add(k, view.weight(s));
      if (!nonzero.count(t)) continue;
      out.set_action(s, k, t, m.quotient_action(s, k));
    }
  return out;
}

nlohmann::json character_json(const Character& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [k, d] : c) {
    auto j = to_json(k);
    j["dim"] = d;
    rows.push_back(j);
  }
  return rows;
}

std::string character_csv(const Character& c) {
  std::ostringstream os;
  os << "k0,k,alpha,dim\n";
  for (const auto& [key, d] : c) {
    os << key.k0 << ",";
    for (std::size_t i = 0; i < key.k.size(); ++i) os << (i ? " " : "") << key.k[i];
    os << ",";
    for (std::size_t i = 0; i < key.alpha.size(); ++i) os << (i ? " " : "") << key.alpha[i].str();
    os << "," << d << "\n";
  }
  return os.str();
}

WeightModule w2_sigma0(const AdaptedBasis& ab, const FiniteRootSystem& delta0, const WeightModule& w2, long cap) {
  const FiniteLieView view = gsigma0_view(ab, delta0);
  InducedModule m(view, w2, InductionWindow{0, cap});
  return freeze_quotient(m, view.all_symbols(), true);
}

WeightModule finite_dim_irrep(const SimpleLieAlgebraData& alg, const std::vector<Rational>& labels, long cap) {
  const auto dec = eigen_decompose(alg, {identity_automorphism(alg)});
  const auto outcome = check_assumptions(alg, dec, A1Convention::Off);
  if (!outcome.delta0) throw std::invalid_argument("finite_dim_irrep: no root system for this algebra");
  const AdaptedBasis ab = adapted_basis(alg, dec);
  const Vector mu = weight_from_labels(*outcome.delta0, labels, alg.order);
  const WeightModule top = w2_top(ab, mu, {});
  return w2_sigma0(ab, *outcome.delta0, top, cap);
}

}  // namespace toroidal
