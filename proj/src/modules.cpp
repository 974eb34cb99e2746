#include "toroidal/modules.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace toroidal {

nlohmann::json to_json(const WeightKey& key) {
  nlohmann::json alpha = nlohmann::json::array();
  for (const auto& a : key.alpha) alpha.push_back(a.str());
  return {{"k0", key.k0}, {"k", key.k}, {"alpha", alpha}};
}

std::string to_string(const WeightKey& key) {
  std::string s = "(" + std::to_string(key.k0) + ";";
  for (std::size_t i = 0; i < key.k.size(); ++i) s += (i ? "," : "") + std::to_string(key.k[i]);
  s += ";";
  for (std::size_t i = 0; i < key.alpha.size(); ++i) s += (i ? "," : "") + key.alpha[i].str();
  return s + ")";
}

bool pbw_less(const BasisSymbol& a, const BasisSymbol& b) {
  if (a.k0 != b.k0) return a.k0 < b.k0;
  if (a.k != b.k) return a.k < b.k;
  if (a.kind != b.kind) return a.kind < b.kind;
  return a.index < b.index;
}

// ---------------------------------------------------------------- views

WeightKey AlgebraView::zero_key() const {
  return WeightKey{0, std::vector<long>(k_size_, 0), zero_vector(order(), alpha_size_)};
}

WeightKey AlgebraView::add(const WeightKey& a, const WeightKey& b) const {
  WeightKey r = a;
  r.k0 += b.k0;
  for (std::size_t i = 0; i < r.k.size(); ++i) {
    r.k[i] += b.k[i];
    if (!modulus_.empty()) r.k[i] = positive_mod(r.k[i], modulus_[i]);
  }
  for (std::size_t i = 0; i < r.alpha.size(); ++i) r.alpha[i] += b.alpha[i];
  return r;
}

WeightKey AlgebraView::sub(const WeightKey& a, const WeightKey& b) const {
  WeightKey r = a;
  r.k0 -= b.k0;
  for (std::size_t i = 0; i < r.k.size(); ++i) {
    r.k[i] -= b.k[i];
    if (!modulus_.empty()) r.k[i] = positive_mod(r.k[i], modulus_[i]);
  }
  for (std::size_t i = 0; i < r.alpha.size(); ++i) r.alpha[i] -= b.alpha[i];
  return r;
}

long AlgebraView::depth(const BasisSymbol& s) const {
  const Rational d = key_depth(weight(s));
  if (d.get_den() != 1) throw std::logic_error("symbol " + s.str() + " has non-integral depth");
  return d.get_num().get_si();
}

TauView::TauView(const ToroidalAlgebra& tau, CocycleConfig cfg, DecompositionKind kind, FiniteRootSystem delta0)
    : tau_(tau), cfg_(std::move(cfg)), kind_(kind), delta0_(std::move(delta0)) {
  if (kind == DecompositionKind::GSigma0) throw std::invalid_argument("TauView: use gsigma0_view for g(sigma_0)");
  k_size_ = tau.n();
  alpha_size_ = tau.basis().h0_dim();
  Rational top = 0;
  for (const auto& a : tau.basis().alpha) {
    const Rational h = abs(height(a));
    if (h > top) top = h;
  }
  mpz_class c = top.get_num() / top.get_den();
  scale_ = c.get_si() + 1;
}

Rational TauView::height(const Vector& alpha) const {
  if (is_zero(alpha)) return 0;
  const auto h = delta0_.height(alpha);
  if (!h) throw std::invalid_argument("weight outside the span of the simple roots of Delta_0");
  return *h;
}

TauElement TauView::bracket(const BasisSymbol& a, const BasisSymbol& b) const { return tau_.bracket(a, b, cfg_); }

Part TauView::part(const BasisSymbol& s) const { return classify(tau_, s, kind_); }

WeightKey TauView::weight(const BasisSymbol& s) const {
  WeightKey w{s.k0, s.k, {}};
  w.alpha = s.kind == SymbolKind::Loop ? tau_.basis().alpha[s.index] : zero_vector(order(), alpha_size_);
  return w;
}

Rational TauView::key_depth(const WeightKey& key) const {
  switch (kind_) {
    case DecompositionKind::D0: return Rational(key.k0);
    case DecompositionKind::Tau0: return height(key.alpha);
    default: return Rational(key.k0 * scale_) + height(key.alpha);
  }
}

std::vector<BasisSymbol> TauView::symbols(Part p, long kmax, long dmax) const {
  long k0max = 0;
  if (kind_ == DecompositionKind::D0) k0max = dmax;
  if (kind_ == DecompositionKind::Affine) k0max = dmax / scale_ + 1;
  std::vector<BasisSymbol> out;
  for (const auto& s : symbols_in_window(tau_, k0max, kmax)) {
    if (kind_ == DecompositionKind::Tau0 && s.k0 != 0) continue;
    if (part(s) != p) continue;
    const long d = depth(s);
    if (d > dmax || d < -dmax) continue;
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), pbw_less);
  return out;
}

FiniteLieView::FiniteLieView(FiniteLieData data) : d_(std::move(data)) {
  modulus_ = d_.modulus;
  k_size_ = d_.modulus.size();
  alpha_size_ = d_.alpha_size;
}

TauElement FiniteLieView::bracket(const BasisSymbol& a, const BasisSymbol& b) const {
  TauElement out;
  const auto it = d_.sc.find({a.index, b.index});
  if (it == d_.sc.end()) return out;
  for (const auto& [w, c] : it->second) out.add(BasisSymbol::loop(w, 0, {}), c);
  return out;
}

Part FiniteLieView::part(const BasisSymbol& s) const { return d_.part.at(s.index); }

WeightKey FiniteLieView::weight(const BasisSymbol& s) const { return d_.weight.at(s.index); }

std::vector<BasisSymbol> FiniteLieView::all_symbols() const {
  std::vector<BasisSymbol> out;
  for (auto i : d_.indices) out.push_back(BasisSymbol::loop(i, 0, {}));
  return out;
}

std::vector<BasisSymbol> FiniteLieView::symbols(Part p, long, long dmax) const {
  std::vector<BasisSymbol> out;
  for (const auto& s : all_symbols()) {
    if (part(s) != p) continue;
    const long d = depth(s);
    if (d > dmax || d < -dmax) continue;
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), pbw_less);
  return out;
}

FiniteLieView gsigma0_view(const AdaptedBasis& ab, const FiniteRootSystem& delta0) {
  FiniteLieData d;
  d.order = ab.order;
  d.modulus = ab.m;
  d.alpha_size = ab.h0_dim();
  std::set<std::size_t> inside;
  for (std::size_t v = 0; v < ab.dim; ++v)
    if (ab.residue[v].k0 == 0) inside.insert(v);
  for (auto v : inside) {
    d.indices.push_back(v);
    d.labels.push_back(ab.labels[v]);
    d.weight[v] = WeightKey{0, ab.residue[v].k, ab.alpha[v]};
    const int s = lex_sign(ab.alpha[v]);
    d.part[v] = s > 0 ? Part::Plus : s < 0 ? Part::Minus : Part::Zero;
    for (auto u : inside) {
      SparseVec c;
      for (const auto& [w, x] : ab.sc[v][u]) {
        if (!inside.count(w)) throw std::logic_error("g(sigma_0) is not closed under the bracket");
        c.emplace_back(w, x);
      }
      if (!c.empty()) d.sc[{v, u}] = c;
    }
  }
  d.depth = [delta0](const WeightKey& key) -> Rational {
    if (is_zero(key.alpha)) return 0;
    const auto h = delta0.height(key.alpha);
    if (!h) throw std::invalid_argument("weight outside the span of the simple roots of Delta_0");
    return *h;
  };
  return FiniteLieView(std::move(d));
}

FiniteLieView forget_grading(const FiniteLieView& v) {
  FiniteLieData d = v.data();
  d.modulus.clear();
  for (auto& [i, w] : d.weight) w.k.clear();
  return FiniteLieView(std::move(d));
}

// ---------------------------------------------------------------- frozen modules

std::size_t WeightModule::dim(const WeightKey& key) const {
  const auto it = spaces_.find(key);
  return it == spaces_.end() ? 0 : it->second;
}

SparseVec WeightModule::act(const BasisSymbol& s, const WeightKey& key, std::size_t idx) const {
  SparseVec out;
  const auto it = action_.find({s, key});
  if (it == action_.end()) return out;
  const Matrix& m = it->second.second;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m(r, idx).is_zero()) out.emplace_back(r, m(r, idx));
  return out;
}

std::vector<WeightKey> WeightModule::key_classes() const {
  std::vector<WeightKey> out;
  for (const auto& [k, d] : spaces_)
    if (d > 0) out.push_back(k);
  return out;
}

void WeightModule::set_action(const BasisSymbol& s, const WeightKey& key, const WeightKey& target, Matrix m) {
  if (m.rows() != dim(target) || m.cols() != dim(key))
    throw std::invalid_argument("WeightModule: action matrix shape does not match the weight spaces");
  if (m.is_zero()) return;
  action_[{s, key}] = {target, std::move(m)};
}

std::size_t WeightModule::total_dim() const {
  std::size_t s = 0;
  for (const auto& [k, d] : spaces_) s += d;
  return s;
}

Matrix WeightModule::matrix(const BasisSymbol& s, const WeightKey& key, const WeightKey& target) const {
  const auto it = action_.find({s, key});
  if (it == action_.end() || it->second.first != target) return Matrix(order_, dim(target), dim(key));
  return it->second.second;
}

// ---------------------------------------------------------------- W1

GlModule gl1_scalar(int order, const CycScalar& c, const CycScalar& d0) {
  GlModule w;
  w.n = 1;
  w.dim = 1;
  Matrix e(order, 1, 1);
  e(0, 0) = c;
  w.E = {e};
  w.d0 = Matrix(order, 1, 1);
  w.d0(0, 0) = d0;
  return w;
}

GlModule gl2_sym_power(int order, unsigned p, const CycScalar& d0) {
  GlModule w;
  w.n = 2;
  w.dim = p + 1;
  const std::size_t d = w.dim;
  Matrix e11(order, d, d), e12(order, d, d), e21(order, d, d), e22(order, d, d);
  // basis x^(p-i) y^i, E_ij = x_i d/dx_j
  for (std::size_t i = 0; i < d; ++i) {
    e11(i, i) = CycScalar(order, static_cast<long>(p - i));
    e22(i, i) = CycScalar(order, static_cast<long>(i));
    if (i > 0) e12(i - 1, i) = CycScalar(order, static_cast<long>(i));
    if (i + 1 < d) e21(i + 1, i) = CycScalar(order, static_cast<long>(p - i));
  }
  w.E = {e11, e12, e21, e22};
  w.d0 = Matrix::identity(order, d).scaled(d0);
  return w;
}

namespace {
Matrix matrix_from_json(const nlohmann::json& j, int order) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array of rows");
  Matrix m(order, j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (j[r].size() != m.cols()) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = scalar_from_json(j[r][c], order);
  }
  return m;
}
}  // namespace

GlModule gl_from_json(const nlohmann::json& j, int order, std::size_t n, const CycScalar& d0shift) {
  const std::string type = j.value("type", "gl1");
  if (type == "gl1") {
    if (n != 1) throw std::invalid_argument("W1 of type gl1 needs n = 1");
    return gl1_scalar(order, scalar_from_json(j.value("scalar", nlohmann::json("0")), order), d0shift);
  }
  if (type == "sym") {
    if (n != 2) throw std::invalid_argument("W1 of type sym needs n = 2");
    return gl2_sym_power(order, j.at("power").get<unsigned>(), d0shift);
  }
  if (type == "trivial") {
    GlModule w;
    w.n = n;
    w.dim = 1;
    w.E.assign(n * n, Matrix(order, 1, 1));
    w.d0 = Matrix::identity(order, 1).scaled(d0shift);
    return w;
  }
  if (type == "matrices") {
    GlModule w;
    w.n = n;
    const auto& es = j.at("E");
    if (es.size() != n * n) throw std::invalid_argument("W1 needs n^2 matrices E_ij in row-major order");
    for (const auto& e : es) w.E.push_back(matrix_from_json(e, order));
    w.dim = w.E[0].rows();
    for (const auto& e : w.E)
      if (e.rows() != w.dim || e.cols() != w.dim) throw std::invalid_argument("W1 matrices must be square of one size");
    w.d0 = j.contains("d0") ? matrix_from_json(j["d0"], order) : Matrix::identity(order, w.dim).scaled(d0shift);
    return w;
  }
  throw std::invalid_argument("unknown W1 type '" + type + "' (gl1, sym, trivial, matrices)");
}

Report validate_gl(const GlModule& w) {
  Report rep;
  const std::size_t n = w.n;
  std::size_t bad = 0;
  auto E = [&](std::size_t i, std::size_t j) -> const Matrix& { return w.E[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Matrix lhs = E(i, j) * E(k, l) - E(k, l) * E(i, j);
          Matrix rhs(w.d0.order(), w.dim, w.dim);
          if (j == k) rhs = rhs + E(i, l);
          if (l == i) rhs = rhs - E(k, j);
          if (!(lhs == rhs) && bad++ == 0)
            rep.fail("relations", "[E_ij, E_kl] differs from the gl_n relation", {i + 1, j + 1, k + 1, l + 1});
        }
  if (bad == 0) rep.pass("relations", "dim " + std::to_string(w.dim));
  std::size_t noncomm = 0;
  for (const auto& e : w.E)
    if (!(e * w.d0 == w.d0 * e)) ++noncomm;
  if (noncomm) rep.fail("d0", "the d0-operator does not commute with gl_n");
  else rep.pass("d0");
  return rep;
}

// ---------------------------------------------------------------- parameters

ModuleParams params_from_json(const nlohmann::json& j, int order, std::size_t n) {
  ModuleParams p;
  auto vec = [&](const char* name, std::size_t len, std::vector<CycScalar> dflt) {
    if (!j.contains(name)) return dflt;
    std::vector<CycScalar> out;
    for (const auto& x : j[name]) out.push_back(scalar_from_json(x, order));
    if (out.size() != len) throw std::invalid_argument(std::string(name) + " must have length " + std::to_string(len));
    return out;
  };
  if (j.contains("C0")) p.C0 = scalar_from_json(j["C0"], order);
  else if (j.contains("psi")) p.C0 = scalar_from_json(j["psi"].at(0), order);
  else throw std::invalid_argument("module params need C0");
  std::vector<CycScalar> psi(n + 1, CycScalar(order));
  psi[0] = p.C0;
  p.psi = vec("psi", n + 1, psi);
  p.d0shift = scalar_from_json(j.value("d0shift", nlohmann::json("0")), order);
  p.alpha_shift = vec("alpha_shift", n, std::vector<CycScalar>(n, CycScalar(order)));
  p.lambda_shift = vec("lambda_shift", n, p.alpha_shift);
  p.w1 = gl_from_json(j.value("W1", nlohmann::json{{"type", n == 1 ? "gl1" : "trivial"}}), order, n, p.d0shift);
  if (p.w1.n != n) throw std::invalid_argument("W1 must be a gl_n module with n = " + std::to_string(n));
  const auto w2 = j.value("W2", nlohmann::json::object());
  for (const auto& x : w2.value("labels", nlohmann::json::array())) p.w2_labels.push_back(parse_rational(x.is_string() ? x.get<std::string>() : x.dump()));
  p.w2_grade = w2.value("grade", std::vector<long>(n, 0));
  if (p.w2_grade.size() != n) throw std::invalid_argument("W2 grade must have length n");
  return p;
}

Report check_params(const ModuleParams& p, int dual_coxeter) {
  Report rep;
  if (p.C0.is_zero()) rep.fail("params.C0", "K_0 must act by a nonzero scalar C_0");
  else rep.pass("params.C0", p.C0.str());
  if (!(p.psi[0] == p.C0)) rep.fail("params.psi", "psi(K_0) must equal C_0");
  std::size_t bad = 0;
  for (std::size_t i = 1; i < p.psi.size(); ++i)
    if (!p.psi[i].is_zero()) {
      ++bad;
      rep.fail("params.psi",
               "psi(K_i) must vanish for 1 <= i <= n: a bounded category with this central character is trivial",
               {{"i", i}, {"psi", p.psi[i].str()}});
    }
  if (bad == 0 && p.psi[0] == p.C0) rep.pass("params.psi");
  if (p.lambda_shift != p.alpha_shift) rep.fail("params.lambda_shift", "lambda_shift must equal alpha_shift");
  if (p.C0 == CycScalar(p.C0.order(), static_cast<long>(-dual_coxeter)))
    rep.warn("params.critical_level", "C_0 = -h^vee: accepted, but outside the range of the tensor-product realization");
  rep.append(validate_gl(p.w1), "params.W1");
  return rep;
}

Vector weight_from_labels(const FiniteRootSystem& delta0, const std::vector<Rational>& labels, int order) {
  const auto& simple = delta0.simple_roots();
  if (labels.size() != simple.size())
    throw std::invalid_argument("W2 needs " + std::to_string(simple.size()) + " Dynkin labels");
  const std::size_t r = delta0.coordinate_dim();
  Matrix a(order, simple.size(), r);
  Vector rhs;
  for (std::size_t i = 0; i < simple.size(); ++i) {
    const CycScalar len = delta0.inner(simple[i], simple[i]);
    for (std::size_t j = 0; j < r; ++j) {
      Vector e = zero_vector(order, r);
      e[j] = CycScalar(order, 1L);
      a(i, j) = CycScalar(order, 2L) * delta0.inner(e, simple[i]) / len;
    }
    rhs.push_back(CycScalar(order, labels[i]));
  }
  auto mu = solve(a, rhs);
  if (!mu) throw std::invalid_argument("no weight with these Dynkin labels");
  return *mu;
}

WeightModule w2_top(const AdaptedBasis& ab, const Vector& mu, const std::vector<long>& grade) {
  WeightModule w(ab.order);
  const WeightKey key{0, grade, mu};
  w.set_space(key, 1);
  for (std::size_t j = 0; j < ab.h0_dim(); ++j) {
    Matrix m(ab.order, 1, 1);
    m(0, 0) = mu[j];
    w.set_action(BasisSymbol::loop(ab.h0_index[j], 0, {}), key, key, m);
  }
  return w;
}

// ---------------------------------------------------------------- T' and S'

LoopModule::LoopModule(const ToroidalAlgebra& tau, const ModuleParams& params, const WeightModule& w2, bool full)
    : tau_(tau), p_(params), w2_(w2), full_(full) {
  for (const auto& [key, d] : w2.spaces()) {
    if (key.k.size() != tau.n()) throw std::invalid_argument("W2 grading tags must have length n");
    for (std::size_t i = 0; i < tau.n(); ++i)
      if (key.k[i] < 0 || key.k[i] >= tau.m()[i]) throw std::invalid_argument("W2 grading incompatible with Lambda");
  }
}

bool LoopModule::acts(const BasisSymbol& s) const {
  if (s.k0 != 0 || !tau_.valid(s)) return false;
  if (s.kind == SymbolKind::Loop && !full_) return is_zero(tau_.basis().alpha[s.index]);
  return true;
}

WeightKey LoopModule::w2_key(const WeightKey& key) const {
  WeightKey r{0, key.k, key.alpha};
  for (std::size_t i = 0; i < r.k.size(); ++i) r.k[i] = positive_mod(r.k[i], tau_.m()[i]);
  return r;
}

std::size_t LoopModule::dim(const WeightKey& key) const {
  if (key.k0 != 0) return 0;
  return p_.w1.dim * w2_.dim(w2_key(key));
}

SparseVec LoopModule::act(const BasisSymbol& s, const WeightKey& key, std::size_t idx) const {
  if (!acts(s)) throw std::invalid_argument("symbol " + s.str() + " is outside the algebra acting on this module");
  const int N = order();
  const std::size_t d2 = w2_.dim(w2_key(key));
  const std::size_t i1 = idx / d2, i2 = idx % d2;
  SparseVec out;
  switch (s.kind) {
    case SymbolKind::Loop: {
      const WeightKey src = w2_key(key);
      WeightKey tgt{0, key.k, key.alpha};
      for (std::size_t i = 0; i < tgt.k.size(); ++i) tgt.k[i] += s.k[i];
      const Vector& a = tau_.basis().alpha[s.index];
      for (std::size_t i = 0; i < a.size(); ++i) tgt.alpha[i] += a[i];
      const std::size_t d2t = w2_.dim(w2_key(tgt));
      for (const auto& [j2, c] : w2_.act(BasisSymbol::loop(s.index, 0, {}), src, i2)) out.emplace_back(i1 * d2t + j2, c);
      return out;
    }
    case SymbolKind::Central:
      if (s.index == 0) out.emplace_back(idx, p_.C0);
      return out;
    case SymbolKind::Deriv:
      if (s.index == 0) {
        for (std::size_t j1 = 0; j1 < p_.w1.dim; ++j1)
          if (!p_.w1.d0(j1, i1).is_zero()) out.emplace_back(j1 * d2 + i2, p_.w1.d0(j1, i1));
        return out;
      }
      {
        const std::size_t a = s.index - 1, n = tau_.n();
        std::vector<CycScalar> col(p_.w1.dim, CycScalar(N));
        col[i1] = CycScalar(N, key.k[a]) + p_.alpha_shift[a];
        for (std::size_t j = 0; j < n; ++j) {
          if (s.k[j] == 0) continue;
          const Matrix& e = p_.w1.E[j * n + a];
          for (std::size_t r = 0; r < p_.w1.dim; ++r) col[r] += CycScalar(N, s.k[j]) * e(r, i1);
        }
        for (std::size_t r = 0; r < col.size(); ++r)
          if (!col[r].is_zero()) out.emplace_back(r * d2 + i2, col[r]);
      }
      return out;
  }
  return out;
}

std::vector<WeightKey> LoopModule::key_classes() const {
  std::set<WeightKey> s;
  for (const auto& [key, d] : w2_.spaces())
    if (d > 0) s.insert(WeightKey{0, std::vector<long>(tau_.n(), 0), key.alpha});
  return {s.begin(), s.end()};
}

std::vector<WeightKey> box_keys(const std::vector<WeightKey>& classes, long kbox) {
  std::set<WeightKey> out;
  for (const auto& c : classes) {
    std::vector<long> k(c.k.size(), -kbox);
    while (true) {
      WeightKey key = c;
      key.k = k;
      out.insert(key);
      std::size_t i = 0;
      for (; i < k.size(); ++i) {
        if (++k[i] <= kbox) break;
        k[i] = -kbox;
      }
      if (i == k.size()) break;
    }
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------- checks

Matrix action_matrix(const TopModule& m, const AlgebraView& view, const BasisSymbol& s, const WeightKey& key) {
  const WeightKey tgt = view.add(key, view.weight(s));
  Matrix out(m.order(), m.dim(tgt), m.dim(key));
  if (out.rows() == 0) return out;
  for (std::size_t c = 0; c < out.cols(); ++c)
    for (const auto& [r, x] : m.act(s, key, c)) out(r, c) += x;
  return out;
}

Vector act_element(const TopModule& m, const AlgebraView& view, const TauElement& x, const WeightKey& key,
                   const Vector& v) {
  Vector out;
  for (const auto& [s, c] : x.terms()) {
    const Vector w = action_matrix(m, view, s, key) * v;
    if (out.empty()) out = zero_vector(m.order(), w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] += c * w[i];
  }
  return out;
}

namespace {
Matrix element_matrix(const TopModule& m, const AlgebraView& view, const TauElement& x, const WeightKey& key,
                      const WeightKey& tgt) {
  Matrix out(m.order(), m.dim(tgt), m.dim(key));
  for (const auto& [s, c] : x.terms()) {
    if (view.add(key, view.weight(s)) != tgt) throw std::logic_error("inhomogeneous bracket");
    out = out + action_matrix(m, view, s, key).scaled(c);
  }
  return out;
}

nlohmann::json vector_json(const Vector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(x.str());
  return j;
}

std::vector<Vector> annihilator(const std::vector<Vector>& span, int order, std::size_t dim) {
  if (span.empty()) {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < dim; ++i) {
      Vector e = zero_vector(order, dim);
      e[i] = CycScalar(order, 1L);
      out.push_back(e);
    }
    return out;
  }
  return nullspace(Matrix::from_columns(order, dim, span).transpose());
}
}  // namespace

Report check_module_axioms(const TopModule& m, const AlgebraView& view, const std::vector<BasisSymbol>& symbols,
                           const std::vector<WeightKey>& keys, std::size_t pairs, std::uint64_t seed) {
  Report rep;
  Sampler rng(seed);
  std::size_t checked = 0, bad = 0;
  for (std::size_t t = 0; t < pairs; ++t) {
    const BasisSymbol& x = symbols[rng.index(symbols.size())];
    const BasisSymbol& y = symbols[rng.index(symbols.size())];
    const TauElement br = view.bracket(x, y);
    const WeightKey wx = view.weight(x), wy = view.weight(y);
    for (const auto& key : keys) {
      if (m.dim(key) == 0) continue;
      const WeightKey kx = view.add(key, wx), ky = view.add(key, wy), kxy = view.add(kx, wy);
      const Matrix lhs = element_matrix(m, view, br, key, kxy);
      const Matrix rhs = action_matrix(m, view, x, ky) * action_matrix(m, view, y, key) -
                         action_matrix(m, view, y, kx) * action_matrix(m, view, x, key);
      checked += m.dim(key);
      if (!(lhs == rhs) && bad++ < 3)
        rep.fail("module_axiom", "action([x,y]) differs from [action(x), action(y)]",
                 {{"x", x.str()}, {"y", y.str()}, {"key", to_json(key)}, {"bracket", br.str()}});
    }
  }
  if (bad == 0)
    rep.pass("module_axiom", std::to_string(pairs) + " pairs, " + std::to_string(checked) + " vector checks");
  return rep;
}

Report window_irreducibility(const TopModule& m, const AlgebraView& view, const std::vector<BasisSymbol>& symbols,
                             const std::vector<WeightKey>& keys, const WeightKey& cyclic) {
  Report rep;
  const int N = m.order();
  const std::set<WeightKey> inside(keys.begin(), keys.end());
  std::map<WeightKey, std::vector<Vector>> avoid;
  for (const auto& k : keys) avoid[k] = k == cyclic ? std::vector<Vector>{} : annihilator({}, N, m.dim(k));
  if (m.dim(cyclic) == 0 || !inside.count(cyclic)) {
    rep.fail("irreducible.cyclic", "the cyclic weight space is empty or outside the window", to_json(cyclic));
    return rep;
  }
  std::map<std::pair<BasisSymbol, WeightKey>, Matrix> cache;
  auto A = [&](const BasisSymbol& s, const WeightKey& k) -> const Matrix& {
    auto it = cache.find({s, k});
    if (it == cache.end()) it = cache.emplace(std::make_pair(s, k), action_matrix(m, view, s, k)).first;
    return it->second;
  };
  // largest family of subspaces, zero at the cyclic key, stable under every symbol staying in the window
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& k : keys) {
      auto& cur = avoid[k];
      if (cur.empty()) continue;
      const std::size_t d = m.dim(k);
      const Matrix b = Matrix::from_columns(N, d, cur);
      Matrix stacked(N, 0, cur.size());
      for (const auto& s : symbols) {
        const WeightKey t = view.add(k, view.weight(s));
        if (!inside.count(t) || m.dim(t) == 0) continue;
        const auto ann = annihilator(avoid[t], N, m.dim(t));
        if (ann.empty()) continue;
        stacked = stacked.vcat(Matrix::from_rows(N, m.dim(t), ann) * A(s, k) * b);
      }
      const auto ns = nullspace(stacked);
      if (ns.size() < cur.size()) {
        std::vector<Vector> next;
        for (const auto& y : ns) next.push_back(b * y);
        cur = next;
        changed = true;
      }
    }
  }
  std::size_t bad = 0;
  for (const auto& k : keys)
    if (!avoid[k].empty() && bad++ < 3)
      rep.fail("irreducible.reach", "a nonzero vector generates nothing in the cyclic weight space",
               {{"key", to_json(k)}, {"vector", vector_json(avoid[k][0])}});
  if (bad == 0) rep.pass("irreducible.reach", std::to_string(keys.size()) + " weight spaces");

  // Burnside on the cyclic space
  const std::size_t dc = m.dim(cyclic);
  std::vector<Matrix> words{Matrix::identity(N, dc)};
  for (const auto& s1 : symbols) {
    const WeightKey t = view.add(cyclic, view.weight(s1));
    if (!inside.count(t) || m.dim(t) == 0) continue;
    if (t == cyclic) words.push_back(A(s1, cyclic));
    for (const auto& s2 : symbols)
      if (view.add(t, view.weight(s2)) == cyclic) words.push_back(A(s2, t) * A(s1, cyclic));
  }
  auto flat = [&](const Matrix& x) {
    Vector v;
    for (std::size_t r = 0; r < dc; ++r)
      for (std::size_t c = 0; c < dc; ++c) v.push_back(x(r, c));
    return v;
  };
  std::vector<Matrix> basis;
  std::vector<Vector> flats;
  auto add = [&](const Matrix& x) {
    if (span_contains(flats, flat(x), N, dc * dc)) return false;
    basis.push_back(x);
    flats.push_back(flat(x));
    return true;
  };
  for (const auto& w : words) add(w);
  bool grew = true;
  while (grew && basis.size() < dc * dc) {
    grew = false;
    const auto snapshot = basis;
    for (const auto& a : snapshot)
      for (const auto& b : snapshot)
        if (add(a * b)) grew = true;
  }
  if (basis.size() == dc * dc) rep.pass("irreducible.cyclic", "return algebra is all of End, dim " + std::to_string(dc));
  else
    rep.fail("irreducible.cyclic", "return algebra on the cyclic space is a proper subalgebra",
             {{"dim", basis.size()}, {"expected", dc * dc}});
  return rep;
}

std::vector<Vector> singular_vectors(const TopModule& m, const AlgebraView& view, const std::vector<BasisSymbol>& plus,
                                     const WeightKey& key) {
  const std::size_t d = m.dim(key);
  Matrix stacked(m.order(), 0, d);
  for (const auto& s : plus) stacked = stacked.vcat(action_matrix(m, view, s, key));
  return nullspace(stacked);
}

}  // namespace toroidal
