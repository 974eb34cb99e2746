#include "toroidal/thin_cover.hpp"

#include <set>
#include <stdexcept>

namespace toroidal {

namespace {

Vector flatten(const Matrix& m) {
  Vector v;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

Matrix unit(int order, std::size_t n, std::size_t r, std::size_t c, long x = 1) {
  Matrix m(order, n, n);
  m(r, c) = CycScalar(order, x);
  return m;
}

std::vector<long> tag_sum(const std::vector<long>& a, const std::vector<long>& b, const std::vector<long>& mod) {
  std::vector<long> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = positive_mod(a[i] + b[i], mod[i]);
  return r;
}

// ---------------------------------------------------------------- decomposition

std::vector<Matrix> commutant(const std::vector<Matrix>& ops, int order, std::size_t d) {
  std::vector<Vector> rows;
  for (const auto& a : ops)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        // (X A - A X)_{ij}
        Vector row = zero_vector(order, d * d);
        for (std::size_t t = 0; t < d; ++t) {
          row[i * d + t] += a(t, j);
          row[t * d + j] -= a(i, t);
        }
        if (!is_zero(row)) rows.push_back(row);
      }
  std::vector<Matrix> out;
  if (rows.empty()) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) out.push_back(unit(order, d, i, j));
    return out;
  }
  for (const auto& v : nullspace(Matrix::from_rows(order, d * d, rows))) {
    Matrix m(order, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = v[i * d + j];
    out.push_back(m);
  }
  return out;
}

// coefficients c_0..c_d of det(xI - A), Faddeev-LeVerrier
std::vector<CycScalar> charpoly(const Matrix& a) {
  const int N = a.order();
  const std::size_t d = a.rows();
  std::vector<CycScalar> c(d + 1, CycScalar(N));
  c[d] = CycScalar(N, 1L);
  Matrix m(N, d, d);
  const Matrix id = Matrix::identity(N, d);
  for (std::size_t k = 1; k <= d; ++k) {
    m = a * m + id.scaled(c[d - k + 1]);
    const Matrix am = a * m;
    CycScalar tr(N);
    for (std::size_t i = 0; i < d; ++i) tr += am(i, i);
    c[d - k] = -tr / CycScalar(N, static_cast<long>(k));
  }
  return c;
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n > 1000000000) return out;
  for (mpz_class p = 1; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      if (p * p != n) out.push_back(n / p);
    }
  return out;
}

std::optional<Rational> rational_root(const std::vector<CycScalar>& c) {
  for (const auto& x : c)
    if (!x.is_rational()) return std::nullopt;
  mpz_class l = 1;
  for (const auto& x : c) l = lcm(l, x.rational().get_den());
  std::vector<mpz_class> a;
  for (const auto& x : c) a.push_back(mpz_class(x.rational() * l));
  std::size_t low = 0;
  while (low < a.size() && a[low] == 0) ++low;
  if (low > 0) return Rational(0);
  auto eval = [&](const Rational& x) {
    Rational s = 0;
    for (std::size_t i = a.size(); i-- > 0;) s = s * x + Rational(a[i]);
    return s;
  };
  for (const auto& p : divisors(a.front()))
    for (const auto& q : divisors(a.back()))
      for (int sg : {1, -1}) {
        Rational x(p * sg, q);
        x.canonicalize();
        if (eval(x) == 0) return x;
      }
  return std::nullopt;
}

// columns of `basis` spanning a submodule U; action of each op in that basis
std::vector<Matrix> restrict_ops(const std::vector<Matrix>& ops, const Matrix& basis) {
  std::vector<Matrix> out;
  for (const auto& a : ops) {
    auto r = solve(basis, a * basis);
    if (!r) throw std::logic_error("decompose_module: subspace is not a submodule");
    out.push_back(*r);
  }
  return out;
}

void split_into(const std::vector<Matrix>& ops, const Matrix& basis, int order, Decomposition& out) {
  const std::size_t r = basis.cols();
  const auto local = restrict_ops(ops, basis);
  const auto comm = commutant(local, order, r);
  if (comm.size() <= 1) {
    out.summands.push_back(basis.columns());
    return;
  }
  std::vector<Matrix> candidates = comm;
  for (std::size_t i = 0; i < comm.size(); ++i)
    for (std::size_t j = i + 1; j < comm.size(); ++j) candidates.push_back(comm[i] - comm[j]);
  const Matrix id = Matrix::identity(order, r);
  for (const auto& c : candidates) {
    bool scalar = c.is_diagonal();
    for (std::size_t i = 1; scalar && i < r; ++i) scalar = c(i, i) == c(0, 0);
    if (scalar) continue;
    const auto lam = rational_root(charpoly(c));
    if (!lam) continue;
    // Fitting decomposition of c - lam: kernel and image of its r-th power
    const Matrix p = (c - id.scaled(CycScalar(order, *lam))).pow(static_cast<unsigned>(r));
    const auto ker = nullspace(p);
    const auto im = column_basis(p.columns(), order, r);
    if (ker.empty() || im.empty()) continue;
    split_into(ops, basis * Matrix::from_columns(order, r, ker), order, out);
    split_into(ops, basis * Matrix::from_columns(order, r, im), order, out);
    return;
  }
  out.split = false;
  out.summands.push_back(basis.columns());
}

std::size_t span_dim(const std::vector<Vector>& vs, int order, std::size_t dim) {
  return column_basis(vs, order, dim).size();
}

Matrix stack_columns(int order, std::size_t rows, const std::vector<Vector>& cols) {
  return Matrix::from_columns(order, rows, cols);
}

}  // namespace

// ---------------------------------------------------------------- algebras and examples

FiniteLieView graded_matrix_algebra(int order, const std::vector<Matrix>& basis, const std::vector<std::string>& labels,
                                    const std::vector<long>& degree, const std::vector<std::vector<long>>& tags,
                                    const std::vector<long>& modulus) {
  const std::size_t d = basis.size();
  std::vector<Vector> cols;
  for (const auto& b : basis) cols.push_back(flatten(b));
  const Matrix flat = Matrix::from_columns(order, cols.front().size(), cols);
  FiniteLieData data;
  data.order = order;
  data.modulus = modulus;
  data.alpha_size = 0;
  for (std::size_t i = 0; i < d; ++i) {
    data.indices.push_back(i);
    data.labels.push_back(labels[i]);
    data.weight[i] = WeightKey{degree[i], tags[i], {}};
    data.part[i] = degree[i] > 0 ? Part::Plus : degree[i] < 0 ? Part::Minus : Part::Zero;
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto c = solve(flat, flatten(basis[i] * basis[j] - basis[j] * basis[i]));
      if (!c) throw std::invalid_argument("graded_matrix_algebra: span is not closed under commutators");
      SparseVec sv;
      for (std::size_t k = 0; k < d; ++k) {
        if ((*c)[k].is_zero()) continue;
        if (degree[k] != degree[i] + degree[j] || tags[k] != tag_sum(tags[i], tags[j], modulus))
          throw std::invalid_argument("graded_matrix_algebra: bracket " + labels[i] + ", " + labels[j] +
                                      " breaks the grading");
        sv.emplace_back(k, (*c)[k]);
      }
      if (!sv.empty()) data.sc[{i, j}] = sv;
    }
  data.depth = [](const WeightKey& key) { return Rational(key.k0); };
  return FiniteLieView(std::move(data));
}

ThinCoverExample heisenberg_example() {
  const int N = 1;
  Matrix d0(N, 3, 3);
  d0(0, 0) = CycScalar(N, 1L);
  d0(2, 2) = CycScalar(N, 1L);
  FiniteLieView g = graded_matrix_algebra(N, {unit(N, 3, 0, 1), unit(N, 3, 0, 2), d0, unit(N, 3, 1, 2)},
                                          {"x+", "z", "d0", "x-"}, {1, 0, 0, -1}, {{0}, {1}, {0}, {1}}, {2});
  WeightModule n(N);
  const WeightKey key{0, {}, {}};
  n.set_space(key, 1);
  Matrix one(N, 1, 1);
  one(0, 0) = CycScalar(N, 1L);
  n.set_action(BasisSymbol::loop(1, 0, {}), key, key, one);
  const Vector v{CycScalar(N, 1L)};
  return {"heisenberg", std::move(g), std::move(n), CoverFamily{{{0}, {v}}, {{1}, {v}}}};
}

ThinCoverExample sl3_gl2_example() {
  const int N = 1;
  Matrix h(N, 3, 3), c(N, 3, 3);
  h(0, 0) = CycScalar(N, 1L);
  h(1, 1) = CycScalar(N, -1L);
  c(0, 0) = CycScalar(N, Rational(1, 3));
  c(1, 1) = CycScalar(N, Rational(1, 3));
  c(2, 2) = CycScalar(N, Rational(-2, 3));
  std::vector<Matrix> basis{unit(N, 3, 0, 2), unit(N, 3, 1, 2), h, c, unit(N, 3, 0, 1), unit(N, 3, 1, 0),
                            unit(N, 3, 2, 0), unit(N, 3, 2, 1)};
  FiniteLieView g = graded_matrix_algebra(N, basis, {"E13", "E23", "H", "D", "E12", "E21", "E31", "E32"},
                                          {1, 1, 0, 0, 0, 0, -1, -1}, {{0}, {1}, {0}, {0}, {1}, {1}, {0}, {1}}, {2});
  WeightModule n(N);
  const WeightKey key{0, {}, {}};
  n.set_space(key, 2);
  for (std::size_t i = 2; i < 6; ++i) n.set_action(BasisSymbol::loop(i, 0, {}), key, key, basis[i].select({0, 1}, {0, 1}));
  const Vector e1{CycScalar(N, 1L), CycScalar(N)}, e2{CycScalar(N), CycScalar(N, 1L)};
  return {"sl3-gl2", std::move(g), std::move(n), CoverFamily{{{0}, {e1}}, {{1}, {e2}}}};
}

Decomposition decompose_module(const std::vector<Matrix>& ops, int order, std::size_t dim) {
  Decomposition out;
  if (dim == 0) return out;
  split_into(ops, Matrix::identity(order, dim), order, out);
  return out;
}

// ---------------------------------------------------------------- lift and restrict

Report thin_cover_lift_restrict(const FiniteLieView& g, const WeightModule& n, const CoverFamily& cover, long depth) {
  Report rep;
  const int N = g.order();
  const auto nkeys = n.key_classes();
  if (nkeys.size() != 1) throw std::invalid_argument("thin_cover_lift_restrict: N must have exactly one weight space");
  const WeightKey ntop = nkeys.front();
  const std::size_t nd = n.dim(ntop);
  const FiniteLieView flat = forget_grading(g);
  const std::vector<long>& mod = g.data().modulus;
  std::vector<BasisSymbol> zero, all = g.all_symbols();
  for (const auto& s : all)
    if (g.part(s) == Part::Zero) zero.push_back(s);

  // N_gr: one weight space per tag, the pieces as bases
  WeightModule ngr(N);
  std::map<std::vector<long>, Matrix> piece;
  for (const auto& [tag, vs] : cover) {
    const auto b = column_basis(vs, N, nd);
    if (b.empty()) continue;
    piece[tag] = stack_columns(N, nd, b);
    ngr.set_space(WeightKey{ntop.k0, tag, ntop.alpha}, b.size());
  }
  std::size_t axiom_bad = 0;
  for (const auto& x : zero) {
    const Matrix a = n.matrix(x, ntop, ntop);
    for (const auto& [tag, b] : piece) {
      const auto t = tag_sum(tag, g.weight(x).k, mod);
      const WeightKey src{ntop.k0, tag, ntop.alpha}, tgt{ntop.k0, t, ntop.alpha};
      const Matrix img = a * b;
      if (img.is_zero()) continue;
      const auto it = piece.find(t);
      const auto m = it == piece.end() ? std::nullopt : solve(it->second, img);
      if (!m) {
        ++axiom_bad;
        rep.fail("thin_cover.family", "the family is not stable under the degree-0 part",
                 {{"symbol", g.data().labels[x.index]}, {"tag", tag}});
        continue;
      }
      ngr.set_action(x, src, tgt, *m);
    }
  }
  {
    std::vector<Vector> all_vs;
    for (const auto& [tag, b] : piece)
      for (const auto& v : b.columns()) all_vs.push_back(v);
    if (span_dim(all_vs, N, nd) != nd) {
      ++axiom_bad;
      rep.fail("thin_cover.family", "the pieces do not span N");
    }
  }
  if (axiom_bad > 0) return rep;
  rep.pass("thin_cover.family", "family spans N and is stable", {{"dim_N", nd}, {"dim_N_gr", ngr.total_dim()}});

  // pi0: N_gr -> N, and N_gr as an ungraded module for the degree-0 part
  const auto gkeys = ngr.key_classes();
  std::vector<std::size_t> offset;
  std::size_t gd = 0;
  for (const auto& k : gkeys) {
    offset.push_back(gd);
    gd += ngr.dim(k);
  }
  Matrix pi0(N, nd, gd);
  for (std::size_t i = 0; i < gkeys.size(); ++i) {
    const Matrix& b = piece.at(gkeys[i].k);
    for (std::size_t r = 0; r < nd; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) pi0(r, offset[i] + c) = b(r, c);
  }
  std::vector<Matrix> ops;
  for (const auto& x : zero) {
    Matrix a(N, gd, gd);
    for (std::size_t i = 0; i < gkeys.size(); ++i)
      for (std::size_t j = 0; j < gkeys.size(); ++j) {
        const Matrix m = ngr.matrix(x, gkeys[i], gkeys[j]);
        if (gkeys[j] != g.add(gkeys[i], g.weight(x))) continue;
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t c = 0; c < m.cols(); ++c) a(offset[j] + r, offset[i] + c) = m(r, c);
      }
    ops.push_back(a);
  }

  // (a) complete reducibility of N_gr with N as a summand
  const Decomposition dec = decompose_module(ops, N, gd);
  std::vector<std::size_t> dims;
  std::optional<std::size_t> n_index;
  for (std::size_t i = 0; i < dec.summands.size(); ++i) {
    dims.push_back(dec.summands[i].size());
    const Matrix b = stack_columns(N, gd, dec.summands[i]);
    if (!n_index && dec.summands[i].size() == nd && rank(pi0 * b) == nd) n_index = i;
  }
  std::vector<Vector> joined;
  for (const auto& s : dec.summands) joined.insert(joined.end(), s.begin(), s.end());
  const nlohmann::json dw{{"summand_dims", dims}, {"split", dec.split}};
  if (span_dim(joined, N, gd) != gd || joined.size() != gd) rep.fail("thin_cover.decomposition", "summands are not a direct sum", dw);
  else if (!n_index) rep.fail("thin_cover.decomposition", "no summand maps isomorphically onto N", dw);
  else {
    if (!dec.split) rep.warn("thin_cover.decomposition.split", "a summand has a commutant that does not split over the field", dw);
    rep.pass("thin_cover.decomposition", "N_gr is a direct sum with N as a summand", dw);
  }
  bool hom = true;
  for (std::size_t i = 0; i < zero.size(); ++i)
    hom = hom && pi0 * ops[i] == n.matrix(zero[i], ntop, ntop) * pi0;
  if (hom) rep.pass("thin_cover.pi0");
  else rep.fail("thin_cover.pi0", "N_gr -> N is not a module map");

  // minimality: the family is thin exactly when N_gr is graded-irreducible
  const Report irr = window_irreducibility(ngr, g, zero, gkeys, gkeys.front());
  if (irr.ok()) rep.pass("thin_cover.minimal", "N_gr is graded-irreducible");
  else rep.fail("thin_cover.minimal", "N_gr has a proper graded submodule: a smaller family exists", irr.to_json());

  // lift: L(N_gr) and L(N) down to the given depth
  InducedModule lgr(g, ngr, InductionWindow{0, depth});
  InducedModule ln(flat, n, InductionWindow{0, depth});
  auto strip = [](WeightKey k) {
    k.k.clear();
    return k;
  };
  std::map<WeightKey, std::vector<WeightKey>> levels;  // ungraded key -> graded keys
  for (const auto& k : lgr.window_keys(0))
    if (lgr.quotient_dim(k) > 0) levels[strip(k)].push_back(k);
  std::map<WeightKey, Matrix> pi;
  for (const auto& [lk, gks] : levels)
    for (const auto& gk : gks) {
      const auto& basis = lgr.quotient_basis(gk);
      Matrix m(N, ln.quotient_dim(lk), basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c) {
        MVec img;
        for (const auto& [mono, coef] : basis[c]) {
          MVec v;
          const auto it = std::find(gkeys.begin(), gkeys.end(), mono.top);
          const std::size_t col = offset[static_cast<std::size_t>(it - gkeys.begin())] + mono.idx;
          for (std::size_t r = 0; r < nd; ++r)
            if (!pi0(r, col).is_zero()) v[Monomial{{}, ntop, r}] = pi0(r, col);
          for (auto op = mono.ops.rbegin(); op != mono.ops.rend(); ++op) v = ln.act(*op, v);
          for (const auto& [mm, x] : v) img[mm] += coef * x;
        }
        std::erase_if(img, [](const auto& e) { return e.second.is_zero(); });
        const Vector f = ln.coordinates(lk, img);
        for (std::size_t r = 0; r < f.size(); ++r) m(r, c) = f[r];
      }
      pi[gk] = m;
    }

  std::size_t hom_bad = 0, cover_bad = 0;
  for (const auto& [gk, m] : pi)
    for (const auto& x : all) {
      const WeightKey t = g.add(gk, g.weight(x));
      if (lgr.depth(t) < -depth || lgr.depth(t) > 0) continue;
      const Matrix lhs = pi.count(t) ? pi.at(t) * lgr.quotient_action(x, gk) : Matrix(N, ln.quotient_dim(strip(t)), m.cols());
      const Matrix rhs = ln.quotient_action(x, strip(gk)) * m;
      if (!(lhs == rhs)) {
        ++hom_bad;
        if (hom_bad <= 3) rep.fail("thin_cover.pi", "pi does not intertwine", {{"symbol", g.data().labels[x.index]}, {"key", to_json(gk)}});
      }
      // axiom (2): x . pi(L_k) inside pi(L_{k + tag(x)})
      const auto img = (ln.quotient_action(x, strip(gk)) * m).columns();
      const auto target = pi.count(t) ? pi.at(t).columns() : std::vector<Vector>{};
      for (const auto& v : img)
        if (!is_zero(v) && !span_contains(target, v, N, ln.quotient_dim(strip(t)))) {
          ++cover_bad;
          if (cover_bad <= 3) rep.fail("thin_cover.axiom2", "image of a piece leaves the shifted piece", {{"symbol", g.data().labels[x.index]}, {"key", to_json(gk)}});
          break;
        }
    }
  if (hom_bad == 0) rep.pass("thin_cover.pi", "L(N_gr) -> L(N) intertwines on the window");
  if (cover_bad == 0) rep.pass("thin_cover.axiom2");

  // axiom (1), complete reducibility of L(N_gr) on the window, pi onto L(N) from the N summand
  std::size_t sum_bad = 0, split_bad = 0;
  nlohmann::json table = nlohmann::json::array();
  // generated submodules, one per summand: vectors per ungraded level in concatenated graded coordinates
  std::vector<std::map<WeightKey, std::vector<Vector>>> gen(dec.summands.size());
  std::map<WeightKey, std::vector<std::size_t>> loff;
  std::map<WeightKey, std::size_t> ldim;
  for (const auto& [lk, gks] : levels) {
    std::size_t o = 0;
    for (const auto& gk : gks) {
      loff[lk].push_back(o);
      o += lgr.quotient_dim(gk);
    }
    ldim[lk] = o;
  }
  auto graded_block = [&](const WeightKey& lk, const WeightKey& gk) {
    const auto& gks = levels.at(lk);
    return loff.at(lk)[static_cast<std::size_t>(std::find(gks.begin(), gks.end(), gk) - gks.begin())];
  };
  std::vector<BasisSymbol> minus;
  for (const auto& s : all)
    if (g.part(s) == Part::Minus) minus.push_back(s);
  std::vector<WeightKey> order_keys;
  for (const auto& [lk, gks] : levels) order_keys.push_back(lk);
  std::sort(order_keys.begin(), order_keys.end(),
            [&](const WeightKey& a, const WeightKey& b) { return ln.depth(a) > ln.depth(b) || (ln.depth(a) == ln.depth(b) && a < b); });
  for (std::size_t i = 0; i < dec.summands.size(); ++i) {
    const WeightKey top = strip(gkeys.front());
    for (const auto& lk : order_keys) {
      std::vector<Vector> span;
      if (lk == top) {
        span = dec.summands[i];  // top coordinates coincide with N_gr coordinates
      } else {
        for (const auto& x : minus) {
          const WeightKey src = flat.sub(lk, flat.weight(x));
          if (!gen[i].count(src)) continue;
          for (const auto& v : gen[i].at(src)) {
            Vector w = zero_vector(N, ldim.at(lk));
            for (const auto& sgk : levels.at(src)) {
              const WeightKey tgk = g.add(sgk, g.weight(x));
              if (!pi.count(tgk)) continue;
              const Matrix a = lgr.quotient_action(x, sgk);
              const std::size_t so = graded_block(src, sgk), to = graded_block(lk, tgk);
              for (std::size_t r = 0; r < a.rows(); ++r)
                for (std::size_t c = 0; c < a.cols(); ++c) w[to + r] += a(r, c) * v[so + c];
            }
            span.push_back(w);
          }
        }
        span = column_basis(span, N, ldim.at(lk));
      }
      if (!span.empty()) gen[i][lk] = span;
    }
  }
  for (const auto& lk : order_keys) {
    const std::size_t dl = ln.quotient_dim(lk);
    std::vector<Vector> pieces_span;
    for (const auto& gk : levels.at(lk))
      for (const auto& v : pi.at(gk).columns()) pieces_span.push_back(v);
    const std::size_t covered = span_dim(pieces_span, N, dl);
    if (covered != dl) ++sum_bad;
    std::vector<Vector> joined_l;
    std::size_t total = 0;
    for (const auto& gi : gen) {
      if (!gi.count(lk)) continue;
      total += gi.at(lk).size();
      joined_l.insert(joined_l.end(), gi.at(lk).begin(), gi.at(lk).end());
    }
    if (total != ldim.at(lk) || span_dim(joined_l, N, ldim.at(lk)) != total) ++split_bad;
    // the N summand maps isomorphically onto L(N) at this level
    if (n_index) {
      Matrix pl(N, dl, ldim.at(lk));
      for (const auto& gk : levels.at(lk)) {
        const Matrix& m = pi.at(gk);
        const std::size_t o = graded_block(lk, gk);
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t c = 0; c < m.cols(); ++c) pl(r, o + c) = m(r, c);
      }
      const auto& gn = gen[*n_index];
      const std::size_t gdim = gn.count(lk) ? gn.at(lk).size() : 0;
      const std::size_t img = gdim ? rank(pl * stack_columns(N, ldim.at(lk), gn.at(lk))) : 0;
      if (gdim != dl || img != dl) ++split_bad;
    }
    table.push_back({{"key", to_json(lk)}, {"dim_L_N", dl}, {"dim_L_Ngr", ldim.at(lk)}});
  }
  if (sum_bad == 0) rep.pass("thin_cover.axiom1", "the images sum to L(N) at every level", table);
  else rep.fail("thin_cover.axiom1", "the images do not span L(N)", table);
  if (split_bad == 0) rep.pass("thin_cover.lift_split", "L(N_gr) splits along the summands of N_gr, the N summand onto L(N)");
  else rep.fail("thin_cover.lift_split", "L(N_gr) does not split along N_gr on the window");

  // (c) restriction to the top returns the family
  std::size_t restrict_bad = 0;
  for (const auto& [tag, b] : piece) {
    const WeightKey gk{ntop.k0, tag, ntop.alpha};
    const auto img = column_basis(pi.at(gk).columns(), N, nd);
    if (img != column_basis(b.columns(), N, nd)) ++restrict_bad;
  }
  if (restrict_bad == 0) rep.pass("thin_cover.restrict", "the top of the lifted covering is the original family");
  else rep.fail("thin_cover.restrict", "the top of the lifted covering differs from the family");
  return rep;
}

}  // namespace toroidal
