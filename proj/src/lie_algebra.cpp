#include "toroidal/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace toroidal {

namespace {

CycScalar one(int order) { return CycScalar(order, 1L); }

Matrix unit(int order, std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(order, n, n);
  m(i, j) = one(order);
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

CycScalar trace(const Matrix& m) {
  CycScalar t(m.order());
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

// Scalar c with [d, m] = c m, assuming m is an eigenvector of ad(d).
CycScalar ad_eigenvalue(const Matrix& d, const Matrix& m) {
  const Matrix img = commutator(d, m);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return img(r, c) / m(r, c);
  throw std::logic_error("ad_eigenvalue: zero matrix");
}

// Coordinates of matrices in the span of the realization basis.
Matrix coordinates(const std::vector<Matrix>& basis, const std::vector<Matrix>& targets, int order) {
  std::vector<Vector> cols, rhs;
  for (const auto& b : basis) cols.push_back(flatten(b));
  for (const auto& t : targets) rhs.push_back(flatten(t));
  const std::size_t n2 = cols.front().size();
  auto x = solve(Matrix::from_columns(order, n2, cols), Matrix::from_columns(order, n2, rhs));
  if (!x) throw std::invalid_argument("matrix is not in the span of the realization");
  return *x;
}

std::string root_label(const std::vector<Rational>& c) {
  std::string s;
  for (const auto& x : c) s += to_string(abs(x));
  return s;
}

struct Realization {
  std::size_t n = 0;
  std::vector<Matrix> diagonal;
  std::vector<Matrix> root_candidates;
};

Realization realization_for(const std::string& type, int order) {
  Realization r;
  if (type == "A1" || type == "A2") {
    r.n = type == "A1" ? 2 : 3;
    for (std::size_t k = 0; k + 1 < r.n; ++k)
      r.diagonal.push_back(unit(order, r.n, k, k) - unit(order, r.n, k + 1, k + 1));
    for (std::size_t i = 0; i < r.n; ++i)
      for (std::size_t j = 0; j < r.n; ++j)
        if (i != j) r.root_candidates.push_back(unit(order, r.n, i, j));
  } else if (type == "B2") {
    // so5 preserving the antidiagonal form.
    r.n = 5;
    for (std::size_t k = 0; k < 2; ++k)
      r.diagonal.push_back(unit(order, 5, k, k) - unit(order, 5, 4 - k, 4 - k));
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        if (i == j || i + j == 4) continue;
        r.root_candidates.push_back(unit(order, 5, i, j) - unit(order, 5, 4 - j, 4 - i));
      }
  } else {
    throw std::invalid_argument("build_chevalley: unsupported type '" + type + "' (A1, A2, B2)");
  }
  return r;
}

std::vector<std::size_t> divisors_below(int m) {
  std::vector<std::size_t> out;
  for (int k = 1; k < m; ++k) out.push_back(static_cast<std::size_t>(k));
  return out;
}

}  // namespace

Vector SimpleLieAlgebraData::basis_vector(std::size_t i) const {
  Vector v = zero_vector(order, dim);
  v[i] = one(order);
  return v;
}

Vector SimpleLieAlgebraData::bracket(const Vector& x, const Vector& y) const {
  Vector out = zero_vector(order, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      const CycScalar c = x[i] * y[j];
      const Vector& s = sc[i][j];
      for (std::size_t k = 0; k < dim; ++k)
        if (!s[k].is_zero()) out[k] += c * s[k];
    }
  }
  return out;
}

CycScalar SimpleLieAlgebraData::pair(const Vector& x, const Vector& y) const {
  const Vector fy = form * y;
  CycScalar s(order);
  for (std::size_t i = 0; i < dim; ++i)
    if (!x[i].is_zero()) s += x[i] * fy[i];
  return s;
}

Matrix SimpleLieAlgebraData::ad(const Vector& x) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim; ++j) cols.push_back(bracket(x, basis_vector(j)));
  return Matrix::from_columns(order, dim, cols);
}

Matrix SimpleLieAlgebraData::killing() const {
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < dim; ++i) ads.push_back(ad(basis_vector(i)));
  Matrix k(order, dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      k(i, j) = trace(ads[i] * ads[j]);
      k(j, i) = k(i, j);
    }
  return k;
}

FiniteRootSystem SimpleLieAlgebraData::root_system() const {
  std::vector<Vector> roots;
  std::vector<bool> is_cartan(dim, false);
  for (auto c : cartan) is_cartan[c] = true;
  for (std::size_t j = 0; j < dim; ++j) {
    if (is_cartan[j]) continue;
    Vector w;
    for (auto h : cartan) w.push_back(sc[h][j][j]);
    roots.push_back(std::move(w));
  }
  Matrix gram(order, cartan.size(), cartan.size());
  for (std::size_t a = 0; a < cartan.size(); ++a)
    for (std::size_t b = 0; b < cartan.size(); ++b) gram(a, b) = form(cartan[a], cartan[b]);
  auto gi = inverse(gram);
  if (!gi) throw std::invalid_argument("form restricted to the Cartan subalgebra is degenerate");
  return FiniteRootSystem(std::move(roots), *gi);
}

SimpleLieAlgebraData SimpleLieAlgebraData::embed(int new_order) const {
  if (new_order == order) return *this;
  SimpleLieAlgebraData out = *this;
  out.order = new_order;
  for (auto& row : out.sc)
    for (auto& v : row) v = toroidal::embed(v, new_order);
  out.form = form.embed(new_order);
  for (auto& m : out.realization) m = m.embed(new_order);
  return out;
}

SimpleLieAlgebraData build_chevalley(const std::string& cartan_type, int order) {
  const Realization r = realization_for(cartan_type, order);
  const std::size_t l = r.diagonal.size();

  // Group candidate root matrices by weight; each root space is a line.
  std::vector<Vector> weights;
  std::vector<Matrix> root_mats;
  for (const auto& m : r.root_candidates) {
    Vector w;
    for (const auto& d : r.diagonal) w.push_back(ad_eigenvalue(d, m));
    if (std::find(weights.begin(), weights.end(), w) != weights.end()) continue;
    weights.push_back(w);
    root_mats.push_back(m);
  }
  Matrix gram(order, l, l);
  for (std::size_t a = 0; a < l; ++a)
    for (std::size_t b = 0; b < l; ++b) gram(a, b) = trace(r.diagonal[a] * r.diagonal[b]);
  const FiniteRootSystem pre(weights, *inverse(gram));

  auto matrix_of = [&](const Vector& w) {
    const auto it = std::find(weights.begin(), weights.end(), w);
    return root_mats[static_cast<std::size_t>(it - weights.begin())];
  };
  std::vector<Vector> positive = pre.positive_roots();
  std::stable_sort(positive.begin(), positive.end(), [&](const Vector& a, const Vector& b) {
    return *pre.height(a) < *pre.height(b);
  });

  std::vector<Matrix> es, fs;
  std::vector<std::string> elabels, flabels;
  // Non-simple root vectors come from brackets, e_b = [e_i, e_(b - a_i)] / (p + 1).
  std::map<std::size_t, Matrix> chosen;
  const auto& simple = pre.simple_roots();
  auto index_of = [&](const Vector& w) {
    return static_cast<std::size_t>(std::find(positive.begin(), positive.end(), w) - positive.begin());
  };
  auto minus = [](Vector a, const Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
  };
  for (std::size_t k = 0; k < positive.size(); ++k) {
    const Vector& p = positive[k];
    if (std::find(simple.begin(), simple.end(), p) != simple.end()) {
      chosen.emplace(k, matrix_of(p));
      continue;
    }
    for (const auto& a : simple) {
      const Vector gamma = minus(p, a);
      if (!pre.contains(gamma) || lex_sign(gamma) <= 0) continue;
      long q = 0;
      for (Vector g = minus(gamma, a); pre.contains(g); g = minus(g, a)) ++q;
      const Matrix e = commutator(chosen.at(index_of(a)), chosen.at(index_of(gamma)));
      chosen.emplace(k, e.scaled(CycScalar(order, Rational(1, q + 1))));
      break;
    }
  }
  for (std::size_t k = 0; k < positive.size(); ++k) {
    const Vector& p = positive[k];
    const Matrix e = chosen.at(k);
    const Matrix h0 = commutator(e, e.transpose());
    const CycScalar c = CycScalar(order, 2L) / ad_eigenvalue(h0, e);
    es.push_back(e);
    fs.push_back(e.transpose().scaled(c));
    const std::string lab = root_label(*pre.simple_coordinates(p));
    elabels.push_back("e" + lab);
    flabels.push_back("f" + lab);
  }
  std::vector<Matrix> hs;
  for (const auto& s : pre.simple_roots()) {
    const auto idx = static_cast<std::size_t>(std::find(positive.begin(), positive.end(), s) - positive.begin());
    hs.push_back(commutator(es[idx], fs[idx]));
  }

  SimpleLieAlgebraData alg;
  alg.name = cartan_type;
  alg.order = order;
  alg.realization = es;
  alg.labels = elabels;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    alg.cartan.push_back(alg.realization.size());
    alg.realization.push_back(hs[i]);
    alg.labels.push_back("h" + std::to_string(i + 1));
  }
  alg.realization.insert(alg.realization.end(), fs.begin(), fs.end());
  alg.labels.insert(alg.labels.end(), flabels.begin(), flabels.end());
  alg.dim = alg.realization.size();

  std::vector<Matrix> products;
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j) products.push_back(commutator(alg.realization[i], alg.realization[j]));
  const Matrix coords = coordinates(alg.realization, products, order);
  alg.sc.assign(alg.dim, std::vector<Vector>(alg.dim));
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j) alg.sc[i][j] = coords.column(i * alg.dim + j);

  alg.form = Matrix(order, alg.dim, alg.dim);
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j) alg.form(i, j) = trace(alg.realization[i] * alg.realization[j]);
  // Normalize so long roots have square length 2.
  {
    const FiniteRootSystem rs = alg.root_system();
    Rational longest = 0;
    for (const auto& a : rs.roots()) longest = std::max(longest, rs.inner(a, a).rational());
    alg.form = alg.form.scaled(CycScalar(order, longest / 2));
  }
  const std::size_t h = alg.cartan.front();
  const Rational ratio = (alg.killing()(h, h) / alg.form(h, h)).rational() / 2;
  if (ratio.get_den() != 1) throw std::logic_error("build_chevalley: non-integral dual Coxeter number");
  alg.dual_coxeter = static_cast<int>(ratio.get_num().get_si());
  return alg;
}

SimpleLieAlgebraData algebra_from_json(const nlohmann::json& j, int order) {
  SimpleLieAlgebraData alg;
  alg.order = order;
  alg.name = j.value("name", std::string("custom"));
  alg.labels = j.at("labels").get<std::vector<std::string>>();
  alg.dim = alg.labels.size();
  alg.sc.assign(alg.dim, std::vector<Vector>(alg.dim, zero_vector(order, alg.dim)));
  std::vector<std::vector<bool>> given(alg.dim, std::vector<bool>(alg.dim, false));
  for (const auto& e : j.at("structure_constants")) {
    const auto a = e.at(0).get<std::size_t>(), b = e.at(1).get<std::size_t>(), c = e.at(2).get<std::size_t>();
    if (a >= alg.dim || b >= alg.dim || c >= alg.dim) throw std::invalid_argument("structure constant index out of range");
    alg.sc[a][b][c] += scalar_from_json(e.at(3), order);
    given[a][b] = true;
  }
  for (std::size_t a = 0; a < alg.dim; ++a)
    for (std::size_t b = 0; b < alg.dim; ++b)
      if (given[a][b] && !given[b][a])
        for (std::size_t c = 0; c < alg.dim; ++c) alg.sc[b][a][c] = -alg.sc[a][b][c];
  const auto& f = j.at("form");
  if (f.size() != alg.dim) throw std::invalid_argument("form has wrong size");
  alg.form = Matrix(order, alg.dim, alg.dim);
  for (std::size_t a = 0; a < alg.dim; ++a) {
    if (f.at(a).size() != alg.dim) throw std::invalid_argument("form has wrong size");
    for (std::size_t b = 0; b < alg.dim; ++b) alg.form(a, b) = scalar_from_json(f.at(a).at(b), order);
  }
  alg.cartan = j.at("cartan").get<std::vector<std::size_t>>();
  for (auto c : alg.cartan)
    if (c >= alg.dim) throw std::invalid_argument("cartan index out of range");
  if (j.contains("dual_coxeter")) {
    alg.dual_coxeter = j.at("dual_coxeter").get<int>();
  } else {
    const std::size_t h = alg.cartan.front();
    if (alg.form(h, h).is_zero()) throw std::invalid_argument("cannot infer dual Coxeter number");
    const CycScalar r = alg.killing()(h, h) / alg.form(h, h) / CycScalar(order, 2L);
    if (!r.is_rational() || r.rational().get_den() != 1)
      throw std::invalid_argument("Killing/form ratio is not an integer; supply dual_coxeter");
    alg.dual_coxeter = static_cast<int>(r.rational().get_num().get_si());
  }
  return alg;
}

Report validate_algebra(const SimpleLieAlgebraData& alg) {
  Report rep;
  const std::size_t d = alg.dim;
  bool ok = true;
  for (std::size_t i = 0; i < d && ok; ++i)
    for (std::size_t j = 0; j < d && ok; ++j) {
      Vector s = alg.sc[i][j];
      for (std::size_t k = 0; k < d; ++k) s[k] += alg.sc[j][i][k];
      if (!is_zero(s)) {
        rep.fail("algebra.antisymmetry", "[x,y] + [y,x] != 0", {alg.labels[i], alg.labels[j]});
        ok = false;
      }
    }
  if (ok) rep.pass("algebra.antisymmetry");
  ok = true;
  for (std::size_t i = 0; i < d && ok; ++i)
    for (std::size_t j = i + 1; j < d && ok; ++j)
      for (std::size_t k = j + 1; k < d && ok; ++k) {
        const Vector x = alg.basis_vector(i), y = alg.basis_vector(j), z = alg.basis_vector(k);
        Vector s = alg.bracket(x, alg.bracket(y, z));
        const Vector t = alg.bracket(y, alg.bracket(z, x));
        const Vector u = alg.bracket(z, alg.bracket(x, y));
        for (std::size_t c = 0; c < d; ++c) s[c] += t[c] + u[c];
        if (!is_zero(s)) {
          rep.fail("algebra.jacobi", "Jacobi identity fails", {alg.labels[i], alg.labels[j], alg.labels[k]});
          ok = false;
        }
      }
  if (ok) rep.pass("algebra.jacobi");
  if (alg.form == alg.form.transpose()) rep.pass("form.symmetric");
  else rep.fail("form.symmetric", "form matrix is not symmetric");
  if (rank(alg.form) == d) rep.pass("form.nondegenerate");
  else rep.fail("form.nondegenerate", "form matrix is singular");
  ok = true;
  for (std::size_t i = 0; i < d && ok; ++i)
    for (std::size_t j = 0; j < d && ok; ++j)
      for (std::size_t k = 0; k < d && ok; ++k) {
        const Vector x = alg.basis_vector(i), y = alg.basis_vector(j), z = alg.basis_vector(k);
        if (!(alg.pair(alg.bracket(x, y), z) + alg.pair(y, alg.bracket(x, z))).is_zero()) {
          rep.fail("form.invariant", "([x,y],z) + (y,[x,z]) != 0", {alg.labels[i], alg.labels[j], alg.labels[k]});
          ok = false;
        }
      }
  if (ok) rep.pass("form.invariant");
  ok = true;
  for (auto h : alg.cartan)
    if (!alg.ad(alg.basis_vector(h)).is_diagonal()) {
      rep.fail("cartan.diagonal", "ad(h) is not diagonal on the basis", alg.labels[h]);
      ok = false;
      break;
    }
  if (ok) rep.pass("cartan.diagonal");
  return rep;
}

Matrix induced_map(const SimpleLieAlgebraData& alg, const std::function<Matrix(const Matrix&)>& f) {
  if (alg.realization.size() != alg.dim) throw std::invalid_argument("induced_map: algebra has no matrix realization");
  std::vector<Matrix> images;
  for (const auto& b : alg.realization) images.push_back(f(b));
  return coordinates(alg.realization, images, alg.order);
}

FiniteAutomorphism negative_transpose(const SimpleLieAlgebraData& alg) {
  return {induced_map(alg, [](const Matrix& x) { return x.transpose().scaled(CycScalar(x.order(), -1L)); }), 2,
          "negative_transpose"};
}

FiniteAutomorphism negative_j_transpose(const SimpleLieAlgebraData& alg) {
  return {induced_map(alg,
                      [](const Matrix& x) {
                        const std::size_t n = x.rows();
                        Matrix j(x.order(), n, n);
                        for (std::size_t i = 0; i < n; ++i) j(i, n - 1 - i) = one(x.order());
                        return (j * x.transpose() * j).scaled(CycScalar(x.order(), -1L));
                      }),
          2, "negative_j_transpose"};
}

FiniteAutomorphism inner_diagonal(const SimpleLieAlgebraData& alg, const std::vector<long>& exponents, int order) {
  if (alg.order % order != 0)
    throw std::invalid_argument("inner_diagonal: root order must divide the field order");
  const std::size_t n = exponents.size();
  Matrix d(alg.order, n, n), dinv(alg.order, n, n);
  const long scale = alg.order / order;
  for (std::size_t i = 0; i < n; ++i) {
    d(i, i) = CycScalar::root_of_unity(alg.order, exponents[i] * scale);
    dinv(i, i) = CycScalar::root_of_unity(alg.order, -exponents[i] * scale);
  }
  // The exact order of Ad(d) is determined from the matrix.
  const Matrix m = induced_map(alg, [&](const Matrix& x) { return d * x * dinv; });
  int ord = 1;
  while (!m.pow(static_cast<unsigned>(ord)).is_identity()) ++ord;
  return {m, ord, "inner_diagonal"};
}

FiniteAutomorphism identity_automorphism(const SimpleLieAlgebraData& alg) {
  return {Matrix::identity(alg.order, alg.dim), 1, "identity"};
}

Report validate_automorphisms(const SimpleLieAlgebraData& alg, const std::vector<FiniteAutomorphism>& autos) {
  Report rep;
  for (std::size_t a = 0; a < autos.size(); ++a) {
    const auto& A = autos[a];
    const std::string tag = "automorphism[" + std::to_string(a) + "]";
    if (A.matrix.rows() != alg.dim || A.matrix.cols() != alg.dim) {
      rep.fail(tag + ".shape", "matrix is not dim g x dim g");
      continue;
    }
    if (A.order < 1) {
      rep.fail(tag + ".order", "order must be positive");
      continue;
    }
    if (!A.matrix.pow(static_cast<unsigned>(A.order)).is_identity()) {
      rep.fail(tag + ".order", "matrix^order is not the identity", A.order);
    } else {
      int smaller = 0;
      for (auto k : divisors_below(A.order))
        if (A.matrix.pow(static_cast<unsigned>(k)).is_identity()) {
          smaller = static_cast<int>(k);
          break;
        }
      if (smaller) rep.fail(tag + ".order", "order not minimal", {{"claimed", A.order}, {"actual", smaller}});
      else rep.pass(tag + ".order");
    }
    bool ok = true;
    for (std::size_t i = 0; i < alg.dim && ok; ++i)
      for (std::size_t j = i + 1; j < alg.dim && ok; ++j) {
        const Vector lhs = A.matrix * alg.sc[i][j];
        const Vector rhs = alg.bracket(A.matrix.column(i), A.matrix.column(j));
        if (lhs != rhs) {
          rep.fail(tag + ".bracket", "A[x,y] != [Ax,Ay]", {alg.labels[i], alg.labels[j]});
          ok = false;
        }
      }
    if (ok) rep.pass(tag + ".bracket");
    const Matrix pulled = A.matrix.transpose() * alg.form * A.matrix;
    if (pulled == alg.form) {
      rep.pass(tag + ".form");
    } else {
      for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j)
          if (pulled(i, j) != alg.form(i, j)) {
            rep.fail(tag + ".form", "(Ax,Ay) != (x,y)", {alg.labels[i], alg.labels[j]});
            i = j = alg.dim;
          }
    }
  }
  for (std::size_t a = 0; a < autos.size(); ++a)
    for (std::size_t b = a + 1; b < autos.size(); ++b) {
      const std::string tag = "commute[" + std::to_string(a) + "," + std::to_string(b) + "]";
      if (autos[a].matrix.rows() != alg.dim || autos[b].matrix.rows() != alg.dim) continue;
      const Matrix ab = autos[a].matrix * autos[b].matrix;
      const Matrix ba = autos[b].matrix * autos[a].matrix;
      if (ab == ba) {
        rep.pass(tag);
      } else {
        std::size_t col = 0;
        while (col < alg.dim && ab.column(col) == ba.column(col)) ++col;
        rep.fail(tag, "automorphisms do not commute",
                 {{"pair", {a, b}}, {"basis_vector", alg.labels[col]}});
      }
    }
  return rep;
}

}  // namespace toroidal
