#include "toroidal/multiloop.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace toroidal {

long positive_mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

std::size_t EigenDecomposition::piece_dim(const Residue& r) const {
  const auto it = pieces.find(r);
  return it == pieces.end() ? 0 : it->second.size();
}

Residue EigenDecomposition::residue_of(long k0, const std::vector<long>& k) const {
  Residue r{positive_mod(k0, m0), {}};
  for (std::size_t i = 0; i < m.size(); ++i) r.k.push_back(positive_mod(k[i], m[i]));
  return r;
}

namespace {

// Kernel of the stacked maps (A_i - c_i I), restricted to span(V); returned as vectors of g.
std::vector<Vector> joint_kernel(const std::vector<Matrix>& maps, const std::vector<CycScalar>& values,
                                 const std::vector<Vector>& span, int order, std::size_t dim) {
  if (span.empty()) return {};
  if (maps.empty()) return span;
  const Matrix v = Matrix::from_columns(order, dim, span);
  Matrix stacked(order, 0, span.size());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const Matrix shifted = maps[i] - Matrix::identity(order, dim).scaled(values[i]);
    stacked = stacked.vcat(shifted * v);
  }
  std::vector<Vector> out;
  for (const auto& c : nullspace(stacked)) out.push_back(v * c);
  return out;
}

void enumerate_residues(long m0, const std::vector<long>& m, std::vector<Residue>& out) {
  Residue r{0, std::vector<long>(m.size(), 0)};
  while (true) {
    out.push_back(r);
    std::size_t i = 0;
    for (; i < m.size(); ++i) {
      if (++r.k[i] < m[i]) break;
      r.k[i] = 0;
    }
    if (i < m.size()) continue;
    if (++r.k0 >= m0) break;
  }
}

std::vector<Vector> standard_basis(int order, std::size_t dim) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim; ++i) {
    Vector v = zero_vector(order, dim);
    v[i] = CycScalar(order, 1L);
    out.push_back(std::move(v));
  }
  return out;
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, int order, std::size_t dim) {
  if (a.size() != b.size()) return false;
  for (const auto& v : b)
    if (!span_contains(a, v, order, dim)) return false;
  return true;
}

// Coordinates of the bracket inside a subalgebra with basis V (columns).
std::vector<std::vector<Vector>> restricted_constants(const SimpleLieAlgebraData& alg, const std::vector<Vector>& v) {
  const Matrix vm = Matrix::from_columns(alg.order, alg.dim, v);
  std::vector<std::vector<Vector>> out(v.size(), std::vector<Vector>(v.size()));
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = 0; b < v.size(); ++b) {
      auto x = solve(vm, alg.bracket(v[a], v[b]));
      if (!x) throw std::logic_error("subspace is not closed under the bracket");
      out[a][b] = *x;
    }
  return out;
}

Matrix ad_in(const std::vector<std::vector<Vector>>& sc, std::size_t a, int order) {
  const std::size_t d = sc.size();
  Matrix m(order, d, d);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t c = 0; c < d; ++c) m(c, b) = sc[a][b][c];
  return m;
}

// Ideal generated by x inside a subalgebra given by constants sc.
std::size_t ideal_dimension(const std::vector<std::vector<Vector>>& sc, const Vector& x, int order) {
  const std::size_t d = sc.size();
  std::vector<Vector> span = column_basis({x}, order, d);
  std::size_t last = 0;
  while (span.size() != last) {
    last = span.size();
    std::vector<Vector> grown = span;
    for (const auto& v : span)
      for (std::size_t a = 0; a < d; ++a) grown.push_back(ad_in(sc, a, order) * v);
    span = column_basis(grown, order, d);
  }
  return span.size();
}

std::vector<Vector> sorted_unique(std::vector<Vector> v) {
  std::sort(v.begin(), v.end(), weight_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

nlohmann::json weights_json(const std::vector<Vector>& ws) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& w : ws) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : w) row.push_back(x.str());
    out.push_back(row);
  }
  return out;
}

}  // namespace

EigenDecomposition eigen_decompose(const SimpleLieAlgebraData& alg, const std::vector<FiniteAutomorphism>& autos) {
  if (autos.empty()) throw std::invalid_argument("eigen_decompose: sigma_0 is required");
  EigenDecomposition dec;
  dec.order = alg.order;
  dec.m0 = autos[0].order;
  for (std::size_t i = 1; i < autos.size(); ++i) dec.m.push_back(autos[i].order);
  for (const auto& a : autos)
    if (alg.order % a.order != 0)
      throw std::invalid_argument("eigen_decompose: field order must be a multiple of every automorphism order");

  std::vector<Matrix> maps;
  for (const auto& a : autos) maps.push_back(a.matrix);
  const auto all = standard_basis(alg.order, alg.dim);
  std::vector<Residue> residues;
  enumerate_residues(dec.m0, dec.m, residues);
  std::size_t total = 0;
  for (const auto& r : residues) {
    std::vector<CycScalar> values;
    values.push_back(CycScalar::root_of_unity(alg.order, r.k0 * (alg.order / dec.m0)));
    for (std::size_t i = 0; i < dec.m.size(); ++i)
      values.push_back(CycScalar::root_of_unity(alg.order, r.k[i] * (alg.order / dec.m[i])));
    auto space = column_basis(joint_kernel(maps, values, all, alg.order, alg.dim), alg.order, alg.dim);
    total += space.size();
    if (!space.empty()) dec.pieces.emplace(r, std::move(space));
  }
  if (total != alg.dim) throw std::runtime_error("eigen_decompose: automorphisms are not simultaneously diagonalizable");

  // h(0) = h intersect g(0,0)
  std::vector<Vector> h;
  for (auto c : alg.cartan) h.push_back(alg.basis_vector(c));
  const auto it0 = dec.pieces.find(dec.zero_residue());
  if (it0 != dec.pieces.end()) dec.h0 = intersect_spans(h, it0->second, alg.order, alg.dim);

  // Candidate h(0)-weights: restrictions of the roots of (g, h), and zero.
  std::vector<Matrix> ad_h0;
  for (const auto& x : dec.h0) ad_h0.push_back(alg.ad(x));
  std::vector<Vector> candidates{zero_vector(alg.order, dec.h0.size())};
  std::vector<bool> is_cartan(alg.dim, false);
  for (auto c : alg.cartan) is_cartan[c] = true;
  for (std::size_t b = 0; b < alg.dim; ++b) {
    if (is_cartan[b]) continue;
    Vector w;
    for (const auto& x : dec.h0) {
      CycScalar s(alg.order);
      for (auto c : alg.cartan) s += x[c] * alg.sc[c][b][b];
      w.push_back(s);
    }
    candidates.push_back(std::move(w));
  }
  candidates = sorted_unique(std::move(candidates));

  for (const auto& [r, space] : dec.pieces) {
    std::size_t covered = 0;
    for (const auto& w : candidates) {
      auto sub = column_basis(joint_kernel(ad_h0, w, space, alg.order, alg.dim), alg.order, alg.dim);
      if (sub.empty()) continue;
      covered += sub.size();
      if (r == dec.zero_residue() && is_zero(w) && same_span(sub, dec.h0, alg.order, alg.dim)) sub = dec.h0;
      dec.refined.push_back({r, w, std::move(sub)});
    }
    if (covered != space.size())
      throw std::runtime_error("eigen_decompose: h(0) does not act diagonally on an eigenspace");
  }
  return dec;
}

A1Convention parse_a1_convention(const std::string& s) {
  if (s == "auto") return A1Convention::Auto;
  if (s == "on") return A1Convention::On;
  if (s == "off") return A1Convention::Off;
  throw std::invalid_argument("a1_as_b1 must be auto, on or off");
}

std::string to_string(A1Convention c) {
  switch (c) {
    case A1Convention::Auto: return "auto";
    case A1Convention::On: return "on";
    case A1Convention::Off: return "off";
  }
  return "auto";
}

AssumptionOutcome check_assumptions(const SimpleLieAlgebraData& alg, const EigenDecomposition& dec, A1Convention a1) {
  AssumptionOutcome out;
  Report& rep = out.report;
  const auto it0 = dec.pieces.find(dec.zero_residue());
  const std::vector<Vector> g00 = it0 == dec.pieces.end() ? std::vector<Vector>{} : it0->second;
  out.dim_g00 = g00.size();
  const int N = alg.order;

  // (1) simplicity of g(0,0)
  {
    const std::string clause = "assumption.1";
    if (g00.empty()) {
      rep.fail(clause, "g(0,0) is zero", {{"dim", 0}});
    } else {
      const auto sc = restricted_constants(alg, g00);
      const std::size_t d = g00.size();
      bool abelian = true;
      for (std::size_t a = 0; a < d && abelian; ++a)
        for (std::size_t b = 0; b < d && abelian; ++b)
          if (!is_zero(sc[a][b])) abelian = false;
      std::vector<Matrix> ads;
      for (std::size_t a = 0; a < d; ++a) ads.push_back(ad_in(sc, a, N));
      Matrix kil(N, d, d);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          const Matrix p = ads[a] * ads[b];
          for (std::size_t i = 0; i < d; ++i) kil(a, b) += p(i, i);
        }
      // Centroid: linear maps commuting with every ad(x).
      Matrix eqs(N, 0, d * d);
      for (const auto& A : ads) {
        Matrix block(N, d * d, d * d);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
              block(i * d + j, i * d + k) += A(k, j);
              block(i * d + j, k * d + j) -= A(i, k);
            }
        eqs = eqs.vcat(block);
      }
      const std::size_t centroid = nullspace(eqs).size();
      nlohmann::json proper = nullptr;
      for (std::size_t a = 0; a < d && proper.is_null(); ++a) {
        Vector e = zero_vector(N, d);
        e[a] = CycScalar(N, 1L);
        const std::size_t idim = ideal_dimension(sc, e, N);
        if (idim < d) proper = {{"generator_index", a}, {"ideal_dim", idim}, {"dim", d}};
      }
      const nlohmann::json w = {{"dim", d}, {"abelian", abelian}, {"killing_rank", rank(kil)},
                                {"centroid_dim", centroid}};
      if (abelian) rep.fail(clause, "g(0,0) is abelian, not simple", w);
      else if (rank(kil) != d) rep.fail(clause, "g(0,0) has degenerate Killing form, not semisimple", w);
      else if (centroid != 1) rep.fail(clause, "g(0,0) is semisimple but not simple", w);
      else if (!proper.is_null()) rep.fail(clause, "a basis vector generates a proper ideal", proper);
      else rep.pass(clause, "g(0,0) is simple", w);
    }
  }

  // (2) h(0) is a Cartan subalgebra of g(0,0) contained in h
  {
    const std::string clause = "assumption.2";
    if (dec.h0.empty()) {
      rep.fail(clause, "h intersect g(0,0) is zero", {{"dim_h0", 0}});
    } else {
      std::vector<Matrix> maps;
      for (const auto& x : dec.h0) maps.push_back(alg.ad(x));
      const auto centralizer =
          joint_kernel(maps, std::vector<CycScalar>(maps.size(), CycScalar(N)), g00, N, alg.dim);
      const std::size_t cdim = column_basis(centralizer, N, alg.dim).size();
      const nlohmann::json w = {{"dim_h0", dec.h0.size()}, {"centralizer_dim", cdim}};
      if (cdim == dec.h0.size()) rep.pass(clause, "h(0) is self-centralizing in g(0,0)", w);
      else rep.fail(clause, "centralizer of h(0) in g(0,0) is larger than h(0)", w);
    }
  }

  // (3) weights of g equal the enlarged root set
  {
    const std::string clause = "assumption.3";
    std::vector<Vector> all_weights, d0;
    for (const auto& p : dec.refined) {
      all_weights.push_back(p.alpha);
      if (p.residue == dec.zero_residue() && !is_zero(p.alpha)) d0.push_back(p.alpha);
    }
    all_weights = sorted_unique(std::move(all_weights));
    if (dec.h0.empty() || d0.empty()) {
      rep.fail(clause, "no roots of g(0,0) relative to h(0)", {{"weights", weights_json(all_weights)}});
      return out;
    }
    Matrix gram(N, dec.h0.size(), dec.h0.size());
    for (std::size_t a = 0; a < dec.h0.size(); ++a)
      for (std::size_t b = 0; b < dec.h0.size(); ++b) gram(a, b) = alg.pair(dec.h0[a], dec.h0[b]);
    const auto gi = inverse(gram);
    if (!gi) {
      rep.fail(clause, "form is degenerate on h(0)");
      return out;
    }
    FiniteRootSystem rs(d0, *gi);
    out.delta0 = rs;
    if (!rs.irreducible() || !rs.reduced()) {
      rep.fail(clause, "root system of g(0,0) is " + rs.type(), {{"roots", weights_json(rs.roots())}});
      return out;
    }
    std::vector<bool> branches;
    if (a1 == A1Convention::Auto) branches = {false, true};
    else branches = {a1 == A1Convention::On};
    for (bool b : branches) {
      const auto en = sorted_unique(enlarge_roots(rs, b));
      if (en == all_weights) {
        out.a1_as_b1 = b && rs.type() == "A1";
        nlohmann::json w = {{"type", rs.type()}, {"weights", weights_json(all_weights)},
                            {"a1_as_b1", out.a1_as_b1}};
        rep.pass(clause, "weights of g equal the enlarged root set", w);
        return out;
      }
    }
    const auto en = sorted_unique(enlarge_roots(rs, branches.back()));
    rep.fail(clause, "weights of g differ from the enlarged root set",
             {{"type", rs.type()}, {"weights", weights_json(all_weights)}, {"enlarged", weights_json(en)},
              {"a1_as_b1", to_string(a1)}});
  }
  return out;
}

std::size_t SubalgebraA::dim_gsigma0() const {
  std::size_t s = 0;
  for (const auto& p : gsigma0) s += p.basis.size();
  return s;
}

std::size_t SubalgebraA::dim_a() const {
  std::size_t s = 0;
  for (const auto& p : a) s += p.basis.size();
  return s;
}

SubalgebraA subalgebra_a(const EigenDecomposition& dec) {
  SubalgebraA out;
  for (const auto& p : dec.refined) {
    if (p.residue.k0 != 0) continue;
    out.gsigma0.push_back(p);
    const int s = lex_sign(p.alpha);
    if (s == 0) out.a.push_back(p);
    else if (s > 0) out.plus.push_back(p);
    else out.minus.push_back(p);
  }
  return out;
}

bool AdaptedBasis::admits(std::size_t v, long k0, const std::vector<long>& k) const {
  if (positive_mod(k0, m0) != residue[v].k0) return false;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (positive_mod(k[i], m[i]) != residue[v].k[i]) return false;
  return true;
}

AdaptedBasis adapted_basis(const SimpleLieAlgebraData& alg, const EigenDecomposition& dec) {
  AdaptedBasis ab;
  ab.order = alg.order;
  ab.dim = alg.dim;
  ab.m0 = dec.m0;
  ab.m = dec.m;
  std::vector<Vector> cols;
  for (const auto& p : dec.refined) {
    for (std::size_t i = 0; i < p.basis.size(); ++i) {
      const bool is_h0 = p.residue == dec.zero_residue() && p.basis == dec.h0;
      if (is_h0) ab.h0_index.push_back(cols.size());
      cols.push_back(p.basis[i]);
      ab.residue.push_back(p.residue);
      ab.alpha.push_back(p.alpha);
      std::string lab = "x" + std::to_string(cols.size() - 1) + "[" + std::to_string(p.residue.k0);
      for (auto k : p.residue.k) lab += "," + std::to_string(k);
      lab += ";";
      for (std::size_t j = 0; j < p.alpha.size(); ++j) lab += (j ? "," : "") + p.alpha[j].str();
      ab.labels.push_back(lab + "]");
    }
  }
  ab.to_standard = Matrix::from_columns(alg.order, alg.dim, cols);
  ab.from_standard = *inverse(ab.to_standard);
  ab.sc.assign(ab.dim, std::vector<std::vector<std::pair<std::size_t, CycScalar>>>(ab.dim));
  for (std::size_t u = 0; u < ab.dim; ++u)
    for (std::size_t v = 0; v < ab.dim; ++v) {
      const Vector c = ab.from_standard * alg.bracket(cols[u], cols[v]);
      for (std::size_t w = 0; w < ab.dim; ++w)
        if (!c[w].is_zero()) ab.sc[u][v].emplace_back(w, c[w]);
    }
  ab.form = ab.to_standard.transpose() * alg.form * ab.to_standard;
  return ab;
}

}  // namespace toroidal
