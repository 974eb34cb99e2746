#include "toroidal/root_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace toroidal {

int lex_sign(const Vector& v) {
  for (const auto& x : v) {
    const int s = x.sign();
    if (s != 0) return s;
  }
  return 0;
}

bool weight_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const CycScalar& x, const CycScalar& y) { return x < y; });
}

namespace {

Vector scale(const Vector& a, long s) {
  Vector out = a;
  for (auto& x : out) x *= CycScalar(x.order(), s);
  return out;
}

}  // namespace

FiniteRootSystem::FiniteRootSystem(std::vector<Vector> roots, Matrix gram_inverse)
    : roots_(std::move(roots)), gram_inverse_(std::move(gram_inverse)) {
  std::sort(roots_.begin(), roots_.end(), weight_less);
  roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
  for (const auto& r : roots_) {
    if (toroidal::is_zero(r)) throw std::invalid_argument("root system: zero is not a root");
    if (lex_sign(r) > 0) positive_.push_back(r);
  }
  // Simple roots: positive roots that are not a sum of two positive roots.
  for (const auto& p : positive_) {
    bool decomposable = false;
    for (const auto& a : positive_) {
      if (a == p) continue;
      Vector rest = p;
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= a[i];
      if (lex_sign(rest) > 0 && contains(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple_.push_back(p);
  }
  classify();
}

CycScalar FiniteRootSystem::inner(const Vector& a, const Vector& b) const {
  const Vector gb = gram_inverse_ * b;
  CycScalar s(order());
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * gb[i];
  return s;
}

bool FiniteRootSystem::contains(const Vector& v) const {
  return std::binary_search(roots_.begin(), roots_.end(), v, weight_less);
}

std::vector<Vector> FiniteRootSystem::short_roots() const {
  if (roots_.empty()) return {};
  Rational shortest = inner(roots_[0], roots_[0]).rational();
  for (const auto& r : roots_) shortest = std::min(shortest, inner(r, r).rational());
  std::vector<Vector> out;
  for (const auto& r : roots_)
    if (inner(r, r).rational() == shortest) out.push_back(r);
  return out;
}

std::optional<std::vector<Rational>> FiniteRootSystem::simple_coordinates(const Vector& alpha) const {
  if (simple_.empty()) {
    if (toroidal::is_zero(alpha)) return std::vector<Rational>{};
    return std::nullopt;
  }
  auto x = solve(Matrix::from_columns(order(), alpha.size(), simple_), alpha);
  if (!x) return std::nullopt;
  std::vector<Rational> out;
  for (const auto& c : *x) {
    if (!c.is_rational()) return std::nullopt;
    out.push_back(c.rational());
  }
  return out;
}

std::optional<Rational> FiniteRootSystem::height(const Vector& alpha) const {
  auto c = simple_coordinates(alpha);
  if (!c) return std::nullopt;
  Rational h = 0;
  for (const auto& x : *c) h += x;
  return h;
}

bool FiniteRootSystem::is_type_b() const {
  return type_.size() >= 2 && type_[0] == 'B';
}

void FiniteRootSystem::classify() {
  reduced_ = true;
  for (const auto& r : roots_) {
    if (contains(scale(r, 2))) reduced_ = false;
  }
  const std::size_t l = simple_.size();
  if (l == 0) {
    irreducible_ = false;
    type_ = "empty";
    return;
  }
  // Connectivity of the Dynkin diagram.
  std::vector<std::vector<std::size_t>> adj(l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      if (!inner(simple_[i], simple_[j]).is_zero()) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  std::vector<bool> seen(l, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    ++reached;
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  irreducible_ = reached == l;
  if (!irreducible_) {
    type_ = "reducible";
    return;
  }
  if (!reduced_) {
    type_ = "non-reduced";
    return;
  }
  std::vector<Rational> len;
  for (const auto& s : simple_) len.push_back(inner(s, s).rational());
  const Rational lmax = *std::max_element(len.begin(), len.end());
  const Rational lmin = *std::min_element(len.begin(), len.end());
  const std::string rank = std::to_string(l);
  if (lmax == lmin) {
    std::size_t branch = l;
    for (std::size_t i = 0; i < l; ++i)
      if (adj[i].size() == 3) branch = i;
    if (branch == l) {
      type_ = "A" + rank;
      return;
    }
    // Arm lengths from the branch node.
    std::vector<std::size_t> arms;
    for (auto start : adj[branch]) {
      std::size_t count = 1, prev = branch, cur = start;
      while (adj[cur].size() == 2) {
        const auto next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++count;
      }
      arms.push_back(count);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) type_ = "D" + rank;
    else if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) type_ = "E" + rank;
    else type_ = "unknown";
    return;
  }
  const Rational ratio = lmax / lmin;
  if (ratio == 3) {
    type_ = "G2";
    return;
  }
  std::size_t n_short = 0;
  for (const auto& x : len)
    if (x == lmin) ++n_short;
  if (l == 2 || n_short == 1) type_ = "B" + rank;
  else if (n_short == l - 1) type_ = "C" + rank;
  else if (l == 4) type_ = "F4";
  else type_ = "unknown";
}

std::vector<Vector> enlarge_roots(const FiniteRootSystem& delta0, bool a1_as_b1) {
  if (!delta0.irreducible()) throw std::invalid_argument("enlarge_roots: root system is not irreducible");
  if (!delta0.reduced()) throw std::invalid_argument("enlarge_roots: root system is not reduced");
  std::vector<Vector> out = delta0.roots();
  const bool doubling = delta0.is_type_b() || (a1_as_b1 && delta0.type() == "A1");
  if (doubling)
    for (const auto& s : delta0.short_roots()) out.push_back(scale(s, 2));
  out.push_back(zero_vector(delta0.order(), delta0.coordinate_dim()));
  std::sort(out.begin(), out.end(), weight_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace toroidal
