#include "toroidal/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace toroidal {

int euler_phi(int n) {
  if (n < 1) throw FieldError("euler_phi: order must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact division of integer polynomials (divisor monic).
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<long> quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const long c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return quot;
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// r = a mod b, q = a div b over Q[x]; b nonzero and trimmed.
void poly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    Rational c = r.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    r.pop_back();
    trim(r);
  }
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw FieldError("cyclotomic_polynomial: order must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<long>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Divisors in ascending order: Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e.
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    std::vector<long> poly(d + 1, 0);
    poly[0] = -1;
    poly[d] = 1;
    for (int e = 1; e < d; ++e)
      if (d % e == 0) poly = divide_monic(poly, cache.at(e));
    cache.emplace(d, std::move(poly));
  }
  return cache.at(n);
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) throw FieldError("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  const auto valid = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den)) throw FieldError("malformed rational literal '" + text + "'");
  Rational q(mpz_class(num, 10), mpz_class(den, 10));
  if (q.get_den() == 0) throw FieldError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

CycScalar::CycScalar(int order) : order_(order), coeffs_(euler_phi(order), Rational(0)) {}

CycScalar::CycScalar(int order, const Rational& value) : CycScalar(order) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

CycScalar::CycScalar(int order, std::vector<Rational> coeffs) : order_(order) {
  euler_phi(order);
  for (auto& c : coeffs) c.canonicalize();
  reduce(coeffs);
  coeffs_ = std::move(coeffs);
}

void CycScalar::reduce(std::vector<Rational>& poly) const {
  const auto& phi = cyclotomic_polynomial(order_);
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > d;) {
    if (poly[i] == 0) continue;
    const Rational c = poly[i];
    for (std::size_t j = 0; j <= d; ++j) {
      if (phi[j] != 0) poly[i - d + j] -= c * phi[j];
    }
  }
  poly.resize(d, Rational(0));
}

CycScalar CycScalar::root_of_unity(int order, long k) {
  if (order < 1) throw FieldError("root_of_unity: order must be positive");
  long e = k % order;
  if (e < 0) e += order;
  std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
  poly[static_cast<std::size_t>(e)] = 1;
  return CycScalar(order, std::move(poly));
}

bool CycScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycScalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

const Rational& CycScalar::rational() const {
  if (!is_rational()) throw FieldError("scalar " + str() + " is not rational");
  return coeffs_[0];
}

int CycScalar::sign() const { return sgn(rational()); }

CycScalar CycScalar::embed(int order) const {
  if (order == order_) return *this;
  if (order % order_ != 0)
    throw FieldError("cannot embed order " + std::to_string(order_) + " into order " +
                     std::to_string(order));
  const int step = order / order_;
  std::vector<Rational> poly(static_cast<std::size_t>(step) * coeffs_.size(), Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) poly[j * step] = coeffs_[j];
  return CycScalar(order, std::move(poly));
}

void CycScalar::require_same_order(const CycScalar& o, const char* op) const {
  if (o.order_ != order_)
    throw FieldError(std::string("mismatched field orders in ") + op + ": " +
                     std::to_string(order_) + " vs " + std::to_string(o.order_));
}

CycScalar CycScalar::operator-() const {
  CycScalar out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  require_same_order(o, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  require_same_order(o, "sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  require_same_order(o, "mul");
  if (coeffs_.size() == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  reduce(prod);
  coeffs_ = std::move(prod);
  return *this;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  if (coeffs_.size() == 1) return CycScalar(order_, Rational(1) / coeffs_[0]);
  // Extended Euclid: find u with u * a = 1 mod Phi_N.
  const auto& phi = cyclotomic_polynomial(order_);
  QPoly m(phi.begin(), phi.end());
  QPoly a(coeffs_);
  trim(a);
  QPoly r0 = m, r1 = a;
  QPoly s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q, r;
    poly_divmod(r0, r1, q, r);
    QPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant because Phi_N is irreducible.
  if (r0.size() != 1) throw FieldError("inverse: gcd is not constant");
  for (auto& c : s0) c /= r0[0];
  return CycScalar(order_, std::move(s0));
}

CycScalar& CycScalar::operator/=(const CycScalar& o) {
  require_same_order(o, "div");
  return *this *= o.inverse();
}

CycScalar CycScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycScalar result(order_, Rational(1));
  CycScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool CycScalar::operator==(const CycScalar& o) const {
  return order_ == o.order_ && coeffs_ == o.coeffs_;
}

std::strong_ordering CycScalar::operator<=>(const CycScalar& o) const {
  if (order_ != o.order_) return order_ <=> o.order_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int c = cmp(coeffs_[i], o.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string CycScalar::str() const {
  if (is_rational()) return to_string(coeffs_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << (i == 0 ? to_string(coeffs_[i]) : "(" + to_string(coeffs_[i]) + ")");
    if (i > 0) os << "*z" << order_ << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycScalar& x) { return os << x.str(); }

nlohmann::json to_json(const CycScalar& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : x.coeffs())
    coeffs.push_back({c.get_num().get_str(10), c.get_den().get_str(10)});
  return {{"order", x.order()}, {"coeffs", coeffs}};
}

CycScalar from_json_exact(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw FieldError("scalar JSON needs 'order' and 'coeffs'");
  const int order = j.at("order").get<int>();
  const auto& cs = j.at("coeffs");
  if (!cs.is_array() || cs.size() != static_cast<std::size_t>(euler_phi(order)))
    throw FieldError("scalar JSON: coefficient count must equal phi(order)");
  std::vector<Rational> coeffs;
  for (const auto& c : cs) {
    if (!c.is_array() || c.size() != 2) throw FieldError("scalar JSON: coefficient must be [num, den]");
    coeffs.push_back(parse_rational(c[0].get<std::string>() + "/" + c[1].get<std::string>()));
  }
  return CycScalar(order, std::move(coeffs));
}

CycScalar scalar_from_json(const nlohmann::json& j, int order) {
  if (j.is_number_integer()) return CycScalar(order, Rational(j.get<long>()));
  if (j.is_string()) return CycScalar(order, parse_rational(j.get<std::string>()));
  if (j.is_object()) return from_json_exact(j).embed(order);
  throw FieldError("unsupported scalar literal: " + j.dump());
}

}  // namespace toroidal
