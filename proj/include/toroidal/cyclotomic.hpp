#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace toroidal {

using Rational = mpq_class;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int euler_phi(int n);

/// Coefficients (constant term first) of the n-th cyclotomic polynomial.
const std::vector<long>& cyclotomic_polynomial(int n);

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Exact element of Q(z), z a primitive N-th root of unity, stored in the
/// power basis {1, z, ..., z^(phi(N)-1)} modulo the N-th cyclotomic polynomial.
/// The representation is canonical, so equality is coefficient equality.
class CycScalar {
 public:
  CycScalar() : CycScalar(1) {}
  explicit CycScalar(int order);
  CycScalar(int order, const Rational& value);
  CycScalar(int order, long value) : CycScalar(order, Rational(value)) {}
  CycScalar(int order, std::vector<Rational> coeffs);

  static CycScalar root_of_unity(int order, long k);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws FieldError unless the value lies in Q.
  const Rational& rational() const;
  /// Sign of a rational value; throws for irrational values.
  int sign() const;

  /// Image under Q(z_m) -> Q(z_N), z_m = z_N^(N/m); requires m | N.
  CycScalar embed(int order) const;

  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator/=(const CycScalar& o);
  CycScalar inverse() const;
  CycScalar pow(long e) const;

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }

  bool operator==(const CycScalar& o) const;
  /// Deterministic total order (order, then coefficients); not a field order.
  std::strong_ordering operator<=>(const CycScalar& o) const;

  std::string str() const;

 private:
  void require_same_order(const CycScalar& o, const char* op) const;
  void reduce(std::vector<Rational>& poly) const;

  int order_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycScalar& x);

/// Scalar interpreted in a field of the given order: accepts "p/q" strings,
/// integers, or {"order","coeffs"} objects (embedded into `order`).
CycScalar scalar_from_json(const nlohmann::json& j, int order);
nlohmann::json to_json(const CycScalar& x);
CycScalar from_json_exact(const nlohmann::json& j);

}  // namespace toroidal
