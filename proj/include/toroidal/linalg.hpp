#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toroidal/cyclotomic.hpp"

namespace toroidal {

using Vector = std::vector<CycScalar>;

Vector zero_vector(int order, std::size_t n);
bool is_zero(const Vector& v);
Vector embed(const Vector& v, int order);

/// Dense row-major matrix over Q(z_N).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int order, std::size_t rows, std::size_t cols);

  static Matrix identity(int order, std::size_t n);
  static Matrix from_columns(int order, std::size_t rows, const std::vector<Vector>& cols);
  static Matrix from_rows(int order, std::size_t cols, const std::vector<Vector>& rows);

  int order() const { return order_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  CycScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  std::vector<Vector> columns() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const CycScalar& s) const;
  bool operator==(const Matrix& o) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_diagonal() const;
  Matrix pow(unsigned e) const;
  /// Block of selected rows and columns.
  Matrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  /// Horizontal concatenation [A | B].
  Matrix hcat(const Matrix& o) const;
  Matrix vcat(const Matrix& o) const;
  Matrix kron(const Matrix& o) const;
  /// Same entries viewed in Q(z_M), M a multiple of order().
  Matrix embed(int order) const;

 private:
  int order_ = 1;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycScalar> data_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of {x : m x = 0}, one vector per free column (canonical).
std::vector<Vector> nullspace(const Matrix& m);
/// Basis of the column space in canonical (reduced) form.
std::vector<Vector> column_basis(const std::vector<Vector>& vectors, int order, std::size_t dim);
/// Solution X of A X = B, if any.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Vector> solve(const Matrix& a, const Vector& b);
std::optional<Matrix> inverse(const Matrix& a);
/// Basis of span(U) intersect span(V) (both given as column lists in an ambient space of `dim`).
std::vector<Vector> intersect_spans(const std::vector<Vector>& u, const std::vector<Vector>& v,
                                    int order, std::size_t dim);
bool span_contains(const std::vector<Vector>& basis, const Vector& v, int order, std::size_t dim);

std::string to_string(const Matrix& m);

}  // namespace toroidal
