#include "toroidal/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace toroidal {

Vector zero_vector(int order, std::size_t n) { return Vector(n, CycScalar(order)); }

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector embed(const Vector& v, int order) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.embed(order));
  return out;
}

Matrix::Matrix(int order, std::size_t rows, std::size_t cols)
    : order_(order), rows_(rows), cols_(cols), data_(rows * cols, CycScalar(order)) {}

Matrix Matrix::identity(int order, std::size_t n) {
  Matrix m(order, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycScalar(order, 1L);
  return m;
}

Matrix Matrix::from_columns(int order, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(order, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(int order, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(order, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<long>(r * cols_),
                data_.begin() + static_cast<long>((r + 1) * cols_));
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(order_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix out(order_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const CycScalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const CycScalar& b = o(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  Vector out = zero_vector(order_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const CycScalar& a = (*this)(i, k);
      if (!a.is_zero() && !v[k].is_zero()) out[i] += a * v[k];
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Matrix Matrix::scaled(const CycScalar& s) const {
  Matrix out(*this);
  for (auto& x : out.data_) x *= s;
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& x = (*this)(r, c);
      if (r == c ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

Matrix Matrix::pow(unsigned e) const {
  Matrix result = identity(order_, rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Matrix Matrix::select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  Matrix out(order_, rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = (*this)(rs[i], cs[j]);
  return out;
}

Matrix Matrix::hcat(const Matrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hcat: row mismatch");
  Matrix out(order_, rows_, cols_ + o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < o.cols_; ++c) out(r, cols_ + c) = o(r, c);
  }
  return out;
}

Matrix Matrix::vcat(const Matrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("vcat: column mismatch");
  Matrix out(order_, rows_ + o.rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
  for (std::size_t r = 0; r < o.rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(rows_ + r, c) = o(r, c);
  return out;
}

Matrix Matrix::kron(const Matrix& o) const {
  Matrix out(order_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const CycScalar& a = (*this)(r, c);
      if (a.is_zero()) continue;
      for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) out(r * o.rows_ + i, c * o.cols_ + j) = a * o(i, j);
    }
  return out;
}

Matrix Matrix::embed(int order) const {
  Matrix out(order, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].embed(order);
  return out;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const CycScalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const CycScalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.order(), m.cols());
    v[free] = CycScalar(m.order(), 1L);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> column_basis(const std::vector<Vector>& vectors, int order, std::size_t dim) {
  if (vectors.empty()) return {};
  Matrix rows = Matrix::from_rows(order, dim, vectors);
  const auto pivots = rref(rows);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(rows.row(i));
  return out;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  Matrix aug = a.hcat(b);
  const auto pivots = rref(aug);
  for (auto p : pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(a.order(), a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = aug(i, a.cols() + j);
  return x;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  auto x = solve(a, Matrix::from_columns(a.order(), a.rows(), {b}));
  if (!x) return std::nullopt;
  return x->column(0);
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, Matrix::identity(a.order(), a.rows()));
}

std::vector<Vector> intersect_spans(const std::vector<Vector>& u, const std::vector<Vector>& v,
                                    int order, std::size_t dim) {
  if (u.empty() || v.empty()) return {};
  // Solve U a = V b: kernel of [U | -V].
  Matrix um = Matrix::from_columns(order, dim, u);
  Matrix vm = Matrix::from_columns(order, dim, v).scaled(CycScalar(order, -1L));
  const auto kernel = nullspace(um.hcat(vm));
  std::vector<Vector> images;
  for (const auto& k : kernel) {
    Vector a(k.begin(), k.begin() + static_cast<long>(u.size()));
    images.push_back(um * a);
  }
  return column_basis(images, order, dim);
}

bool span_contains(const std::vector<Vector>& basis, const Vector& v, int order, std::size_t dim) {
  if (toroidal::is_zero(v)) return true;
  if (basis.empty()) return false;
  return solve(Matrix::from_columns(order, dim, basis), v).has_value();
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).str();
  }
  os << "]";
  return os.str();
}

}  // namespace toroidal
