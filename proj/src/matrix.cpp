#include "blockmagic/matrix.hpp"

#include <utility>

#include "blockmagic/error.hpp"

namespace blockmagic {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " of " + a.shape() + " and " + b.shape());
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<QuadScalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(data_.size()));
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<QuadScalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::ones(std::size_t n) { return ones(n, n); }

Matrix Matrix::ones(std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, std::vector<QuadScalar>(rows * cols, QuadScalar(1)));
}

Matrix Matrix::antidiag(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
  return m;
}

Matrix Matrix::column(std::vector<QuadScalar> entries) {
  const std::size_t n = entries.size();
  return Matrix(n, 1, std::move(entries));
}

Matrix Matrix::diagonal(const std::vector<QuadScalar>& entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

const QuadScalar& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw Error(ErrorCode::DimensionMismatch,
                "index (" + std::to_string(i) + "," + std::to_string(j) + ") outside " + shape());
  }
  return (*this)(i, j);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t row, std::size_t col, std::size_t nrows, std::size_t ncols) const {
  if (row + nrows > rows_ || col + ncols > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block exceeds " + shape());
  }
  Matrix b(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row + i, col + j);
  return b;
}

void Matrix::set_block(std::size_t row, std::size_t col, const Matrix& source) {
  if (row + source.rows() > rows_ || col + source.cols() > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block " + source.shape() + " does not fit in " + shape());
  }
  for (std::size_t i = 0; i < source.rows(); ++i)
    for (std::size_t j = 0; j < source.cols(); ++j) (*this)(row + i, col + j) = source(i, j);
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_rational() const {
  for (const auto& x : data_)
    if (!x.is_rational()) return false;
  return true;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_same_shape(*this, rhs, "sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_same_shape(*this, rhs, "difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const QuadScalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "product of " + a.shape() + " and " + b.shape());
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const QuadScalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

std::string Matrix::shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

Matrix hstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) return {};
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != parts.front().rows()) throw Error(ErrorCode::DimensionMismatch, "hstack row mismatch");
    cols += p.cols();
  }
  Matrix m(parts.front().rows(), cols);
  std::size_t at = 0;
  for (const auto& p : parts) {
    m.set_block(0, at, p);
    at += p.cols();
  }
  return m;
}

Matrix vstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) return {};
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != parts.front().cols()) throw Error(ErrorCode::DimensionMismatch, "vstack column mismatch");
    rows += p.rows();
  }
  Matrix m(rows, parts.front().cols());
  std::size_t at = 0;
  for (const auto& p : parts) {
    m.set_block(at, 0, p);
    at += p.rows();
  }
  return m;
}

Matrix mat_build_special(SpecialKind kind, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
  switch (kind) {
    case SpecialKind::Identity: return Matrix::identity(n);
    case SpecialKind::Ones: return Matrix::ones(n);
    case SpecialKind::Antidiag: return Matrix::antidiag(n);
    case SpecialKind::Zero: return Matrix::zero(n);
    case SpecialKind::OnesVector: return Matrix::ones_vector(n);
  }
  return {};
}

Matrix mat_arith(MatOp op, const Matrix& a, const Matrix& b) {
  switch (op) {
    case MatOp::Add: return a + b;
    case MatOp::Sub: return a - b;
    case MatOp::Mul: return a * b;
    case MatOp::Transpose: return a.transpose();
  }
  return {};
}

QuadScalar trace(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "trace of " + m.shape());
  QuadScalar t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

QuadScalar dot(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "inner product");
  QuadScalar s;
  for (std::size_t k = 0; k < a.entries().size(); ++k) s += a[k] * b[k];
  return s;
}

Matrix power(const Matrix& m, unsigned k) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "power of " + m.shape());
  Matrix result = Matrix::identity(m.rows());
  Matrix base = m;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

RowEchelon rref(const Matrix& m) {
  RowEchelon out{m, {}};
  Matrix& a = out.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const QuadScalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const QuadScalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "inverse of " + m.shape());
  const std::size_t n = m.rows();
  const RowEchelon e = rref(hstack({m, Matrix::identity(n)}));
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) {
    throw Error(ErrorCode::Singular, "matrix " + m.shape() + " is rank deficient");
  }
  return e.reduced.block(0, n, n, n);
}

std::vector<Matrix> null_space(const Matrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Matrix> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Matrix v(m.cols(), 1);
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) v[e.pivot_cols[k]] = -e.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace blockmagic
