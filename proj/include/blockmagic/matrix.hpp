#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "blockmagic/quad_scalar.hpp"

namespace blockmagic {

/// Dense row-major matrix over Q(sqrt 2). Column vectors are n x 1 matrices.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<QuadScalar> entries);
  Matrix(std::initializer_list<std::initializer_list<QuadScalar>> rows);

  static Matrix identity(std::size_t n);
  /// The all-ones matrix E_n.
  static Matrix ones(std::size_t n);
  static Matrix ones(std::size_t rows, std::size_t cols);
  /// J_n: ones on the antidiagonal.
  static Matrix antidiag(std::size_t n);
  static Matrix zero(std::size_t n) { return Matrix(n, n); }
  static Matrix ones_vector(std::size_t n) { return ones(n, 1); }
  static Matrix column(std::vector<QuadScalar> entries);
  static Matrix diagonal(const std::vector<QuadScalar>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<QuadScalar>& entries() const { return data_; }

  QuadScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const QuadScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Bounds-checked access; vectors may be indexed with a single index.
  const QuadScalar& at(std::size_t i, std::size_t j) const;
  const QuadScalar& operator[](std::size_t i) const { return data_[i]; }
  QuadScalar& operator[](std::size_t i) { return data_[i]; }

  Matrix transpose() const;
  Matrix block(std::size_t row, std::size_t col, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t row, std::size_t col, const Matrix& source);
  Matrix col(std::size_t j) const { return block(0, j, rows_, 1); }
  Matrix row(std::size_t i) const { return block(i, 0, 1, cols_); }

  bool is_zero() const;
  bool is_symmetric() const;
  bool is_rational() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const QuadScalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const QuadScalar& s) { return a *= s; }
  friend Matrix operator*(const QuadScalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string shape() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QuadScalar> data_;
};

Matrix hstack(const std::vector<Matrix>& parts);
Matrix vstack(const std::vector<Matrix>& parts);

enum class SpecialKind { Identity, Ones, Antidiag, Zero, OnesVector };
Matrix mat_build_special(SpecialKind kind, std::size_t n);

enum class MatOp { Add, Sub, Mul, Transpose };
/// Binary ops take both operands; Transpose ignores the second.
Matrix mat_arith(MatOp op, const Matrix& a, const Matrix& b = Matrix());

QuadScalar trace(const Matrix& m);
/// Inner product of two column vectors (or equal-shape matrices, entrywise).
QuadScalar dot(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, unsigned k);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form. Pivots are taken column by column, using the
/// first row (top to bottom) with a nonzero entry.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Matrix inverse(const Matrix& m);
/// Basis of the right null space. Each basis vector sets one free variable to
/// 1 (in index order) and the others to 0.
std::vector<Matrix> null_space(const Matrix& m);

}  // namespace blockmagic
