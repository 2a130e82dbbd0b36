#include "blockmagic/blockrep.hpp"

#include <map>
#include <mutex>

#include "blockmagic/classify.hpp"
#include "blockmagic/error.hpp"

namespace blockmagic {

namespace {

const QuadScalar kInvSqrt2(Rational(0), Rational(1, 2));

bool zero_row_sums(const Matrix& m) { return (m * Matrix::ones_vector(m.cols())).is_zero(); }

bool zero_col_sums(const Matrix& m) { return (Matrix::ones(1, m.rows()) * m).is_zero(); }

QuadScalar total(const Matrix& m) {
  QuadScalar s;
  for (const auto& x : m.entries()) s += x;
  return s;
}

void require_square_n(const Matrix& m, std::size_t n, const char* name) {
  if (m.rows() != n || m.cols() != n) {
    throw Error(ErrorCode::InvalidComponents,
                std::string(name) + " must be " + std::to_string(n) + "x" + std::to_string(n) + ", got " +
                    m.shape());
  }
}

}  // namespace

InvolutionX build_x(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "involution X_n needs n >= 2");
  const std::size_t k = n / 2;
  Matrix x(n, n);
  for (std::size_t i = 0; i < k; ++i) {
    x(i, i) = kInvSqrt2;
    x(i, n - 1 - i) = kInvSqrt2;
    x(n - 1 - i, i) = kInvSqrt2;
    x(n - 1 - i, n - 1 - i) = -kInvSqrt2;
  }
  if (n % 2 == 1) x(k, k) = 1;
  return {n, std::move(x)};
}

const Matrix& involution(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, InvolutionX> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_x(n)).first;
  return it->second.matrix;
}

Matrix to_block(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "block representation of " + m.shape());
  const Matrix& x = involution(m.rows());
  return x * m * x;
}

BlockComponents zero_components(std::size_t dimension) {
  if (dimension < 2) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 2");
  const std::size_t n = dimension / 2;
  return {dimension % 2 == 0 ? Parity::Even : Parity::Odd, n, QuadScalar(), Matrix::zero(n), Matrix::zero(n),
          Matrix::zero(n), Matrix::zero(n)};
}

Matrix block_layout(const BlockComponents& c) {
  const std::size_t n = c.half;
  if (n == 0) throw Error(ErrorCode::InvalidComponents, "half dimension must be positive");
  require_square_n(c.Y, n, "Y");
  require_square_n(c.Z, n, "Z");
  require_square_n(c.V, n, "V");
  require_square_n(c.W, n, "W");

  const Matrix ones = Matrix::ones_vector(n);
  const QuadScalar two_w = QuadScalar(2) * c.w;
  const QuadScalar sqrt2 = QuadScalar::sqrt2();

  if (c.parity == Parity::Even) {
    if (!zero_row_sums(c.Y) || !zero_col_sums(c.Y)) {
      throw Error(ErrorCode::InvalidComponents, "Y must be a weight-0 semimagic square (Y 1 = 0 = Y^T 1)");
    }
    if (!zero_row_sums(c.V)) throw Error(ErrorCode::InvalidComponents, "V must have row sums 0 (V 1 = 0)");
    if (!zero_row_sums(c.W)) throw Error(ErrorCode::InvalidComponents, "W must have row sums 0 (W 1 = 0)");
    Matrix b(2 * n, 2 * n);
    b.set_block(0, 0, c.Y + two_w * Matrix::ones(n));
    b.set_block(0, n, c.V.transpose());
    b.set_block(n, 0, c.W);
    b.set_block(n, n, c.Z);
    return b;
  }

  Matrix b(2 * n + 1, 2 * n + 1);
  b.set_block(0, 0, c.Y + two_w * Matrix::ones(n));
  b.set_block(0, n, sqrt2 * (c.w * ones - c.Y * ones));
  b.set_block(0, n + 1, c.V.transpose());
  b.set_block(n, 0, sqrt2 * (c.w * ones - c.Y.transpose() * ones).transpose());
  b(n, n) = c.w + QuadScalar(2) * total(c.Y);
  b.set_block(n, n + 1, -sqrt2 * (c.V * ones).transpose());
  b.set_block(n + 1, 0, c.W);
  b.set_block(n + 1, n, -sqrt2 * (c.W * ones));
  b.set_block(n + 1, n + 1, c.Z);
  return b;
}

Matrix assemble(const BlockComponents& c) { return from_block(block_layout(c)); }

BlockComponents extract_components(const Matrix& m, std::optional<QuadScalar> weight) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "components of " + m.shape());
  if (m.rows() < 2) throw Error(ErrorCode::InvalidArgument, "components need dimension >= 2");
  const std::optional<QuadScalar> inferred = semimagic_weight(m);
  if (!inferred) throw Error(ErrorCode::NotSemimagic, "row and column sums are not all equal");
  if (weight && *weight != *inferred) {
    throw Error(ErrorCode::NotSemimagic,
                "row sums imply weight " + inferred->to_string() + ", not " + weight->to_string());
  }

  BlockComponents c;
  c.w = *inferred;
  c.half = m.rows() / 2;
  const std::size_t n = c.half;
  const Matrix b = to_block(m);
  const Matrix ones = Matrix::ones_vector(n);
  const QuadScalar sqrt2 = QuadScalar::sqrt2();
  const Matrix top_left = b.block(0, 0, n, n);
  c.Y = top_left - QuadScalar(2) * c.w * Matrix::ones(n);

  auto inconsistent = [](const char* what) {
    throw Error(ErrorCode::InconsistentBlocks, what);
  };

  if (m.rows() % 2 == 0) {
    c.parity = Parity::Even;
    c.V = b.block(0, n, n, n).transpose();
    c.W = b.block(n, 0, n, n);
    c.Z = b.block(n, n, n, n);
    if (!zero_row_sums(c.Y) || !zero_col_sums(c.Y)) inconsistent("Y is not weight-0 semimagic");
    if (!zero_row_sums(c.V)) inconsistent("V has nonzero row sums");
    if (!zero_row_sums(c.W)) inconsistent("W has nonzero row sums");
    return c;
  }

  c.parity = Parity::Odd;
  c.V = b.block(0, n + 1, n, n).transpose();
  c.W = b.block(n + 1, 0, n, n);
  c.Z = b.block(n + 1, n + 1, n, n);

  // The top-left block is Y + 2wE and the centre is w + 2 1^T Y 1. Summing the
  // first gives s = 1^T Y 1 + 2 n^2 w, so w = (centre - 2 s) / (1 - 4 n^2).
  const QuadScalar nn(static_cast<long>(n * n));
  const QuadScalar w_blocks = (b(n, n) - QuadScalar(2) * total(top_left)) / (QuadScalar(1) - QuadScalar(4) * nn);
  if (w_blocks != c.w) inconsistent("centre entry disagrees with the top-left block");

  if (b.block(0, n, n, 1) != sqrt2 * (c.w * ones - c.Y * ones)) inconsistent("centre column (top) mismatch");
  if (b.block(n, 0, 1, n) != sqrt2 * (c.w * ones - c.Y.transpose() * ones).transpose()) {
    inconsistent("centre row (left) mismatch");
  }
  if (b.block(n, n + 1, 1, n) != -sqrt2 * (c.V * ones).transpose()) inconsistent("centre row (right) mismatch");
  if (b.block(n + 1, n, n, 1) != -sqrt2 * (c.W * ones)) inconsistent("centre column (bottom) mismatch");
  return c;
}

AbwDecomposition decompose_abw(const Matrix& m) {
  const std::optional<QuadScalar> w = semimagic_weight(m);
  if (!w) throw Error(ErrorCode::NotSemimagic, "decomposition needs a semimagic square");
  const std::size_t n = m.rows();
  const Matrix j = Matrix::antidiag(n);
  const Matrix m0 = m - *w * Matrix::ones(n);
  const Matrix mirrored = j * m0 * j;
  const QuadScalar half(Rational(1, 2));
  return {half * (m0 - mirrored), half * (m0 + mirrored), *w};
}

}  // namespace blockmagic
