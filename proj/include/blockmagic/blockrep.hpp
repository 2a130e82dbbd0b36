#pragma once

#include <cstddef>
#include <optional>

#include "blockmagic/matrix.hpp"

namespace blockmagic {

/// The symmetric involution X_n that conjugates a semimagic square into its
/// block representation.
///
/// Even n = 2k:    X = 1/sqrt2 [[I_k, J_k], [J_k, -I_k]]
/// Odd n = 2k + 1: the same with an extra centre row/column that is e_centre.
struct InvolutionX {
  std::size_t n = 0;
  Matrix matrix;
};

/// Builds X_n for n >= 2.
InvolutionX build_x(std::size_t n);

/// Shared, lazily built copy of X_n. Safe to call from several threads.
const Matrix& involution(std::size_t n);

/// X_n M X_n. Since X_n is an involution the same map also converts a block
/// representation back into the square.
Matrix to_block(const Matrix& m);
inline Matrix from_block(const Matrix& b) { return to_block(b); }

enum class Parity { Even, Odd };

/// Free parameters (w, Y, Z, V, W) of a semimagic square of dimension 2n or
/// 2n + 1. In the even case Y must be weight-0 semimagic and V, W must have
/// zero row sums; in the odd case the four blocks are unconstrained.
///
/// The block representation is
///   even: [[Y + 2wE, V^T], [W, Z]]
///   odd:  [[Y + 2wE,               sqrt2 (w1 - Y1),     V^T          ],
///          [sqrt2 (w1 - Y^T 1)^T,  w + 2 1^T Y 1,       -sqrt2 (V1)^T],
///          [W,                     -sqrt2 W1,           Z            ]]
struct BlockComponents {
  Parity parity = Parity::Even;
  std::size_t half = 0;
  QuadScalar w;
  Matrix Y;
  Matrix Z;
  Matrix V;
  Matrix W;

  std::size_t dimension() const { return parity == Parity::Even ? 2 * half : 2 * half + 1; }
  friend bool operator==(const BlockComponents&, const BlockComponents&) = default;
};

/// Zero components for a square of the given dimension (>= 2).
BlockComponents zero_components(std::size_t dimension);

/// The block representation (before conjugation) described by the components.
/// Throws InvalidComponents naming the violated constraint.
Matrix block_layout(const BlockComponents& c);

/// The semimagic square with the given components.
Matrix assemble(const BlockComponents& c);

/// Inverse of assemble. When no weight is given it is inferred from the row
/// sums. Throws NotSemimagic for a non-semimagic input or a weight mismatch and
/// InconsistentBlocks when the block representation violates the forced
/// pattern.
BlockComponents extract_components(const Matrix& m, std::optional<QuadScalar> weight = std::nullopt);

/// M = associated + balanced + weight * E with both parts of weight 0.
struct AbwDecomposition {
  Matrix associated;
  Matrix balanced;
  QuadScalar weight;
};

AbwDecomposition decompose_abw(const Matrix& m);

}  // namespace blockmagic
