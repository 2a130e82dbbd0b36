#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blockmagic/polynomial.hpp"

namespace blockmagic {

/// Generating vectors of the rank-1 block components V = u v^T, W = x y^T.
struct Rank1Spec {
  Matrix u;
  Matrix v;
  Matrix x;
  Matrix y;

  std::size_t half() const { return u.rows(); }
  Matrix V() const { return u * v.transpose(); }
  Matrix W() const { return x * y.transpose(); }
  QuadScalar ux() const { return dot(u, x); }
  QuadScalar yv() const { return dot(y, v); }
  /// (u^T x)(y^T v)
  QuadScalar lambda() const { return ux() * yv(); }
};

/// Throws DimensionMismatch for vectors of unequal length or not columns, and
/// ZeroVector when one of them vanishes.
void validate(const Rank1Spec& spec);

/// X [[0, v u^T], [x y^T, 0]] X + w E.
Matrix build_rank1(const Rank1Spec& spec, const QuadScalar& w = QuadScalar());

enum class AlternativeCase { Rank2NotMagic, NilpotentMagic };

struct AlternativeVerdict {
  AlternativeCase which = AlternativeCase::NilpotentMagic;
  QuadScalar lambda;
  QuadScalar ux;
  QuadScalar yv;
  std::size_t rank_of_square = 0;
  bool square_magic = false;
  bool fourth_power_zero = false;
  /// The verdict agrees with the computed rank, magic flag and M^4.
  bool consistent = false;
};

AlternativeVerdict alternative_classify(const Rank1Spec& spec);

/// M^2 is symmetric.
bool is_parasymmetric(const Matrix& m);
/// k with W = k V, when it exists.
std::optional<QuadScalar> parasym_factor(const Rank1Spec& spec);
/// M^2 commutes with its transpose.
bool is_paranormal(const Matrix& m);

struct MinimalPolyResult {
  Polynomial poly;
  QuadScalar lambda;
  /// x^3 - lambda x (or x^2 - lambda for n = 1) when lambda != 0; otherwise the
  /// polynomial comes from the power search.
  bool from_lemma = false;
  /// Agrees with the minimal polynomial found by the power search.
  bool verified = false;
  /// poly(M) = 0 by substitution.
  bool annihilates = false;
};

MinimalPolyResult minimal_poly_rank1(const Rank1Spec& spec);

struct Multiplicity {
  std::size_t algebraic = 0;
  std::size_t geometric = 0;
};

/// Algebraic multiplicity from the characteristic polynomial, geometric from
/// the null space of M - mu I.
Multiplicity multiplicity(const Matrix& m, const QuadScalar& mu);

struct EigenStructure {
  QuadScalar lambda;
  /// (v; Jv) and (-Jx; x)
  std::pair<Matrix, Matrix> right;
  /// (y; Jy) and (-Ju; u)
  std::pair<Matrix, Matrix> left;
  bool right_verified = false;
  bool left_verified = false;
  bool right_orthogonal = false;
  bool left_orthogonal = false;
  /// sqrt(lambda) when it lies in Q(sqrt 2).
  std::optional<QuadScalar> sqrt_lambda;
  /// "+-<root>" or "+-sqrt(<lambda>)".
  std::string eigvals_of_M;
  Multiplicity square_lambda;
  Multiplicity square_zero;
};

/// Throws LambdaZero.
EigenStructure eigen_structure(const Rank1Spec& spec);

struct TwoSidedEigenMatrix {
  Matrix P;
  Matrix P_inv;
  QuadScalar lambda;
  std::pair<std::size_t, std::size_t> pivot_rows;
  bool inverse_ok = false;
  bool right_ok = false;
  bool left_ok = false;
};

/// Pivot rows default to the centre pair (n-1, n) when regular in both
/// eigenvector blocks; otherwise the first regular pair in lexicographic order.
/// Throws LambdaZero or NoRegularPivot.
TwoSidedEigenMatrix build_two_sided_P(const Rank1Spec& spec,
                                      std::optional<std::pair<std::size_t, std::size_t>> pivots = std::nullopt);

/// diag(0_{r1}, lambda, ..., 0) with lambda on the pivot rows.
Matrix pivot_diagonal(std::size_t dim, std::pair<std::size_t, std::size_t> pivots, const QuadScalar& value);

}  // namespace blockmagic
