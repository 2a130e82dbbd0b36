#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "blockmagic/rank1.hpp"

namespace blockmagic {

/// scale * (a x1^2 + b x1 x2 + c x2^2)
struct BinaryForm {
  QuadScalar a;
  QuadScalar b;
  QuadScalar c;
  QuadScalar scale{1};

  QuadScalar value(const QuadScalar& x1, const QuadScalar& x2) const;
  /// The same form with scale 1.
  BinaryForm expanded() const;
  /// Rational coefficients are divided by their content (gcd) and the content
  /// moves into the scale; the first nonzero coefficient is made positive.
  /// Forms with irrational coefficients are only expanded.
  BinaryForm normalized() const;
  /// The same form written with the given nonzero scale.
  BinaryForm with_scale(const QuadScalar& s) const;
  /// Same polynomial, whatever the scale split.
  bool same_polynomial(const BinaryForm& other) const;
  /// "s*(a*x1^2 + b*x1*x2 + c*x2^2)"
  std::string to_string() const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

/// scale * (binary(x1, x2) + cross * x0 * (x1 - x2)), where x0 stands for the
/// collapsed linear functional over the remaining eigenvector coordinates.
struct TernaryForm {
  BinaryForm binary;
  QuadScalar cross;
  QuadScalar scale{1};
  /// Non-pivot column indices of P, in column order.
  std::vector<std::size_t> columns;
  /// Label j of the coordinate alpha_j attached to each entry of `columns`:
  /// left columns are 3, 4, ..., and for the centre pivot the mirror of the
  /// left column labelled j is labelled j + n - 1.
  std::vector<std::size_t> labels;
  /// b_j^T b_1 and b_j^T b_2 for the non-pivot columns.
  std::vector<QuadScalar> c;
  std::vector<QuadScalar> d;
  /// d = -c, so the remaining terms factor through (x1 - x2).
  bool collapsed = false;
  /// c / cross, the primitive functional defining x0.
  std::vector<QuadScalar> functional;

  /// Renders the functional as "4*(a3 - a6) - (a4 - a7) - 3*(a5 - a8)" when the
  /// columns pair up as mirror images, otherwise as a plain sum.
  std::string functional_string() const;
  std::string to_string() const;
};

struct QFormCoefficients {
  std::size_t half = 0;
  QuadScalar w;
  Matrix weight_part;
  Matrix xi_matrix;
  Matrix eta_matrix;
  /// a^2 = b^2 = 0, e^2 = n e, ae = ea = eb = be = 0 on the decomposed blocks.
  bool relations_ok = false;
  /// X M^2 X = diag(weight_part + xi_matrix, eta_matrix).
  bool square_block_ok = false;
};

/// Throws NotAssociatedEven.
QFormCoefficients qform_coefficients(const Matrix& m);

/// Evaluates 4nw^2 xi^T E xi + xi^T V^T W xi + eta^T W V^T eta.
QuadScalar qform_value(const QFormCoefficients& q, const Matrix& xi, const Matrix& eta);

/// (k/2)((u^T u) z1^2 + (v^T v) z2^2). Throws NotParasymmetric.
BinaryForm reduced_q1(const Rank1Spec& spec);

enum class EigenSource { Natural, Teigen };

using QuadraticForm = std::variant<BinaryForm, TernaryForm>;

struct EigenbasisForm {
  QuadraticForm form;
  /// The two lambda-eigenvectors b1, b2 used.
  Matrix b1;
  Matrix b2;
  /// Full change of basis X = P alpha (teigen only).
  std::optional<Matrix> basis;
};

/// Natural: q3 from b1 = (v; Jv), b2 = (-Ju; u), written as 2 lambda times
/// ((b1^T b1 / 2) x1^2 + (b2^T b2 / 2) x2^2); requires parasymmetry.
/// Teigen: the pivot columns of the two-sided P; binary q2 in the
/// parasymmetric case (normalized), else the ternary form.
/// Throws LambdaZero or NotParasymmetric.
EigenbasisForm q_from_eigenbasis(const Rank1Spec& spec, EigenSource source);

/// scale^2 (b^2 - 4ac)
QuadScalar discriminant(const BinaryForm& f);

enum class Equivalence { MaybeEquivalent, NotEquivalent };

Equivalence z_equivalence_necessary(const BinaryForm& f, const BinaryForm& g);

}  // namespace blockmagic
