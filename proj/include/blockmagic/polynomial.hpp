#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "blockmagic/matrix.hpp"

namespace blockmagic {

/// Univariate polynomial over Q(sqrt 2). Coefficients are stored in
/// ascending order of degree and kept trimmed (no trailing zeros).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<QuadScalar> ascending);

  static Polynomial monomial(std::size_t degree, QuadScalar coeff = 1);
  /// x - root
  static Polynomial linear_factor(const QuadScalar& root);

  const std::vector<QuadScalar>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  QuadScalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : QuadScalar(); }

  QuadScalar evaluate(const QuadScalar& x) const;

  /// Renders e.g. "x^3 - 8736*x" in the scalar grammar of the coefficients.
  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<QuadScalar> coeffs_;
};

struct PolyDivision {
  Polynomial quotient;
  Polynomial remainder;
};

PolyDivision divmod(const Polynomial& numerator, const Polynomial& denominator);

/// Multiplicity of `root` as a zero of p (0 when p(root) != 0).
std::size_t root_multiplicity(Polynomial p, const QuadScalar& root);

/// p(M) by Horner's rule.
Matrix evaluate(const Polynomial& p, const Matrix& m);

/// Monic minimal polynomial, found as the first linear dependence among
/// I, M, M^2, ...
Polynomial minimal_polynomial(const Matrix& m);

/// Largest dimension accepted by char_poly when no explicit bound is given:
/// BLOCKMAGIC_MAX_DIM from the environment, or 16.
std::size_t default_char_poly_bound();

/// Monic characteristic polynomial det(xI - M) via the Faddeev-LeVerrier
/// recursion, which is exact over a field of characteristic zero.
Polynomial char_poly(const Matrix& m, std::size_t max_dim = default_char_poly_bound());

}  // namespace blockmagic
