#pragma once

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

#include "blockmagic/rational.hpp"

namespace blockmagic {

/// Element rat + irr*sqrt(2) of the field Q(sqrt 2).
///
/// Equality is component-wise; since sqrt(2) is irrational this coincides with
/// equality of real values, so the ordering below is a total order.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(Rational rat, Rational irr = Rational()) : rat_(std::move(rat)), irr_(std::move(irr)) {}

  template <std::signed_integral I>
  QuadScalar(I value) : rat_(value) {}

  static QuadScalar sqrt2() { return QuadScalar(Rational(0), Rational(1)); }

  /// Grammar: a sum of terms, each "p", "p/q", "s2", "p*s2" or "p/q*s2",
  /// joined by '+' or '-'. Whitespace is not allowed inside a scalar.
  static QuadScalar parse(std::string_view text);

  const Rational& rat() const { return rat_; }
  const Rational& irr() const { return irr_; }

  bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }
  bool is_rational() const { return irr_.is_zero(); }

  QuadScalar conjugate() const { return QuadScalar(rat_, -irr_); }
  /// rat^2 - 2 irr^2; nonzero for every nonzero element.
  Rational norm() const { return rat_ * rat_ - Rational(2) * irr_ * irr_; }
  QuadScalar inverse() const;

  /// Sign of the real number rat + irr*sqrt(2), decided without floating point.
  int sign() const;

  /// Renders "p/q", "r/s*s2" or "p/q+r/s*s2".
  std::string to_string() const;

  QuadScalar operator-() const { return QuadScalar(-rat_, -irr_); }
  QuadScalar& operator+=(const QuadScalar& rhs);
  QuadScalar& operator-=(const QuadScalar& rhs);
  QuadScalar& operator*=(const QuadScalar& rhs);
  QuadScalar& operator/=(const QuadScalar& rhs);

  friend QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
  friend QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
  friend QuadScalar operator*(QuadScalar a, const QuadScalar& b) { return a *= b; }
  friend QuadScalar operator/(QuadScalar a, const QuadScalar& b) { return a /= b; }

  friend bool operator==(const QuadScalar& a, const QuadScalar& b) {
    return a.rat_ == b.rat_ && a.irr_ == b.irr_;
  }
  friend std::strong_ordering operator<=>(const QuadScalar& a, const QuadScalar& b) {
    const int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rational rat_;
  Rational irr_;
};

enum class QuadOp { Add, Sub, Mul };

QuadScalar quad_arith(QuadOp op, const QuadScalar& a, const QuadScalar& b);
QuadScalar quad_invert(const QuadScalar& a);
inline bool quad_is_rational(const QuadScalar& a) { return a.is_rational(); }

/// Exact square root inside Q(sqrt 2) for a rational argument of the form
/// s^2 or 2 s^2. Returns false otherwise.
bool quad_sqrt_of_rational(const Rational& value, QuadScalar& root);

}  // namespace blockmagic
