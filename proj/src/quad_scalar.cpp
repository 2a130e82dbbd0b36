#include "blockmagic/quad_scalar.hpp"

#include <cctype>

#include "blockmagic/error.hpp"

namespace blockmagic {

QuadScalar QuadScalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDivision, "inverse of zero in Q(sqrt 2)");
  const Rational n = norm();
  return QuadScalar(rat_ / n, -irr_ / n);
}

int QuadScalar::sign() const {
  const int a = rat_.sign();
  const int b = irr_.sign();
  if (a >= 0 && b >= 0) return (a > 0 || b > 0) ? 1 : 0;
  if (a <= 0 && b <= 0) return -1;
  // Opposite signs: compare rat^2 with 2 irr^2. They are never equal.
  const int n = norm().sign();
  return a > 0 ? n : -n;
}

std::string QuadScalar::to_string() const {
  if (irr_.is_zero()) return rat_.to_string();
  std::string irr_part = irr_.to_string() + "*s2";
  if (rat_.is_zero()) return irr_part;
  return rat_.to_string() + (irr_.sign() > 0 ? "+" : "") + irr_part;
}

QuadScalar QuadScalar::parse(std::string_view text) {
  auto fail = [&]() -> QuadScalar {
    throw Error(ErrorCode::Parse, "malformed scalar '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();

  Rational rat;
  Rational irr;
  std::size_t pos = 0;
  while (pos < text.size()) {
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      return fail();
    }

    Rational coeff(1);
    bool irrational = false;
    if (text.substr(pos, 2) == "s2") {
      irrational = true;
      pos += 2;
    } else {
      const std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) {
        ++pos;
      }
      if (pos == start) return fail();
      coeff = Rational::parse(text.substr(start, pos - start));
      if (text.substr(pos, 3) == "*s2") {
        irrational = true;
        pos += 3;
      }
    }
    if (negative) coeff = -coeff;
    (irrational ? irr : rat) += coeff;
  }
  return QuadScalar(rat, irr);
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& rhs) {
  rat_ += rhs.rat_;
  irr_ += rhs.irr_;
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& rhs) {
  rat_ -= rhs.rat_;
  irr_ -= rhs.irr_;
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& rhs) {
  if (irr_.is_zero() && rhs.irr_.is_zero()) {
    rat_ *= rhs.rat_;
    return *this;
  }
  // (a1 + b1 s)(a2 + b2 s) = (a1 a2 + 2 b1 b2) + (a1 b2 + a2 b1) s
  Rational r = rat_ * rhs.rat_ + Rational(2) * irr_ * rhs.irr_;
  Rational i = rat_ * rhs.irr_ + rhs.rat_ * irr_;
  rat_ = std::move(r);
  irr_ = std::move(i);
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& rhs) {
  if (rhs.irr_.is_zero()) {
    if (rhs.rat_.is_zero()) throw Error(ErrorCode::ZeroDivision, "division by zero in Q(sqrt 2)");
    rat_ /= rhs.rat_;
    irr_ /= rhs.rat_;
    return *this;
  }
  return *this *= rhs.inverse();
}

QuadScalar quad_arith(QuadOp op, const QuadScalar& a, const QuadScalar& b) {
  switch (op) {
    case QuadOp::Add: return a + b;
    case QuadOp::Sub: return a - b;
    case QuadOp::Mul: return a * b;
  }
  return {};
}

QuadScalar quad_invert(const QuadScalar& a) { return a.inverse(); }

bool quad_sqrt_of_rational(const Rational& value, QuadScalar& root) {
  Rational r;
  if (rational_sqrt(value, r)) {
    root = QuadScalar(r);
    return true;
  }
  // value = 2 s^2  =>  sqrt(value) = s sqrt(2)
  if (rational_sqrt(value / Rational(2), r)) {
    root = QuadScalar(Rational(0), r);
    return true;
  }
  return false;
}

}  // namespace blockmagic
