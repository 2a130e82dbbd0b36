#include "blockmagic/rational.hpp"

#include <cctype>
#include <utility>

#include "blockmagic/error.hpp"

namespace blockmagic {

namespace {

bool parse_integer(std::string_view text, mpz_class& out) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) return false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  out.set_str(std::string(text.substr(pos)), 10);
  if (negative) out = -out;
  return true;
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw Error(ErrorCode::ZeroDivision, "rational with zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational::Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  mpz_class num;
  mpz_class den = 1;
  const bool ok = slash == std::string_view::npos
                      ? parse_integer(text, num)
                      : parse_integer(text.substr(0, slash), num) &&
                            parse_integer(text.substr(slash + 1), den) &&
                            text[slash + 1] != '+' && text[slash + 1] != '-';
  if (!ok) throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDivision, "reciprocal of zero");
  return Rational(q_.get_den(), q_.get_num());
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::ZeroDivision, "division by zero");
  q_ /= rhs.q_;
  return *this;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  // gcd(p/q, r/s) = gcd(p s, r q) / (q s), then reduced.
  const mpz_class qs = a.denominator() * b.denominator();
  mpz_class g;
  mpz_class lhs = a.numerator() * b.denominator();
  mpz_class rhs = b.numerator() * a.denominator();
  mpz_gcd(g.get_mpz_t(), lhs.get_mpz_t(), rhs.get_mpz_t());
  if (g == 0) return Rational(0);
  return Rational(g, qs);
}

bool rational_sqrt(const Rational& value, Rational& root) {
  if (value.sign() < 0) return false;
  const mpz_class num = value.numerator();
  const mpz_class den = value.denominator();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return false;
  }
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rational(rn, rd);
  return true;
}

}  // namespace blockmagic
