#include "blockmagic/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "blockmagic/error.hpp"

namespace blockmagic {

Polynomial::Polynomial(std::vector<QuadScalar> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial Polynomial::monomial(std::size_t degree, QuadScalar coeff) {
  std::vector<QuadScalar> c(degree + 1);
  c[degree] = std::move(coeff);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::linear_factor(const QuadScalar& root) { return Polynomial({-root, QuadScalar(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QuadScalar Polynomial::evaluate(const QuadScalar& x) const {
  QuadScalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const QuadScalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string mag;
    bool negative = false;
    if (c.is_rational()) {
      negative = c.sign() < 0;
      mag = (negative ? -c : c).to_string();
    } else {
      mag = "(" + c.to_string() + ")";
    }
    std::string term;
    if (k == 0) {
      term = mag;
    } else {
      term = mag == "1" ? "" : mag + "*";
      term += k == 1 ? "x" : "x^" + std::to_string(k);
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<QuadScalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<QuadScalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QuadScalar> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

PolyDivision divmod(const Polynomial& numerator, const Polynomial& denominator) {
  if (denominator.is_zero()) throw Error(ErrorCode::ZeroDivision, "polynomial division by zero");
  std::vector<QuadScalar> rem = numerator.coefficients();
  const auto& den = denominator.coefficients();
  const std::size_t dd = den.size() - 1;
  if (rem.size() <= dd) return {Polynomial(), numerator};
  std::vector<QuadScalar> quot(rem.size() - dd);
  const QuadScalar lead_inv = den.back().inverse();
  for (std::size_t k = rem.size(); k-- > dd;) {
    const QuadScalar f = rem[k] * lead_inv;
    quot[k - dd] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= f * den[j];
  }
  rem.resize(dd);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::size_t root_multiplicity(Polynomial p, const QuadScalar& root) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "multiplicity of a root of the zero polynomial");
  const Polynomial factor = Polynomial::linear_factor(root);
  std::size_t m = 0;
  while (p.degree() > 0) {
    PolyDivision d = divmod(p, factor);
    if (!d.remainder.is_zero()) break;
    p = std::move(d.quotient);
    ++m;
  }
  return m;
}

Matrix evaluate(const Polynomial& p, const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "polynomial of " + m.shape());
  const std::size_t n = m.rows();
  Matrix acc = Matrix::zero(n);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "minimal polynomial of " + m.shape());
  const std::size_t n = m.rows();
  std::vector<Matrix> powers{Matrix::identity(n)};
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * m);
    // Columns are vec(M^0) .. vec(M^k); a null vector is a relation among them.
    Matrix krylov(n * n, k + 1);
    for (std::size_t j = 0; j <= k; ++j)
      for (std::size_t e = 0; e < n * n; ++e) krylov(e, j) = powers[j][e];
    const std::vector<Matrix> relations = null_space(krylov);
    if (relations.empty()) continue;
    const Matrix& r = relations.front();
    std::vector<QuadScalar> c(k + 1);
    const QuadScalar lead = r[k];
    for (std::size_t j = 0; j <= k; ++j) c[j] = r[j] / lead;
    return Polynomial(std::move(c));
  }
  throw Error(ErrorCode::InvalidArgument, "no relation found up to the dimension");
}

std::size_t default_char_poly_bound() {
  if (const char* env = std::getenv("BLOCKMAGIC_MAX_DIM")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 16;
}

Polynomial char_poly(const Matrix& m, std::size_t max_dim) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "characteristic polynomial of " + m.shape());
  const std::size_t n = m.rows();
  if (n > max_dim) {
    throw Error(ErrorCode::DimensionTooLarge,
                "dimension " + std::to_string(n) + " exceeds bound " + std::to_string(max_dim));
  }
  // N_0 = 0, c_n = 1; N_k = M N_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(M N_k)/k.
  std::vector<QuadScalar> c(n + 1);
  c[n] = 1;
  Matrix nk = Matrix::zero(n);
  for (std::size_t k = 1; k <= n; ++k) {
    nk = m * nk;
    for (std::size_t i = 0; i < n; ++i) nk(i, i) += c[n - k + 1];
    c[n - k] = -trace(m * nk) / QuadScalar(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

}  // namespace blockmagic
