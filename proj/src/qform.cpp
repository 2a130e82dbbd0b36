#include "blockmagic/qform.hpp"

#include <utility>

#include "blockmagic/blockrep.hpp"
#include "blockmagic/classify.hpp"
#include "blockmagic/error.hpp"

namespace blockmagic {

namespace {

/// Joins signed terms "coef*monomial" into "t1 + t2 - t3". An empty monomial
/// renders the bare coefficient.
class TermWriter {
 public:
  void add(const QuadScalar& coef, const std::string& monomial) {
    if (coef.is_zero()) return;
    bool negative = false;
    std::string mag;
    if (coef.is_rational()) {
      negative = coef.sign() < 0;
      mag = (negative ? -coef : coef).to_string();
    } else {
      mag = "(" + coef.to_string() + ")";
    }
    std::string term;
    if (monomial.empty()) {
      term = mag;
    } else {
      term = mag == "1" ? monomial : mag + "*" + monomial;
    }
    if (out_.empty()) {
      out_ = (negative ? "-" : "") + term;
    } else {
      out_ += negative ? " - " : " + ";
      out_ += term;
    }
  }
  std::string str() const { return out_.empty() ? "0" : out_; }

 private:
  std::string out_;
};

std::string scaled(const QuadScalar& scale, const std::string& body) {
  if (scale == QuadScalar(1)) return body;
  const std::string s = scale.is_rational() ? scale.to_string() : "(" + scale.to_string() + ")";
  return s + "*(" + body + ")";
}

bool all_rational(const std::vector<QuadScalar>& xs) {
  for (const auto& x : xs)
    if (!x.is_rational()) return false;
  return true;
}

/// Positive gcd of rational entries, signed so that the first nonzero entry of
/// xs / content is positive. Zero for an all-zero list.
QuadScalar signed_content(const std::vector<QuadScalar>& xs) {
  Rational g;
  for (const auto& x : xs) g = rational_gcd(g, x.rat());
  if (g.is_zero()) return QuadScalar();
  for (const auto& x : xs) {
    if (x.is_zero()) continue;
    if (x.sign() < 0) g = -g;
    break;
  }
  return QuadScalar(g);
}

Matrix stack(const Matrix& top, const Matrix& bottom) { return vstack({top, bottom}); }

}  // namespace

QuadScalar BinaryForm::value(const QuadScalar& x1, const QuadScalar& x2) const {
  return scale * (a * x1 * x1 + b * x1 * x2 + c * x2 * x2);
}

BinaryForm BinaryForm::expanded() const { return {scale * a, scale * b, scale * c, QuadScalar(1)}; }

BinaryForm BinaryForm::normalized() const {
  const BinaryForm e = expanded();
  if (!all_rational({e.a, e.b, e.c})) return e;
  const QuadScalar g = signed_content({e.a, e.b, e.c});
  if (g.is_zero()) return e;
  return {e.a / g, e.b / g, e.c / g, g};
}

BinaryForm BinaryForm::with_scale(const QuadScalar& s) const {
  if (s.is_zero()) throw Error(ErrorCode::ZeroDivision, "form scale must be nonzero");
  const BinaryForm e = expanded();
  return {e.a / s, e.b / s, e.c / s, s};
}

bool BinaryForm::same_polynomial(const BinaryForm& other) const { return expanded() == other.expanded(); }

std::string BinaryForm::to_string() const {
  TermWriter t;
  t.add(a, "x1^2");
  t.add(b, "x1*x2");
  t.add(c, "x2^2");
  return scaled(scale, t.str());
}

std::string TernaryForm::functional_string() const {
  TermWriter t;
  std::vector<bool> used(columns.size(), false);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (used[i]) continue;
    std::size_t mate = columns.size();
    const std::size_t shift = columns.size() / 2;
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (!used[k] && k != i && labels[k] == labels[i] + shift && functional[k] == -functional[i]) mate = k;
    }
    if (mate < columns.size()) {
      used[mate] = true;
      t.add(functional[i], "(a" + std::to_string(labels[i]) + " - a" + std::to_string(labels[mate]) + ")");
    } else {
      t.add(functional[i], "a" + std::to_string(labels[i]));
    }
    used[i] = true;
  }
  return t.str();
}

std::string TernaryForm::to_string() const {
  TermWriter cross_term;
  cross_term.add(cross, "x0*(x1-x2)");
  std::string body = binary.to_string();
  if (!cross.is_zero()) {
    const bool negative = cross.is_rational() && cross.sign() < 0;
    const std::string c = cross_term.str();
    body += negative ? " - " + c.substr(1) : " + " + c;
  }
  return scaled(scale, body);
}

QFormCoefficients qform_coefficients(const Matrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0) {
    throw Error(ErrorCode::NotAssociatedEven, "quadratic form needs an even-dimensional square");
  }
  const SymmetryReport meta = classify(m);
  if (!meta.is_associated || !meta.is_magic) {
    throw Error(ErrorCode::NotAssociatedEven, "quadratic form needs an associated magic square");
  }
  const BlockComponents c = extract_components(m);
  const std::size_t n = c.half;
  QFormCoefficients q;
  q.half = n;
  q.w = c.w;
  const QuadScalar nn(static_cast<long>(n));
  q.weight_part = QuadScalar(4) * nn * c.w * c.w * Matrix::ones(n);
  q.xi_matrix = c.V.transpose() * c.W;
  q.eta_matrix = c.W * c.V.transpose();

  Matrix a(2 * n, 2 * n);
  Matrix b(2 * n, 2 * n);
  Matrix e(2 * n, 2 * n);
  a.set_block(0, n, c.V.transpose());
  b.set_block(n, 0, c.W);
  e.set_block(0, 0, Matrix::ones(n));
  q.relations_ok = (a * a).is_zero() && (b * b).is_zero() && e * e == nn * e && (a * e).is_zero() &&
                   (e * a).is_zero() && (e * b).is_zero() && (b * e).is_zero();

  Matrix expected(2 * n, 2 * n);
  expected.set_block(0, 0, q.weight_part + q.xi_matrix);
  expected.set_block(n, n, q.eta_matrix);
  q.square_block_ok = to_block(m * m) == expected;
  return q;
}

QuadScalar qform_value(const QFormCoefficients& q, const Matrix& xi, const Matrix& eta) {
  const Matrix top = xi.transpose() * (q.weight_part + q.xi_matrix) * xi;
  const Matrix bottom = eta.transpose() * q.eta_matrix * eta;
  return top(0, 0) + bottom(0, 0);
}

BinaryForm reduced_q1(const Rank1Spec& spec) {
  const std::optional<QuadScalar> k = parasym_factor(spec);
  if (!k) throw Error(ErrorCode::NotParasymmetric, "W is not a multiple of V");
  const QuadScalar half_k = *k / QuadScalar(2);
  return {half_k * dot(spec.u, spec.u), QuadScalar(), half_k * dot(spec.v, spec.v), QuadScalar(1)};
}

EigenbasisForm q_from_eigenbasis(const Rank1Spec& spec, EigenSource source) {
  validate(spec);
  const QuadScalar lambda = spec.lambda();
  if (lambda.is_zero()) throw Error(ErrorCode::LambdaZero, "(u^T x)(y^T v) = 0");
  const std::size_t n = spec.half();
  const Matrix m = build_rank1(spec);

  if (source == EigenSource::Natural) {
    if (!parasym_factor(spec)) {
      throw Error(ErrorCode::NotParasymmetric, "the natural eigenvectors give a diagonal form only when M^2 is symmetric");
    }
    const Matrix j = Matrix::antidiag(n);
    const Matrix b1 = stack(spec.v, j * spec.v);
    const Matrix b2 = stack(-(j * spec.u), spec.u);
    const QuadScalar half(Rational(1, 2));
    BinaryForm f{half * dot(b1, b1), QuadScalar(), half * dot(b2, b2), QuadScalar(2) * lambda};
    return {f, b1, b2, std::nullopt};
  }

  const TwoSidedEigenMatrix t = build_two_sided_P(spec);
  const auto [r1, r2] = t.pivot_rows;
  const Matrix b1 = t.P.col(r1);
  const Matrix b2 = t.P.col(r2);
  const QuadScalar b11 = dot(b1, b1);
  const QuadScalar b12 = dot(b1, b2);
  const QuadScalar b22 = dot(b2, b2);

  if (is_parasymmetric(m)) {
    BinaryForm f{lambda * b11, QuadScalar(2) * lambda * b12, lambda * b22, QuadScalar(1)};
    return {f.normalized(), b1, b2, t.P};
  }

  TernaryForm q;
  q.scale = lambda;
  q.binary = BinaryForm{b11, QuadScalar(2) * b12, b22, QuadScalar(1)}.normalized();
  const bool centre = r1 == n - 1 && r2 == n;
  std::size_t next_label = 3;
  for (std::size_t col = 0; col < 2 * n; ++col) {
    if (col == r1 || col == r2) continue;
    const Matrix bj = t.P.col(col);
    q.columns.push_back(col);
    q.c.push_back(dot(bj, b1));
    q.d.push_back(dot(bj, b2));
    if (centre && col > n) {
      q.labels.push_back((2 * n - 1 - col) + 3 + (n - 1));
    } else {
      q.labels.push_back(next_label++);
    }
  }
  q.collapsed = true;
  for (std::size_t i = 0; i < q.c.size(); ++i)
    if (q.d[i] != -q.c[i]) q.collapsed = false;
  if (all_rational(q.c)) {
    q.cross = signed_content(q.c);
  } else {
    q.cross = QuadScalar(1);
  }
  for (const auto& ci : q.c) q.functional.push_back(q.cross.is_zero() ? QuadScalar() : ci / q.cross);
  return {q, b1, b2, t.P};
}

QuadScalar discriminant(const BinaryForm& f) {
  return f.scale * f.scale * (f.b * f.b - QuadScalar(4) * f.a * f.c);
}

Equivalence z_equivalence_necessary(const BinaryForm& f, const BinaryForm& g) {
  return discriminant(f) == discriminant(g) ? Equivalence::MaybeEquivalent : Equivalence::NotEquivalent;
}

}  // namespace blockmagic
