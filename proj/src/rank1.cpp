#include "blockmagic/rank1.hpp"

#include "blockmagic/blockrep.hpp"
#include "blockmagic/classify.hpp"
#include "blockmagic/error.hpp"

namespace blockmagic {

namespace {

bool is_column(const Matrix& m) { return m.cols() == 1 && m.rows() > 0; }

Matrix stack_pair(const Matrix& top, const Matrix& bottom) { return vstack({top, bottom}); }

Matrix rows_of(const Matrix& m, std::size_t r1, std::size_t r2) { return vstack({m.row(r1), m.row(r2)}); }

QuadScalar det2(const Matrix& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

void require_lambda(const QuadScalar& lambda) {
  if (lambda.is_zero()) throw Error(ErrorCode::LambdaZero, "(u^T x)(y^T v) = 0");
}

}  // namespace

void validate(const Rank1Spec& spec) {
  const std::size_t n = spec.u.rows();
  for (const Matrix* m : {&spec.u, &spec.v, &spec.x, &spec.y}) {
    if (!is_column(*m) || m->rows() != n) {
      throw Error(ErrorCode::DimensionMismatch, "u, v, x, y must be columns of one length");
    }
    if (m->is_zero()) throw Error(ErrorCode::ZeroVector, "u, v, x, y must be nonzero");
  }
}

Matrix build_rank1(const Rank1Spec& spec, const QuadScalar& w) {
  validate(spec);
  const std::size_t n = spec.half();
  Matrix b(2 * n, 2 * n);
  b.set_block(0, n, spec.V().transpose());
  b.set_block(n, 0, spec.W());
  Matrix m = from_block(b);
  if (!w.is_zero()) m += w * Matrix::ones(2 * n);
  return m;
}

AlternativeVerdict alternative_classify(const Rank1Spec& spec) {
  const Matrix m = build_rank1(spec);
  AlternativeVerdict r;
  r.ux = spec.ux();
  r.yv = spec.yv();
  r.lambda = r.ux * r.yv;
  r.which = r.lambda.is_zero() ? AlternativeCase::NilpotentMagic : AlternativeCase::Rank2NotMagic;
  const Matrix sq = m * m;
  r.rank_of_square = rank(sq);
  r.square_magic = is_magic(sq);
  r.fourth_power_zero = (sq * sq).is_zero();
  if (r.which == AlternativeCase::Rank2NotMagic) {
    r.consistent = r.rank_of_square == 2 && !r.square_magic && !r.fourth_power_zero;
  } else {
    r.consistent = r.rank_of_square <= 1 && r.square_magic && r.fourth_power_zero;
  }
  return r;
}

bool is_parasymmetric(const Matrix& m) { return (m * m).is_symmetric(); }

std::optional<QuadScalar> parasym_factor(const Rank1Spec& spec) {
  validate(spec);
  const Matrix v = spec.V();
  const Matrix w = spec.W();
  for (std::size_t k = 0; k < v.entries().size(); ++k) {
    if (v[k].is_zero()) continue;
    const QuadScalar factor = w[k] / v[k];
    if (w == factor * v) return factor;
    return std::nullopt;
  }
  return std::nullopt;
}

bool is_paranormal(const Matrix& m) {
  const Matrix sq = m * m;
  const Matrix t = sq.transpose();
  return sq * t == t * sq;
}

MinimalPolyResult minimal_poly_rank1(const Rank1Spec& spec) {
  const Matrix m = build_rank1(spec);
  MinimalPolyResult r;
  r.lambda = spec.lambda();
  const Polynomial searched = minimal_polynomial(m);
  if (r.lambda.is_zero()) {
    r.poly = searched;
  } else if (spec.half() == 1) {
    r.poly = Polynomial({-r.lambda, QuadScalar(), QuadScalar(1)});
    r.from_lemma = true;
  } else {
    r.poly = Polynomial({QuadScalar(), -r.lambda, QuadScalar(), QuadScalar(1)});
    r.from_lemma = true;
  }
  r.verified = r.poly == searched;
  r.annihilates = evaluate(r.poly, m).is_zero();
  return r;
}

Multiplicity multiplicity(const Matrix& m, const QuadScalar& mu) {
  Multiplicity out;
  out.algebraic = root_multiplicity(char_poly(m), mu);
  out.geometric = null_space(m - mu * Matrix::identity(m.rows())).size();
  return out;
}

EigenStructure eigen_structure(const Rank1Spec& spec) {
  validate(spec);
  EigenStructure r;
  r.lambda = spec.lambda();
  require_lambda(r.lambda);
  const std::size_t n = spec.half();
  const Matrix j = Matrix::antidiag(n);
  r.right = {stack_pair(spec.v, j * spec.v), stack_pair(-(j * spec.x), spec.x)};
  r.left = {stack_pair(spec.y, j * spec.y), stack_pair(-(j * spec.u), spec.u)};

  const Matrix m = build_rank1(spec);
  const Matrix sq = m * m;
  const Matrix sqt = sq.transpose();
  r.right_verified = sq * r.right.first == r.lambda * r.right.first && sq * r.right.second == r.lambda * r.right.second;
  r.left_verified = sqt * r.left.first == r.lambda * r.left.first && sqt * r.left.second == r.lambda * r.left.second;
  r.right_orthogonal = dot(r.right.first, r.right.second).is_zero();
  r.left_orthogonal = dot(r.left.first, r.left.second).is_zero();

  QuadScalar root;
  if (r.lambda.is_rational() && quad_sqrt_of_rational(r.lambda.rat(), root)) {
    r.sqrt_lambda = root;
    r.eigvals_of_M = "+-" + root.to_string();
  } else {
    r.eigvals_of_M = "+-sqrt(" + r.lambda.to_string() + ")";
  }
  r.square_lambda = multiplicity(sq, r.lambda);
  r.square_zero = multiplicity(sq, QuadScalar());
  return r;
}

Matrix pivot_diagonal(std::size_t dim, std::pair<std::size_t, std::size_t> pivots, const QuadScalar& value) {
  Matrix d(dim, dim);
  d(pivots.first, pivots.first) = value;
  d(pivots.second, pivots.second) = value;
  return d;
}

TwoSidedEigenMatrix build_two_sided_P(const Rank1Spec& spec,
                                      std::optional<std::pair<std::size_t, std::size_t>> pivots) {
  validate(spec);
  TwoSidedEigenMatrix r;
  r.lambda = spec.lambda();
  require_lambda(r.lambda);
  const std::size_t n = spec.half();
  const std::size_t dim = 2 * n;
  const Matrix j = Matrix::antidiag(n);
  const Matrix p1 = hstack({stack_pair(spec.v, j * spec.v), stack_pair(-(j * spec.x), spec.x)});
  const Matrix p2 = hstack({stack_pair(spec.y, j * spec.y), stack_pair(-(j * spec.u), spec.u)});

  auto regular = [&](std::size_t a, std::size_t b) {
    return !det2(rows_of(p1, a, b)).is_zero() && !det2(rows_of(p2, a, b)).is_zero();
  };
  if (pivots) {
    if (pivots->first >= pivots->second || pivots->second >= dim || !regular(pivots->first, pivots->second)) {
      throw Error(ErrorCode::NoRegularPivot, "requested pivot rows are not a regular pair");
    }
  } else if (regular(n - 1, n)) {
    pivots = std::make_pair(n - 1, n);
  } else {
    for (std::size_t a = 0; a < dim && !pivots; ++a)
      for (std::size_t b = a + 1; b < dim && !pivots; ++b)
        if (regular(a, b)) pivots = std::make_pair(a, b);
    if (!pivots) throw Error(ErrorCode::NoRegularPivot, "no row pair is regular in both eigenvector blocks");
  }
  r.pivot_rows = *pivots;
  const auto [r1, r2] = r.pivot_rows;

  const Matrix t1 = -(p1 * inverse(rows_of(p1, r1, r2)));
  const Matrix t2 = -(p2 * inverse(rows_of(p2, r1, r2)));
  r.P = Matrix::identity(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    r.P(i, r1) += t1(i, 0);
    r.P(i, r2) += t1(i, 1);
    r.P(r1, i) += t2(i, 0);
    r.P(r2, i) += t2(i, 1);
  }

  const Matrix m = build_rank1(spec);
  const Matrix sq = m * m;
  Matrix keep = Matrix::identity(dim);
  keep(r1, r1) = 0;
  keep(r2, r2) = 0;
  r.P_inv = keep - sq * r.lambda.inverse();

  const Matrix d = pivot_diagonal(dim, r.pivot_rows, r.lambda);
  r.inverse_ok = r.P * r.P_inv == Matrix::identity(dim) && r.P_inv * r.P == Matrix::identity(dim);
  r.right_ok = sq * r.P == r.P * d;
  r.left_ok = r.P * sq == d * r.P;
  return r;
}

}  // namespace blockmagic
