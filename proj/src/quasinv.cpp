#include "blockmagic/quasinv.hpp"

#include "blockmagic/error.hpp"

namespace blockmagic {

namespace {

QuadScalar scalar(std::size_t n) { return QuadScalar(static_cast<long>(n)); }

bool regular(const Matrix& m) { return rank(m) == m.rows(); }

QuasiInverseReport finish(const Matrix& m, Matrix q, std::string reason) {
  const Matrix u = quasi_unit(m.rows());
  const bool right = m * q == u;
  const bool left = q * m == u;
  QuasiInverseReport r;
  if (!right && !left) {
    r.reason = "verification_failed";
    return r;
  }
  r.exists = true;
  r.side = right && left ? QuasiSide::TwoSided : (right ? QuasiSide::Right : QuasiSide::Left);
  r.Q = std::move(q);
  r.reason = std::move(reason);
  return r;
}

QuasiInverseReport failure(std::string reason) {
  QuasiInverseReport r;
  r.reason = std::move(reason);
  return r;
}

QuasiInverseReport odd_associated(const Matrix& m) {
  const BlockComponents c = extract_components(m, QuadScalar());
  if (!regular(c.V)) return failure("rank_deficient_V");
  if (!regular(c.W)) return failure("rank_deficient_W");
  const std::size_t n = c.half;
  const Matrix e = Matrix::ones(n);
  const Matrix i = Matrix::identity(n);
  BlockComponents q = zero_components(c.dimension());
  q.W = inverse(c.V.transpose()) * (i - (QuadScalar(2) / scalar(2 * n + 1)) * e);
  q.V = (inverse(i + QuadScalar(2) * e) * inverse(c.W)).transpose();
  return finish(m, assemble(q), "odd_associated");
}

QuasiInverseReport odd_balanced(const Matrix& m) {
  const BlockComponents c = extract_components(m, QuadScalar());
  if (!regular(c.Y)) return failure("rank_deficient_Y");
  if (!regular(c.Z)) return failure("rank_deficient_Z");
  const std::size_t n = c.half;
  const Matrix e = Matrix::ones(n);
  const Matrix i = Matrix::identity(n);
  BlockComponents q = zero_components(c.dimension());
  q.Y = inverse(i + QuadScalar(2) * e) * inverse(c.Y) * (i - (QuadScalar(2) / scalar(2 * n + 1)) * e);
  q.Z = inverse(c.Z);
  return finish(m, assemble(q), "odd_balanced");
}

QuasiInverseReport even_balanced(const Matrix& m) {
  const BlockComponents c = extract_components(m, QuadScalar());
  if (!regular(c.Z)) return failure("rank_deficient_Z");
  Matrix y_inv;
  if (c.half == 1) {
    y_inv = Matrix::zero(1);
  } else {
    const QuasiInverseReport sub = quasi_inverse(c.Y);
    if (!sub.exists) return failure(sub.reason == "verification_failed" ? sub.reason : "rank_deficient_Y");
    y_inv = *sub.Q;
  }
  const std::size_t n = c.half;
  Matrix b(2 * n, 2 * n);
  b.set_block(0, 0, y_inv);
  b.set_block(n, n, inverse(c.Z));
  return finish(m, from_block(b), "even_balanced_recursive");
}

}  // namespace

Matrix quasi_unit(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
  return Matrix::identity(n) - (QuadScalar(1) / scalar(n)) * Matrix::ones(n);
}

const char* quasi_side_name(QuasiSide side) {
  switch (side) {
    case QuasiSide::None: return "none";
    case QuasiSide::Left: return "left";
    case QuasiSide::Right: return "right";
    case QuasiSide::TwoSided: return "two_sided";
  }
  return "none";
}

QuasiInverseReport quasi_inverse(const Matrix& m, std::optional<SymmetryReport> meta) {
  if (!meta) meta = classify(m);
  if (!meta->is_semimagic) throw Error(ErrorCode::NotSemimagic, "quasi-inverse needs a semimagic square");
  if (m.rows() == 1) {
    // The only weight-0 1x1 square is (0), and U_1 = (0).
    if (!m(0, 0).is_zero()) return failure("weighted_unsupported");
    return finish(m, Matrix::zero(1), "trivial_1x1");
  }
  if (!meta->weight->is_zero()) return failure("weighted_unsupported");
  const bool odd = m.rows() % 2 == 1;
  if (meta->is_associated) {
    if (!odd) return failure("even_associated_rank_bound");
    return odd_associated(m);
  }
  if (meta->is_balanced) return odd ? odd_balanced(m) : even_balanced(m);
  return failure("mixed_type_unsupported");
}

WeightShiftReport weight_shift_report(const Matrix& m0, const QuadScalar& w) {
  if (!m0.is_square() || m0.rows() % 2 != 0) {
    throw Error(ErrorCode::NotAssociatedEven, "weight shift needs an even-dimensional square");
  }
  const SymmetryReport meta = classify(m0);
  if (!meta.is_semimagic || !meta.weight->is_zero() || !meta.is_associated) {
    throw Error(ErrorCode::NotAssociatedWeightZero, "M_0 must be weight-0 associated");
  }
  if (w.is_zero()) throw Error(ErrorCode::InvalidArgument, "w must be nonzero");

  WeightShiftReport r;
  r.half = m0.rows() / 2;
  r.w = w;
  const Matrix mw = m0 + w * Matrix::ones(m0.rows());
  r.rank0 = rank(m0);
  r.rank_w = rank(mw);
  r.rank_increased_by_one = r.rank_w == r.rank0 + 1;

  const Polynomial x = Polynomial::monomial(1);
  auto extra = [&](const Matrix& base, const Matrix& shifted, bool& ok) -> std::optional<QuadScalar> {
    const PolyDivision d = divmod(char_poly(shifted) * x, char_poly(base));
    ok = d.remainder.is_zero() && d.quotient.degree() == 1;
    if (!ok) return std::nullopt;
    return -d.quotient.coeff(0);
  };
  bool ok_m = false;
  bool ok_sq = false;
  r.extra_eig_M = extra(m0, mw, ok_m);
  r.extra_eig_Msq = extra(m0 * m0, mw * mw, ok_sq);
  r.shared_spectrum_ok = ok_m && ok_sq;

  const QuadScalar n = scalar(r.half);
  r.extra_eig_M_is_2nw = r.extra_eig_M && *r.extra_eig_M == QuadScalar(2) * n * w;
  if (r.extra_eig_Msq) {
    r.msq_matches_2n2w2 = *r.extra_eig_Msq == QuadScalar(2) * n * n * w * w;
    r.msq_matches_4n2w2 = *r.extra_eig_Msq == QuadScalar(4) * n * n * w * w;
  }
  return r;
}

}  // namespace blockmagic
