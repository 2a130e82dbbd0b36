#include "blockmagic/classify.hpp"

#include <algorithm>

#include "blockmagic/error.hpp"

namespace blockmagic {

namespace {

QuadScalar dimension_scalar(std::size_t n) { return QuadScalar(static_cast<long>(n)); }

QuadScalar antidiagonal_sum(const Matrix& m) {
  QuadScalar s;
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, m.rows() - 1 - i);
  return s;
}

bool lex_less(const Matrix& a, const Matrix& b) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [](const QuadScalar& p, const QuadScalar& q) { return p < q; });
}

Matrix rotate(const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = m(n - 1 - j, i);
  return r;
}

}  // namespace

std::optional<QuadScalar> semimagic_weight(const Matrix& m) {
  if (!m.is_square() || m.rows() == 0) return std::nullopt;
  const std::size_t n = m.rows();
  QuadScalar target;
  for (std::size_t j = 0; j < n; ++j) target += m(0, j);
  for (std::size_t i = 0; i < n; ++i) {
    QuadScalar row;
    QuadScalar col;
    for (std::size_t j = 0; j < n; ++j) {
      row += m(i, j);
      col += m(j, i);
    }
    if (row != target || col != target) return std::nullopt;
  }
  return target / dimension_scalar(n);
}

bool is_magic(const Matrix& m) {
  const auto w = semimagic_weight(m);
  if (!w) return false;
  const QuadScalar total = dimension_scalar(m.rows()) * *w;
  return trace(m) == total && antidiagonal_sum(m) == total;
}

bool is_trivial(const Matrix& m) {
  if (!m.is_square() || m.rows() == 0) return false;
  const QuadScalar& first = m(0, 0);
  return std::all_of(m.entries().begin(), m.entries().end(), [&](const QuadScalar& x) { return x == first; });
}

SymmetryReport classify(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "classify " + m.shape());
  SymmetryReport r;
  r.dimension = m.rows();
  r.weight = semimagic_weight(m);
  r.is_semimagic = r.weight.has_value();
  if (!r.is_semimagic) return r;
  const std::size_t n = m.rows();
  const QuadScalar twice = QuadScalar(2) * *r.weight;
  r.is_associated = true;
  r.is_balanced = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const QuadScalar& mirror = m(n - 1 - i, n - 1 - j);
      if (m(i, j) + mirror != twice) r.is_associated = false;
      if (m(i, j) != mirror) r.is_balanced = false;
    }
  }
  r.is_magic = is_magic(m);
  r.is_trivial = is_trivial(m);
  return r;
}

MagicCriteria magic_criteria_balanced(const BlockComponents& c) {
  if (!c.V.is_zero() || !c.W.is_zero()) throw Error(ErrorCode::NotBalanced, "V and W must vanish");
  MagicCriteria out;
  out.trace_z = trace(c.Z);
  const QuadScalar n = dimension_scalar(c.half);
  if (c.parity == Parity::Even) {
    out.trace_y = trace(c.Y + QuadScalar(2) * c.w * Matrix::ones(c.half));
    out.magic = out.trace_y == QuadScalar(2) * n * c.w && out.trace_z.is_zero();
    return out;
  }
  out.trace_y = trace(c.Y);
  QuadScalar total;
  for (const auto& x : c.Y.entries()) total += x;
  out.y_total = total;
  out.magic = out.trace_y == QuadScalar(-2) * total && out.trace_z.is_zero();
  return out;
}

Matrix block_reflection(std::size_t dim) {
  std::vector<QuadScalar> d(dim, QuadScalar(1));
  for (std::size_t i = (dim + 1) / 2; i < dim; ++i) d[i] = -1;
  return Matrix::diagonal(d);
}

std::vector<Matrix> dihedral_orbit(const Matrix& m) {
  if (!semimagic_weight(m)) throw Error(ErrorCode::NotSemimagic, "dihedral orbit needs a semimagic square");
  const Matrix d = block_reflection(m.rows());
  const Matrix b = to_block(m);
  std::vector<Matrix> orbit;
  orbit.reserve(8);
  for (const Matrix& t : {b, b.transpose()}) {
    orbit.push_back(from_block(t));
    orbit.push_back(from_block(d * t));
    orbit.push_back(from_block(t * d));
    orbit.push_back(from_block(d * t * d));
  }
  return orbit;
}

std::vector<Matrix> geometric_orbit(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "orbit of " + m.shape());
  std::vector<Matrix> orbit;
  Matrix r = m;
  for (int k = 0; k < 4; ++k) {
    orbit.push_back(r);
    orbit.push_back(r.transpose());
    r = rotate(r);
  }
  return orbit;
}

Matrix dihedral_canonical(const Matrix& m) {
  const std::vector<Matrix> orbit = dihedral_orbit(m);
  return *std::min_element(orbit.begin(), orbit.end(), lex_less);
}

bool dihedral_equivalent(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return dihedral_canonical(a) == dihedral_canonical(b);
}

PowerScanResult power_scan(const Matrix& m, unsigned cap, bool record_full) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "power scan of " + m.shape());
  const auto dim = static_cast<unsigned>(m.rows());
  PowerScanResult r;
  r.cap = cap == 0 ? dim : cap;
  r.bound = (dim + 1) / 2;
  const SymmetryReport meta = classify(m);
  r.balanced = meta.is_balanced && meta.is_magic;

  Matrix p = m;
  for (unsigned k = 1; k <= r.cap; ++k) {
    if (k > 1) p = p * m;
    PowerFlags f{k, is_magic(p), is_trivial(p)};
    r.history.push_back(f);
    if (!r.first_bad_N && (f.trivial || !f.magic)) {
      r.first_bad_N = k;
      r.verdict = f.trivial ? PowerVerdict::Trivial : PowerVerdict::NotMagic;
      if (!record_full) break;
    }
  }

  if (r.first_bad_N) {
    r.dimension_bound_holds = *r.first_bad_N <= dim;
  } else if (r.cap >= dim) {
    r.dimension_bound_holds = false;
  }
  if (r.balanced) {
    if (r.first_bad_N) {
      r.balanced_bound_holds = *r.first_bad_N <= r.bound;
    } else if (r.cap >= r.bound) {
      r.balanced_bound_holds = false;
    }
  }
  return r;
}

bool power_sum_zero_check(const std::vector<QuadScalar>& lambdas) {
  std::vector<QuadScalar> powers = lambdas;
  for (std::size_t k = 1; k <= lambdas.size(); ++k) {
    QuadScalar sum;
    for (std::size_t i = 0; i < powers.size(); ++i) {
      sum += powers[i];
      powers[i] *= lambdas[i];
    }
    if (!sum.is_zero()) return false;
  }
  return true;
}

}  // namespace blockmagic
