#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "blockmagic/classify.hpp"
#include "blockmagic/polynomial.hpp"

namespace blockmagic {

/// U_n = I_n - E_n / n, the weightless part of the identity.
Matrix quasi_unit(std::size_t n);

enum class QuasiSide { None, Left, Right, TwoSided };

const char* quasi_side_name(QuasiSide side);

/// Reason codes:
///   odd_associated, odd_balanced, even_balanced_recursive, trivial_1x1
///     (constructed)
///   even_associated_rank_bound, rank_deficient_V, rank_deficient_W,
///   rank_deficient_Y, rank_deficient_Z, mixed_type_unsupported,
///   weighted_unsupported, verification_failed (no quasi-inverse returned)
struct QuasiInverseReport {
  bool exists = false;
  QuasiSide side = QuasiSide::None;
  std::optional<Matrix> Q;
  std::string reason;
};

/// Quasi-inverse of a weight-0 associated or balanced semimagic square.
/// Unsupported or rank deficient inputs are reported, not thrown; a
/// non-semimagic input throws NotSemimagic.
QuasiInverseReport quasi_inverse(const Matrix& m, std::optional<SymmetryReport> meta = std::nullopt);

struct WeightShiftReport {
  std::size_t half = 0;
  QuadScalar w;
  std::size_t rank0 = 0;
  std::size_t rank_w = 0;
  bool rank_increased_by_one = false;
  /// mu with char(M_w) x = char(M_0) (x - mu).
  std::optional<QuadScalar> extra_eig_M;
  std::optional<QuadScalar> extra_eig_Msq;
  bool extra_eig_M_is_2nw = false;
  bool msq_matches_2n2w2 = false;
  bool msq_matches_4n2w2 = false;
  /// The remaining spectrum of M_0 (and of M_0^2) survives unchanged.
  bool shared_spectrum_ok = false;
};

/// M_0 must be a weight-0 associated square of even dimension 2n and w != 0.
/// Throws NotAssociatedWeightZero, NotAssociatedEven or InvalidArgument.
WeightShiftReport weight_shift_report(const Matrix& m0, const QuadScalar& w);

}  // namespace blockmagic
