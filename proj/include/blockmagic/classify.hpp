#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "blockmagic/blockrep.hpp"

namespace blockmagic {

/// Common row and column sum divided by n, when all of them agree.
std::optional<QuadScalar> semimagic_weight(const Matrix& m);

struct SymmetryReport {
  std::size_t dimension = 0;
  bool is_semimagic = false;
  std::optional<QuadScalar> weight;
  bool is_magic = false;
  bool is_associated = false;
  bool is_balanced = false;
  bool is_trivial = false;
};

SymmetryReport classify(const Matrix& m);

bool is_magic(const Matrix& m);
/// A multiple of the all-ones matrix.
bool is_trivial(const Matrix& m);

struct MagicCriteria {
  bool magic = false;
  /// Trace of Y (odd) or of the top-left block Y + 2wE (even).
  QuadScalar trace_y;
  QuadScalar trace_z;
  /// Odd case only: 1^T Y 1.
  std::optional<QuadScalar> y_total;
};

/// Magic test for balanced components read off the diagonal blocks.
/// Throws NotBalanced unless V = W = 0.
MagicCriteria magic_criteria_balanced(const BlockComponents& c);

/// The eight rotations and reflections of M, generated in block coordinates by
/// sign flips of the lower block rows/columns and by transposition.
/// Order: for t in {M, M^T}: t, J t, t J, J t J. Throws NotSemimagic.
std::vector<Matrix> dihedral_orbit(const Matrix& m);

/// Rotations and reflections by index permutation; used as an oracle.
std::vector<Matrix> geometric_orbit(const Matrix& m);

/// Block-coordinate image of the antidiagonal J: diag(I, -I) with the upper
/// identity of size ceil(dim / 2).
Matrix block_reflection(std::size_t dim);

/// Lexicographically least orbit member, entries compared row-major by value.
Matrix dihedral_canonical(const Matrix& m);
bool dihedral_equivalent(const Matrix& a, const Matrix& b);

enum class PowerVerdict { Trivial, NotMagic };

struct PowerFlags {
  unsigned power = 0;
  bool magic = false;
  bool trivial = false;
};

struct PowerScanResult {
  std::optional<unsigned> first_bad_N;
  std::optional<PowerVerdict> verdict;
  /// ceil(dim / 2): the n of a balanced square of size 2n or 2n - 1.
  unsigned bound = 0;
  unsigned cap = 0;
  bool balanced = false;
  /// first_bad_N <= bound, checked only for balanced input.
  std::optional<bool> balanced_bound_holds;
  /// first_bad_N <= dimension; absent when the cap stops short of it.
  std::optional<bool> dimension_bound_holds;
  std::vector<PowerFlags> history;
};

/// Smallest N >= 1 with M^N trivial or not magic, scanning up to cap (0 means
/// the dimension). With record_full the history continues to the cap after the
/// first verdict.
PowerScanResult power_scan(const Matrix& m, unsigned cap = 0, bool record_full = false);

/// Whether sum_i l_i^k = 0 for every k = 1..len.
bool power_sum_zero_check(const std::vector<QuadScalar>& lambdas);

}  // namespace blockmagic
