#pragma once

#include "blockmagic/blockrep.hpp"
#include "blockmagic/rank1.hpp"

/// Reference squares and worked examples, exactly as printed (including any
/// stated prefactor).
namespace blockmagic::fixtures {

/// [[8,1,6],[3,5,7],[4,9,2]]
Matrix loh_shu();
/// odd, n = 1, w = 5, V = (2), W = (4), Y = Z = (0)
BlockComponents loh_shu_components();

/// The 5x5 balanced magic square with Y = [[1,-2],[-1,1]], Z = [[1,3],[2,-1]].
Matrix balanced5();
BlockComponents balanced5_components();

/// The 4x4 balanced magic square whose powers alternate between magic (odd)
/// and non-magic (even), and its block form with Z = [[0,2],[-2,0]].
Matrix balanced4();
Matrix balanced4_block();

/// Weight-0 semimagic 3x3 block with trace 0 whose antidiagonal fails.
Matrix semimagic_y3();

/// Rank-2 associated square with rank-1 square (lambda = 0).
Rank1Spec nilpotent_spec();
Matrix nilpotent_square();

Rank1Spec example1_spec();
/// Printed as (1/2) times an integer matrix.
Matrix example1_M();
/// M^2 = 8 X B X; this is B.
Matrix example1_square_block();
/// Printed as (1/11) times an integer matrix.
Matrix example1_P();
/// Printed as (8 / lambda) times an integer matrix, lambda = 8736.
Matrix example1_P_inv();

Rank1Spec example2_spec();
/// The integer matrix as printed. The construction yields half of it.
Matrix example2_M_printed();
Matrix example2_square_block();
/// Printed as (1/115) times an integer matrix.
Matrix example2_P();

}  // namespace blockmagic::fixtures
