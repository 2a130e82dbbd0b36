#include "blockmagic/fixtures.hpp"

#include "blockmagic/io.hpp"

namespace blockmagic::fixtures {

namespace {

Matrix vec(std::initializer_list<long> xs) {
  std::vector<QuadScalar> v;
  for (long x : xs) v.emplace_back(x);
  return Matrix::column(std::move(v));
}

Matrix scaled(const QuadScalar& s, const char* text) { return s * parse_matrix_text(text); }

QuadScalar frac(long p, long q) { return QuadScalar(Rational(p, q)); }

}  // namespace

Matrix loh_shu() { return {{8, 1, 6}, {3, 5, 7}, {4, 9, 2}}; }

BlockComponents loh_shu_components() {
  return {Parity::Odd, 1, QuadScalar(5), Matrix{{0}}, Matrix{{0}}, Matrix{{2}}, Matrix{{4}}};
}

Matrix balanced5() {
  return {{0, 0, 1, -2, 1}, {1, 1, 0, 0, -2}, {0, 1, -2, 1, 0}, {-2, 0, 0, 1, 1}, {1, -2, 1, 0, 0}};
}

BlockComponents balanced5_components() {
  return {Parity::Odd, 2, QuadScalar(), Matrix{{1, -2}, {-1, 1}}, Matrix{{1, 3}, {2, -1}}, Matrix::zero(2),
          Matrix::zero(2)};
}

Matrix balanced4() { return {{0, -1, 1, 0}, {1, 0, 0, -1}, {-1, 0, 0, 1}, {0, 1, -1, 0}}; }

Matrix balanced4_block() { return {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, -2, 0}}; }

Matrix semimagic_y3() { return {{1, 2, -3}, {-6, 1, 5}, {5, -3, -2}}; }

Rank1Spec nilpotent_spec() {
  const Matrix u = vec({1, -3, -5, 7});
  return {u, vec({1, -1, -1, 1}), QuadScalar(8) * u, vec({1, -1, 1, -1})};
}

Matrix nilpotent_square() {
  return scaled(frac(1, 2),
                " 63 -61  53 -55 -57  59 -51  49\n"
                "-47  45 -37  39  41 -43  35 -33\n"
                "-31  29 -21  23  25 -27  19 -17\n"
                " 15 -13   5  -7  -9  11  -3   1\n"
                " -1   3 -11   9   7  -5  13 -15\n"
                " 17 -19  27 -25 -23  21 -29  31\n"
                " 33 -35  43 -41 -39  37 -45  47\n"
                "-49  51 -59  57  55 -53  61 -63\n");
}

Rank1Spec example1_spec() {
  const Matrix u = vec({11, -13, -19, 21});
  const Matrix v = vec({-1, 1, 1, -1});
  return {u, v, QuadScalar(2) * u, v};
}

Matrix example1_M() {
  return scaled(frac(1, 2),
                "-63  61  55 -53 -31  29  23 -21\n"
                " 59 -57 -51  49  27 -25 -19  17\n"
                " 47 -45 -39  37  15 -13  -7   5\n"
                "-43  41  35 -33 -11   9   3  -1\n"
                "  1  -3  -9  11  33 -35 -41  43\n"
                " -5   7  13 -15 -37  39  45 -47\n"
                "-17  19  25 -27 -49  51  57 -59\n"
                " 21 -23 -29  31  53 -55 -61  63\n");
}

Matrix example1_square_block() {
  return parse_matrix_text(
      " 273 -273 -273  273    0    0    0    0\n"
      "-273  273  273 -273    0    0    0    0\n"
      "-273  273  273 -273    0    0    0    0\n"
      " 273 -273 -273  273    0    0    0    0\n"
      "   0    0    0    0  121 -143 -209  231\n"
      "   0    0    0    0 -143  169  247 -273\n"
      "   0    0    0    0 -209  247  361 -399\n"
      "   0    0    0    0  231 -273 -399  441\n");
}

Matrix example1_P() {
  return scaled(frac(1, 11),
                " 11   0   0 -16   5   0   0   0\n"
                "  0  11   0  15  -4   0   0   0\n"
                "  0   0  11  12  -1   0   0   0\n"
                "-16  15  12 -11   0  -1  -4   5\n"
                "  5  -4  -1   0 -11  12  15 -16\n"
                "  0   0   0  -1  12  11   0   0\n"
                "  0   0   0  -4  15   0  11   0\n"
                "  0   0   0   5 -16   0   0  11\n");
}

Matrix example1_P_inv() {
  return scaled(frac(8, 8736),
                " 735  336  273 -252  -21    0  -63   84\n"
                " 336  775 -260  241   32  -13   44  -63\n"
                " 273 -260  871  208   65  -52  -13    0\n"
                "-252  241  208 -197  -76   65   32  -21\n"
                " -21   32   65  -76 -197  208  241 -252\n"
                "   0  -13  -52   65  208  871 -260  273\n"
                " -63   44  -13   32  241 -260  775  336\n"
                "  84  -63    0  -21 -252  273  336  735\n");
}

Rank1Spec example2_spec() {
  const Matrix v = vec({-1, 1, 1, -1});
  return {vec({10, -14, -18, 22}), v, vec({23, -25, -39, 41}), v};
}

Matrix example2_M_printed() {
  return parse_matrix_text(
      "-63  59  55 -51 -31  27  23 -19\n"
      " 61 -57 -53  49  29 -25 -21  17\n"
      " 47 -43 -39  35  15 -11  -7   3\n"
      "-45  41  37 -33 -13   9   5  -1\n"
      "  1  -5  -9  13  33 -37 -41  45\n"
      " -3   7  11 -15 -35  39  43 -47\n"
      "-17  21  25 -29 -49  53  57 -61\n"
      " 19 -23 -27  31  51 -55 -59  63\n");
}

Matrix example2_square_block() {
  return parse_matrix_text(
      " 273 -273 -273  273    0    0    0    0\n"
      "-273  273  273 -273    0    0    0    0\n"
      "-273  273  273 -273    0    0    0    0\n"
      " 273 -273 -273  273    0    0    0    0\n"
      "   0    0    0    0  115 -161 -207  253\n"
      "   0    0    0    0 -125  175  225 -275\n"
      "   0    0    0    0 -195  273  351 -429\n"
      "   0    0    0    0  205 -287 -369  451\n");
}

Matrix example2_P() {
  return scaled(frac(1, 115),
                " 115    0    0 -160   45    0    0    0\n"
                "   0  115    0  155  -40    0    0    0\n"
                "   0    0  115  120   -5    0    0    0\n"
                "-184  161  138 -115    0  -23  -46   69\n"
                "  69  -46  -23    0 -115  138  161 -184\n"
                "   0    0    0   -5  120  115    0    0\n"
                "   0    0    0  -40  155    0  115    0\n"
                "   0    0    0   45 -160    0    0  115\n");
}

}  // namespace blockmagic::fixtures
