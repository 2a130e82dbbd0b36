#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockmagic/classify.hpp"
#include "blockmagic/error.hpp"
#include "blockmagic/fixtures.hpp"
#include "../common/random_squares.hpp"

using namespace blockmagic;
namespace fx = blockmagic::fixtures;

TEST_CASE("spec validation") {
  Rank1Spec s = fx::example1_spec();
  s.x = Matrix::zero(4).col(0);
  CHECK_THROWS_AS(validate(s), Error);
  s = fx::example1_spec();
  s.y = Matrix(3, 1);
  CHECK_THROWS_AS(build_rank1(s), Error);
}

TEST_CASE("Example 1 matrix and square") {
  const Rank1Spec s = fx::example1_spec();
  const Matrix m = build_rank1(s);
  CHECK(m == fx::example1_M());
  CHECK(s.lambda() == QuadScalar(8736));
  CHECK(s.ux() == QuadScalar(2184));
  CHECK(s.yv() == QuadScalar(4));
  CHECK(to_block(m * m) == QuadScalar(8) * fx::example1_square_block());
  const SymmetryReport r = classify(m);
  CHECK(r.is_associated);
  CHECK(r.is_magic);
  CHECK(r.weight == QuadScalar());
  CHECK(is_parasymmetric(m));
  CHECK(parasym_factor(s) == QuadScalar(2));
  CHECK(classify(build_rank1(s, QuadScalar(3))).weight == QuadScalar(3));
}

TEST_CASE("Example 2 matrix is half the printed one and not parasymmetric") {
  const Matrix m = build_rank1(fx::example2_spec());
  CHECK(QuadScalar(2) * m == fx::example2_M_printed());
  CHECK(to_block(m * m) == QuadScalar(8) * fx::example2_square_block());
  CHECK_FALSE(is_parasymmetric(m));
  CHECK_FALSE(is_paranormal(m));
  CHECK_FALSE(parasym_factor(fx::example2_spec()).has_value());
  CHECK(fx::example2_spec().lambda() == QuadScalar(8736));
}

TEST_CASE("nilpotent case") {
  const Matrix m = build_rank1(fx::nilpotent_spec());
  CHECK(m == fx::nilpotent_square());
  CHECK(rank(m) == 2);
  CHECK(rank(m * m) == 1);
  CHECK(power(m, 4).is_zero());
  const AlternativeVerdict v = alternative_classify(fx::nilpotent_spec());
  CHECK(v.which == AlternativeCase::NilpotentMagic);
  CHECK(v.square_magic);
  CHECK(v.consistent);
  const MinimalPolyResult p = minimal_poly_rank1(fx::nilpotent_spec());
  CHECK(p.poly.to_string() == "x^3");
  CHECK_FALSE(p.from_lemma);
  CHECK(p.annihilates);
  CHECK_THROWS_AS(eigen_structure(fx::nilpotent_spec()), Error);
  CHECK_THROWS_AS(build_two_sided_P(fx::nilpotent_spec()), Error);
}

TEST_CASE("Example 1 verdict, minimal polynomial and multiplicities") {
  const AlternativeVerdict v = alternative_classify(fx::example1_spec());
  CHECK(v.which == AlternativeCase::Rank2NotMagic);
  CHECK(v.rank_of_square == 2);
  CHECK_FALSE(v.square_magic);
  CHECK(v.consistent);
  const MinimalPolyResult p = minimal_poly_rank1(fx::example1_spec());
  CHECK(p.poly.to_string() == "x^3 - 8736*x");
  CHECK(p.from_lemma);
  CHECK(p.verified);
  const Matrix m = build_rank1(fx::example1_spec());
  const Multiplicity ml = multiplicity(m * m, QuadScalar(8736));
  CHECK(ml.algebraic == 2);
  CHECK(ml.geometric == 2);
  const Multiplicity m0 = multiplicity(m * m, QuadScalar());
  CHECK(m0.algebraic == 6);
  CHECK(m0.geometric == 6);
}

TEST_CASE("Example 1 eigenvectors") {
  const EigenStructure e = eigen_structure(fx::example1_spec());
  CHECK(e.right_verified);
  CHECK(e.left_verified);
  CHECK(e.right_orthogonal);
  CHECK_FALSE(e.sqrt_lambda.has_value());
  CHECK(e.eigvals_of_M == "+-sqrt(8736)");
  CHECK(dot(e.right.first, e.right.first) == QuadScalar(8));
  CHECK(dot(e.right.second, e.right.second) == QuadScalar(8736));
}

TEST_CASE("two-sided eigenvector matrices of Examples 1 and 2") {
  const TwoSidedEigenMatrix t1 = build_two_sided_P(fx::example1_spec());
  CHECK(t1.P == fx::example1_P());
  CHECK(t1.P_inv == fx::example1_P_inv());
  CHECK(t1.pivot_rows == std::pair<std::size_t, std::size_t>{3, 4});
  const Matrix m1 = build_rank1(fx::example1_spec());
  CHECK(t1.P * t1.P_inv == Matrix::identity(8));
  CHECK(t1.P_inv * m1 * m1 * t1.P == pivot_diagonal(8, {3, 4}, QuadScalar(8736)));
  const TwoSidedEigenMatrix t2 = build_two_sided_P(fx::example2_spec());
  CHECK(t2.P == fx::example2_P());
  CHECK(t2.inverse_ok);
  CHECK(t2.right_ok);
  CHECK(t2.left_ok);
}

TEST_CASE("other regular pivots also diagonalize") {
  const TwoSidedEigenMatrix t = build_two_sided_P(fx::example1_spec(), std::pair<std::size_t, std::size_t>{0, 7});
  const Matrix m = build_rank1(fx::example1_spec());
  CHECK(t.inverse_ok);
  CHECK(t.P_inv * m * m * t.P == pivot_diagonal(8, {0, 7}, QuadScalar(8736)));
}

TEST_CASE("random specs: dichotomy, lemma polynomial, eigen data") {
  testing::Sampler s(testing::env_seed());
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = static_cast<std::size_t>(s.integer(1, 4));
    const Rank1Spec spec = s.rank1_spec(n);
    const Matrix m = build_rank1(spec);
    CHECK(power(m, 3) == spec.lambda() * m);
    const AlternativeVerdict v = alternative_classify(spec);
    CHECK(v.consistent);
    CHECK((v.which == AlternativeCase::NilpotentMagic) == spec.lambda().is_zero());
    const MinimalPolyResult p = minimal_poly_rank1(spec);
    CHECK(p.annihilates);
    CHECK(p.verified);
    if (!spec.lambda().is_zero()) {
      const EigenStructure e = eigen_structure(spec);
      CHECK(e.right_verified);
      CHECK(e.left_verified);
      try {
        const TwoSidedEigenMatrix t = build_two_sided_P(spec);
        CHECK(t.inverse_ok);
        CHECK(t.right_ok);
        CHECK(t.left_ok);
      } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::NoRegularPivot);
      }
    }
  }
}

TEST_CASE("n = 1 gives x^2 - lambda") {
  const Rank1Spec s{Matrix{{2}}, Matrix{{3}}, Matrix{{5}}, Matrix{{7}}};
  const MinimalPolyResult p = minimal_poly_rank1(s);
  CHECK(p.poly.to_string() == "x^2 - 210");
  CHECK(p.verified);
  const Matrix m = build_rank1(s);
  CHECK(m * m == QuadScalar(210) * Matrix::identity(2));
}
