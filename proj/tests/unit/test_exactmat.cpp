#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "blockmagic/error.hpp"
#include "blockmagic/io.hpp"
#include "blockmagic/polynomial.hpp"
#include "../common/random_squares.hpp"

using namespace blockmagic;

TEST_CASE("special matrices") {
  CHECK(Matrix::antidiag(3) == Matrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(Matrix::ones(2) == Matrix{{1, 1}, {1, 1}});
  CHECK(mat_build_special(SpecialKind::OnesVector, 3) == Matrix{{1}, {1}, {1}});
  CHECK(Matrix::antidiag(4) * Matrix::antidiag(4) == Matrix::identity(4));
  CHECK(trace(Matrix{{8, 1, 6}, {3, 5, 7}, {4, 9, 2}}) == QuadScalar(15));
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), Error);
  CHECK_THROWS_AS(trace(Matrix(2, 3)), Error);
  CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), Error);
  try {
    inverse(Matrix{{1, 2}, {2, 4}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Singular);
  }
}

TEST_CASE("rank, inverse and null space") {
  const Matrix m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  CHECK(rank(m) == 3);
  CHECK(m * inverse(m) == Matrix::identity(3));
  const Matrix s{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(s) == 2);
  const auto ns = null_space(s);
  REQUIRE(ns.size() == 1);
  CHECK((s * ns[0]).is_zero());
  const Matrix x = Matrix{{1, 0}, {0, -1}} + QuadScalar::sqrt2() * Matrix::identity(2);
  CHECK(x * inverse(x) == Matrix::identity(2));
}

TEST_CASE("characteristic and minimal polynomials") {
  const Matrix m{{2, 0}, {0, 3}};
  CHECK(char_poly(m).to_string() == "x^2 - 5*x + 6");
  CHECK(minimal_polynomial(Matrix::identity(3)).to_string() == "x - 1");
  CHECK(minimal_polynomial(Matrix::ones(3)).to_string() == "x^2 - 3*x");
  const PolyDivision d = divmod(char_poly(m), Polynomial::linear_factor(QuadScalar(2)));
  CHECK(d.remainder.is_zero());
  CHECK(d.quotient == Polynomial::linear_factor(QuadScalar(3)));
  CHECK(root_multiplicity(char_poly(Matrix::zero(3)), QuadScalar()) == 3);
  CHECK_THROWS_AS(char_poly(Matrix::zero(5), 4), Error);
}

TEST_CASE("char poly dimension bound comes from the environment") {
  setenv("BLOCKMAGIC_MAX_DIM", "3", 1);
  CHECK(default_char_poly_bound() == 3);
  CHECK_THROWS_AS(char_poly(Matrix::zero(4)), Error);
  unsetenv("BLOCKMAGIC_MAX_DIM");
  CHECK(default_char_poly_bound() == 16);
}

TEST_CASE("text and JSON matrix formats") {
  const Matrix m{{QuadScalar(Rational(1, 2)), QuadScalar::sqrt2()}, {QuadScalar(-3), QuadScalar()}};
  CHECK(parse_matrix_text(format_matrix_text(m)) == m);
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK(parse_matrix_any(matrix_to_json(m).dump()) == m);
  CHECK(parse_matrix_text("# comment\n1 2\n3 4\n\n9 9 9\n") == Matrix{{1, 2}, {3, 4}});
  CHECK_THROWS_AS(parse_matrix_text("1 2\n3\n"), Error);
  CHECK_THROWS_AS(parse_matrix_text(""), Error);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"rows":2,"cols":1,"entries":[["1"]]})")), Error);
}

TEST_CASE("random algebraic identities") {
  testing::Sampler s(testing::env_seed());
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = static_cast<std::size_t>(s.integer(1, 5));
    const Matrix a = s.quad_matrix(n, n);
    const Matrix b = s.quad_matrix(n, n);
    const Matrix c = s.quad_matrix(n, n);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK(trace(a * b) == trace(b * a));
    CHECK(rank(a) == rank(a.transpose()));
    if (rank(a) == n) CHECK(inverse(a) * a == Matrix::identity(n));
    for (const auto& v : null_space(a)) CHECK((a * v).is_zero());
    CHECK(rank(a) + null_space(a).size() == n);
    if (n <= 4) CHECK(evaluate(char_poly(a), a).is_zero());
    CHECK(evaluate(minimal_polynomial(a), a).is_zero());
    CHECK(divmod(char_poly(a), minimal_polynomial(a)).remainder.is_zero());
  }
}
