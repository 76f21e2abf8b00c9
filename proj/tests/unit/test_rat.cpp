#include <doctest.h>

#include <matsolve/errors.hpp>
#include <matsolve/rat.hpp>

#include <random>

using namespace matsolve;

namespace {

RatMatrix rand_matrix(std::mt19937_64& rng, int rows, int cols) {
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = Rat(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
  return m;
}

}  // namespace

TEST_CASE("rational parsing accepts integers, fractions, and whitespace") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(parse_rat("  5/10 ") == Rat(1, 2));
  CHECK(parse_rat("-6/4") == Rat(-3, 2));
  CHECK(parse_rat("0") == Rat(0));
}

TEST_CASE("rational parsing canonicalizes sign and gcd") {
  Rat r = parse_rat("4/-6");
  CHECK(r == Rat(-2, 3));
  CHECK(r.get_den() == 3);  // canonical positive denominator
  CHECK(rat_to_string(parse_rat("10/4")) == "5/2");
  CHECK(rat_to_string(Rat(-3)) == "-3");
}

TEST_CASE("rational parsing rejects malformed text and zero denominators") {
  CHECK_THROWS_AS(parse_rat("abc"), Error);
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat(""), Error);
  CHECK_THROWS_AS(parse_rat("1.5"), Error);
  try {
    parse_rat("x/y");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
}

TEST_CASE("matrix construction and identities") {
  RatMatrix id = RatMatrix::identity(3);
  CHECK(id.rows() == 3);
  CHECK(id.at(0, 0) == 1);
  CHECK(id.at(0, 1) == 0);
  CHECK(id.is_square());
  CHECK_FALSE(id.is_zero());
  CHECK(RatMatrix(2, 3).is_zero());
  RatMatrix m = RatMatrix::from_rows({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}});
  CHECK(m * RatMatrix::identity(2) == m);
}

TEST_CASE("matrix arithmetic matches hand expansion") {
  RatMatrix a = RatMatrix::from_rows({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}});
  RatMatrix b = RatMatrix::from_rows({{Rat(0), Rat(1)}, {Rat(-1), Rat(2)}});
  RatMatrix ab = a * b;
  CHECK(ab == RatMatrix::from_rows({{Rat(-2), Rat(5)}, {Rat(-4), Rat(11)}}));
  CHECK((a + b) - b == a);
  CHECK((-a) + a == RatMatrix(2, 2));
  CHECK(a.transpose().transpose() == a);
  CHECK((a * Rat(1, 2)).at(1, 0) == Rat(3, 2));
  CHECK(a.trace() == 5);
}

TEST_CASE("determinant is multiplicative and exact on fractional entries") {
  RatMatrix a = RatMatrix::from_rows(
      {{Rat(1, 2), Rat(1, 3), Rat(0)}, {Rat(2), Rat(-1), Rat(1)}, {Rat(0), Rat(1, 5), Rat(3)}});
  // Cofactor expansion by hand along the first row.
  Rat hand = Rat(1, 2) * (Rat(-1) * 3 - Rat(1, 5)) - Rat(1, 3) * (Rat(2) * 3 - 0);
  CHECK(a.det() == hand);

  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    RatMatrix p = rand_matrix(rng, 3, 3);
    RatMatrix q = rand_matrix(rng, 3, 3);
    CHECK((p * q).det() == p.det() * q.det());
    CHECK(p.transpose().det() == p.det());
  }
}

TEST_CASE("inverse is exact and rejects singular input") {
  RatMatrix a = RatMatrix::from_rows({{Rat(2), Rat(1)}, {Rat(7), Rat(4)}});
  CHECK(a * a.inverse() == RatMatrix::identity(2));
  CHECK(a.inverse() * a == RatMatrix::identity(2));

  RatMatrix sing = RatMatrix::from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}});
  CHECK_THROWS_AS(sing.inverse(), Error);
  try {
    sing.inverse();
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singular);
  }
}

TEST_CASE("kernel basis spans the exact right kernel") {
  // Rank 1: rows are multiples of (1, 2, 3).
  RatMatrix m = RatMatrix::from_rows(
      {{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}, {Rat(-1), Rat(-2), Rat(-3)}});
  auto basis = m.kernel_basis();
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) {
    REQUIRE(v.size() == 3);
    for (int i = 0; i < 3; ++i) {
      Rat dot = 0;
      for (int j = 0; j < 3; ++j) dot += m.at(i, j) * v[j];
      CHECK(dot == 0);
    }
  }
  // The two kernel vectors are independent: some 2x2 minor is non-zero.
  RatMatrix pair(3, 2);
  for (int i = 0; i < 3; ++i) {
    pair.at(i, 0) = basis[0][i];
    pair.at(i, 1) = basis[1][i];
  }
  bool independent = false;
  for (int r1 = 0; r1 < 3 && !independent; ++r1)
    for (int r2 = r1 + 1; r2 < 3 && !independent; ++r2)
      independent = pair.at(r1, 0) * pair.at(r2, 1) - pair.at(r1, 1) * pair.at(r2, 0) != 0;
  CHECK(independent);

  CHECK(RatMatrix::identity(4).kernel_basis().empty());
}

TEST_CASE("matrix powers agree with repeated multiplication") {
  RatMatrix a = RatMatrix::from_rows({{Rat(1), Rat(1)}, {Rat(0), Rat(2)}});
  CHECK(mat_pow(a, 0) == RatMatrix::identity(2));
  CHECK(mat_pow(a, 1) == a);
  CHECK(mat_pow(a, 4) == a * a * a * a);
}

TEST_CASE("linear solve returns the unique exact solution") {
  RatMatrix m = RatMatrix::from_rows({{Rat(2), Rat(1)}, {Rat(1), Rat(3)}});
  RatMatrix rhs = RatMatrix::from_rows({{Rat(5)}, {Rat(10)}});
  RatMatrix x = solve_linear(m, rhs);
  CHECK(m * x == rhs);
  CHECK(x.at(0, 0) == Rat(1));
  CHECK(x.at(1, 0) == Rat(3));
}

TEST_CASE("linear solve handles rectangular full-column-rank systems") {
  // Three equations, two unknowns, consistent by construction.
  RatMatrix m = RatMatrix::from_rows(
      {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}});
  RatMatrix sol = RatMatrix::from_rows({{Rat(2, 3)}, {Rat(-1, 2)}});
  RatMatrix rhs = m * sol;
  auto x = try_solve_linear(m, rhs);
  REQUIRE(x.has_value());
  CHECK(*x == sol);
}

TEST_CASE("linear solve reports inconsistent and underdetermined systems") {
  RatMatrix m = RatMatrix::from_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}});
  RatMatrix bad = RatMatrix::from_rows({{Rat(1)}, {Rat(1)}, {Rat(3)}});
  CHECK_FALSE(try_solve_linear(m, bad).has_value());

  RatMatrix wide = RatMatrix::from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}});
  RatMatrix rhs = RatMatrix::from_rows({{Rat(1)}, {Rat(2)}});
  CHECK_FALSE(try_solve_linear(wide, rhs).has_value());
  CHECK_THROWS_AS(solve_linear(wide, rhs), Error);
}
