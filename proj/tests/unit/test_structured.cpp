#include <doctest.h>

#include <matsolve/errors.hpp>
#include <matsolve/structured.hpp>
#include <matsolve/syscount.hpp>

#include <random>
#include <set>
#include <utility>

using namespace matsolve;

namespace {

RatMatrix diag2(const Rat& a, const Rat& b) {
  RatMatrix m(2, 2);
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  return m;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

}  // namespace

TEST_CASE("analysis recovers the coefficient polynomials exactly") {
  // B0 non-derogatory, B1 an explicit polynomial in it. The representative is
  // reduced against the characteristic polynomial, so B0^2 - 3 B0 + I (which
  // equals -I by Cayley-Hamilton here) comes back as the constant -1.
  RatMatrix b0 = RatMatrix::from_rows({{Rat(1), Rat(1)}, {Rat(0), Rat(2)}});
  RatMatrix b1 = b0 * b0 - b0 * Rat(3) + RatMatrix::identity(2);
  CHECK(b1 == -RatMatrix::identity(2));
  CommutingFamily fam{{b0, b1}};
  CommutingAnalysis an = analyze_commuting(fam);
  CHECK(an.p.size() == 1);
  CHECK(an.p[0] == RatUniPoly({Rat(-1)}));
  // chi(x) = (x-1)(x-2)
  CHECK(an.chi == RatUniPoly({Rat(2), Rat(-3), Rat(1)}));
  CHECK(an.big_theta.degree() == 4);
}

TEST_CASE("scalar coupling eliminates the eigenvalue as a resultant") {
  // B0 = diag(1,2), B1 = I: theta(x, lambda) = x^2 + x + lambda, and the
  // eliminated polynomial factors as (x^2+x+1)(x^2+x+2) by direct expansion.
  CommutingFamily fam{{diag2(Rat(1), Rat(2)), RatMatrix::identity(2)}};
  CommutingAnalysis an = analyze_commuting(fam);
  RatUniPoly f1({Rat(1), Rat(1), Rat(1)});
  RatUniPoly f2({Rat(2), Rat(1), Rat(1)});
  RatUniPoly expect = f1 * f2;
  // Elimination is defined up to a non-zero scalar; pin it by matching the
  // leading coefficients.
  RatUniPoly got = an.big_theta;
  REQUIRE(got.degree() == expect.degree());
  Rat scale = expect.leading() / got.leading();
  CHECK(got * scale == expect);
}

TEST_CASE("coupling polynomial specializes per eigenvalue") {
  CommutingFamily fam{{diag2(Rat(1), Rat(2)), RatMatrix::identity(2)}};
  CommutingAnalysis an = analyze_commuting(fam);
  CUniPoly t1 = theta_at(an, fam.k(), Complex(1, 0));
  // theta(x, 1) = x^2 + x + 1 at x = 2 gives 7.
  CHECK(std::abs(t1.eval(Complex(2, 0)) - Complex(7, 0)) < 1e-12);
}

TEST_CASE("commuting solver returns k^n pairwise commuting solutions") {
  CommutingFamily fam{{diag2(Rat(1), Rat(2)), RatMatrix::identity(2)}};
  SolutionSet sols = commuting_solve(fam);
  CHECK(sols.expected_count == 4);
  REQUIRE(sols.solutions.size() == 4);
  CHECK(sols.all_simple);
  CMatrix b0 = to_complex(fam.b[0]);
  CMatrix b1 = to_complex(fam.b[1]);
  for (const Solvent& s : sols.solutions) {
    // Equation residual: X^2 + B1 X + B0 = 0.
    CMatrix r = s.x * s.x + b1 * s.x + b0;
    CHECK(max_norm(r) <= 1e-9 * (1 + max_norm(s.x) * max_norm(s.x)));
    CHECK(max_norm(commutator(s.x, b0)) <= kCommuteTol * (1 + max_norm(s.x)));
    CHECK(max_norm(commutator(s.x, b1)) <= kCommuteTol * (1 + max_norm(s.x)));
  }
}

TEST_CASE("commuting solutions commute with each other") {
  RatMatrix b0 = RatMatrix::from_rows({{Rat(0), Rat(1)}, {Rat(-2), Rat(3)}});
  RatMatrix b1 = b0 * Rat(2) - RatMatrix::identity(2);
  CommutingFamily fam{{b0, b1}};
  SolutionSet sols = commuting_solve(fam);
  REQUIRE(sols.solutions.size() == 4);
  for (size_t i = 0; i < sols.solutions.size(); ++i)
    for (size_t j = i + 1; j < sols.solutions.size(); ++j)
      CHECK(max_norm(commutator(sols.solutions[i].x, sols.solutions[j].x)) < 1e-7);
}

TEST_CASE("non-generic commuting inputs are identified") {
  // Repeated eigenvalues of the constant term.
  CommutingFamily repeated{{RatMatrix::identity(2), RatMatrix::identity(2)}};
  CHECK_THROWS_AS(analyze_commuting(repeated), Error);

  // A coefficient that does not even commute with B_0.
  RatMatrix b0 = diag2(Rat(1), Rat(2));
  RatMatrix swap = RatMatrix::from_rows({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
  try {
    analyze_commuting(CommutingFamily{{b0, swap}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotGeneric);
  }
}

TEST_CASE("shifted square root solver lists all sign patterns") {
  // B = 0, C = -diag(1,4): X^2 = diag(1,4), solutions diag(+-1, +-2).
  SolutionSet sols = symmetric_quadratic_solve(RatMatrix(2, 2), -diag2(Rat(1), Rat(4)));
  CHECK(sols.expected_count == 4);
  REQUIRE(sols.solutions.size() == 4);
  std::set<std::pair<int, int>> seen;
  for (const Solvent& s : sols.solutions) {
    CHECK(std::abs(std::abs(s.x(0, 0)) - 1.0) < 1e-9);
    CHECK(std::abs(std::abs(s.x(1, 1)) - 2.0) < 1e-9);
    CHECK(std::abs(s.x(0, 1)) < 1e-9);
    seen.insert({s.x(0, 0).real() > 0 ? 1 : -1, s.x(1, 1).real() > 0 ? 1 : -1});
  }
  CHECK(seen.size() == 4);
}

TEST_CASE("shifted square root solutions satisfy the two-sided equation") {
  RatMatrix b = RatMatrix::from_rows({{Rat(1), Rat(2)}, {Rat(0), Rat(3)}});
  RatMatrix c = RatMatrix::from_rows({{Rat(-5), Rat(1)}, {Rat(1), Rat(-7)}});
  SolutionSet sols = symmetric_quadratic_solve(b, c);
  REQUIRE(sols.solutions.size() == 4);
  CMatrix cb = to_complex(b);
  CMatrix cc = to_complex(c);
  for (const Solvent& s : sols.solutions) {
    CMatrix r = s.x * s.x + cb * s.x + s.x * cb + cc;
    double scale = 1 + max_norm(s.x) * max_norm(s.x) + 2 * max_norm(cb) * max_norm(s.x) +
                   max_norm(cc);
    CHECK(max_norm(r) <= 1e-9 * scale);
  }
}

TEST_CASE("shifted square root rejects degenerate shifted squares") {
  // B^2 - C = 0 is singular.
  try {
    symmetric_quadratic_solve(RatMatrix(2, 2), RatMatrix(2, 2));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotGeneric);
  }
  // B^2 - C = I has the repeated eigenvalue 1.
  CHECK_THROWS_AS(symmetric_quadratic_solve(RatMatrix(2, 2), -RatMatrix::identity(2)), Error);
}

TEST_CASE("stratum summaries follow the subset dimension formula") {
  // dim of a stratum on subset S is |S|(n-|S|); the maximum over subsets and
  // the number of attaining subsets are hand-countable.
  BinomeStratumSummary s2 = binome_stratum_count(2);
  CHECK(s2.max_dimension == 1);
  CHECK(s2.maximal_stratum_count == 2);
  BinomeStratumSummary s3 = binome_stratum_count(3);
  CHECK(s3.max_dimension == 2);
  CHECK(s3.maximal_stratum_count == 6);
  BinomeStratumSummary s4 = binome_stratum_count(4);
  CHECK(s4.max_dimension == 4);
  CHECK(s4.maximal_stratum_count == 6);
  CHECK_THROWS_AS(binome_stratum_count(0), Error);
}

TEST_CASE("stratum members solve the binome equation exactly") {
  RatMatrix t = RatMatrix(3, 3);
  t.at(0, 0) = Rat(2);
  t.at(1, 1) = Rat(3);
  t.at(2, 2) = Rat(-5);
  RatMatrix y = RatMatrix::from_rows({{Rat(7, 2), Rat(-1)}});
  RatMatrix z = binome_family_member(t, {1}, y);
  CHECK((z * z + t * z).is_zero());
  CHECK(z.at(1, 1) == Rat(-3));

  // Trivial strata: the empty subset gives 0, the full subset gives -T.
  CHECK(binome_family_member(t, {}, RatMatrix(0, 3)).is_zero());
  RatMatrix full = binome_family_member(t, {0, 1, 2}, RatMatrix(3, 0));
  CHECK(full == -t);

  CHECK_THROWS_AS(binome_family_member(t, {7}, y), Error);
  CHECK_THROWS_AS(binome_family_member(t, {1}, RatMatrix(2, 2)), Error);
}

TEST_CASE("two stratum members with different free blocks both solve exactly") {
  RatMatrix t = diag2(Rat(2), Rat(-7));
  for (long v : {0L, 1L, 5L}) {
    RatMatrix y = RatMatrix::from_rows({{Rat(v, 3)}});
    RatMatrix z = binome_family_member(t, {0}, y);
    CHECK((z * z + t * z).is_zero());
    CHECK(z.at(0, 1) == Rat(v, 3));
  }
}

TEST_CASE("diagonal commuting witness has a curve and four diagonal solutions") {
  RatMatrix b = diag2(Rat(1), Rat(3));
  RatMatrix c = diag2(Rat(2), Rat(5));
  CounterexampleReport rep = commuting_counterexample_check(b, c, Rat(1));
  CHECK(rep.hilbert_dimension == 1);
  CHECK(rep.diagonal_solution_count == 4);
  CHECK(rep.member_solves_exactly);
  CHECK_FALSE(rep.member_commutes_with_b);
  // The sampled member really is non-diagonal.
  CHECK(rep.family_member.at(1, 0) != 0);
}

TEST_CASE("commuting witness rejects malformed data") {
  CHECK_THROWS_AS(commuting_counterexample_check(diag2(Rat(1), Rat(1)), diag2(Rat(2), Rat(5)),
                                                 Rat(1)),
                  Error);
  CHECK_THROWS_AS(commuting_counterexample_check(diag2(Rat(1), Rat(3)), diag2(Rat(2), Rat(5)),
                                                 Rat(0)),
                  Error);
  RatMatrix nondiag = RatMatrix::from_rows({{Rat(1), Rat(1)}, {Rat(0), Rat(3)}});
  CHECK_THROWS_AS(commuting_counterexample_check(nondiag, diag2(Rat(2), Rat(5)), Rat(1)), Error);
}
