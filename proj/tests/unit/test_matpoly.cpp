#include <doctest.h>

#include <matsolve/errors.hpp>
#include <matsolve/matpoly.hpp>

#include <random>
#include <set>

using namespace matsolve;

namespace {

RatMatrix rand_mat(std::mt19937_64& rng, int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rat(static_cast<long>(rng() % 7) - 3);
  return m;
}

// Monic quadratic lambda-matrix with A_1 = A_0 = given, leading identity.
RatMatPolynomial monic_quadratic(const RatMatrix& a0, const RatMatrix& a1) {
  return RatMatPolynomial{{a0, a1, RatMatrix::identity(a0.rows())}};
}

// The fixed sparse specialization whose lambda-determinant collapses to
// lambda^(nk) - lambda - 1: identity leading coefficient, A_1 and A_0 carry
// a single (1,n) entry of (-1)^n, A_0 additionally the subdiagonal.
RatMatPolynomial sparse_specialization(int n, int k) {
  Rat corner = n % 2 == 0 ? Rat(1) : Rat(-1);
  RatMatrix a0(n, n), a1(n, n);
  for (int i = 1; i < n; ++i) a0.at(i, i - 1) = 1;
  a0.at(0, n - 1) = corner;
  a1.at(0, n - 1) = corner;
  std::vector<RatMatrix> coeffs(k + 1, RatMatrix(n, n));
  coeffs[0] = a0;
  coeffs[1] = a1;
  coeffs[k] = RatMatrix::identity(n);
  return RatMatPolynomial{coeffs};
}

}  // namespace

TEST_CASE("binomial coefficients and the overflow guard") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK_THROWS_AS(binomial(120, 60), Error);
}

TEST_CASE("lambda evaluation uses left coefficients in ascending powers") {
  RatMatrix a0 = RatMatrix::from_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(2)}});
  RatMatrix a1 = RatMatrix::from_rows({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
  RatMatPolynomial mp{{a0, a1}};
  RatMatrix at2 = eval_lambda(mp, Rat(2));
  CHECK(at2 == a0 + a1 * Rat(2));
}

TEST_CASE("matrix argument evaluation keeps coefficients on the left") {
  // A_1 X vs X A_1 differ for non-commuting choices; pin the left convention.
  RatMatrix x = RatMatrix::from_rows({{Rat(0), Rat(1)}, {Rat(0), Rat(0)}});
  RatMatrix a1 = RatMatrix::from_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(2)}});
  RatMatrix a0(2, 2);
  RatMatPolynomial mp{{a0, a1}};
  CHECK(eval_at_matrix(mp, x) == a1 * x);
  CHECK(eval_at_matrix(mp, x) != x * a1);
}

TEST_CASE("exact lambda determinant matches the cofactor oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    int n = 2 + trial % 2;
    RatMatPolynomial mp = monic_quadratic(rand_mat(rng, n), rand_mat(rng, n));
    RatUniPoly det = det_lambda(mp);

    // Independent oracle: entries as univariate polynomials, cofactor det.
    std::vector<std::vector<RatUniPoly>> entries(n, std::vector<RatUniPoly>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<Rat> c;
        for (const RatMatrix& a : mp.coeffs) c.push_back(a.at(i, j));
        entries[i][j] = RatUniPoly(c);
      }
    CHECK(det == poly_matrix_det(entries));
    CHECK(det.degree() == 2 * n);
  }
}

TEST_CASE("float lambda determinant agrees with the exact path") {
  std::mt19937_64 rng(37);
  RatMatPolynomial mp = monic_quadratic(rand_mat(rng, 3), rand_mat(rng, 3));
  RatUniPoly exact = det_lambda(mp);
  CUniPoly approx = det_lambda(to_complex(mp));
  REQUIRE(approx.degree() == exact.degree());
  for (int i = 0; i <= exact.degree(); ++i)
    CHECK(std::abs(approx.coeff(i) - Complex(rat_to_double(exact.coeff(i)))) < 1e-9);
}

TEST_CASE("sparse specialization collapses to the trinomial determinant") {
  for (auto [n, k] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    RatUniPoly det = det_lambda(sparse_specialization(n, k));
    std::vector<Rat> want(n * k + 1, Rat(0));
    want[0] = -1;
    want[1] = -1;
    want[n * k] = 1;
    CHECK(det == RatUniPoly(want));
  }
}

TEST_CASE("unilateral solver finds the full solvent family on a seeded draw") {
  std::mt19937_64 rng(42);
  RatMatPolynomial mp = monic_quadratic(rand_mat(rng, 2), rand_mat(rng, 2));
  SolutionSet sols = solve_unilateral(mp);
  CHECK(sols.expected_count == 6);
  REQUIRE(sols.solutions.size() == 6);
  CHECK(sols.all_simple);
  MatPolynomial cm = to_complex(mp);
  for (const Solvent& s : sols.solutions) {
    CHECK(s.residual <= kSolventTol);
    VerifyReport rep = verify_solvent(cm, s.x);
    CHECK(rep.equation_ok);
    CHECK(rep.phi_ok);
  }
  // Pairwise distinct beyond the dedup tolerance.
  for (size_t i = 0; i < sols.solutions.size(); ++i)
    for (size_t j = i + 1; j < sols.solutions.size(); ++j)
      CHECK(max_norm(sols.solutions[i].x - sols.solutions[j].x) > kDedupTol);
}

TEST_CASE("solvent spectra are subsets of the lambda-determinant roots") {
  std::mt19937_64 rng(43);
  RatMatPolynomial mp = monic_quadratic(rand_mat(rng, 2), rand_mat(rng, 2));
  SolutionSet sols = solve_unilateral(mp);
  RootSet lambda = aberth_roots(CUniPoly::from_rational(det_lambda(mp)));
  for (const Solvent& s : sols.solutions) {
    REQUIRE(s.subset.size() == 2);
    // The eigenvalues of X_J are exactly the selected lambda roots.
    EigenDecomposition eig = eigen_decompose(s.x);
    std::vector<Complex> expect{lambda.roots[s.subset[0]], lambda.roots[s.subset[1]]};
    std::vector<Complex> got = eig.values;
    std::sort(got.begin(), got.end(), [](const Complex& a, const Complex& b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    std::sort(expect.begin(), expect.end(), [](const Complex& a, const Complex& b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    REQUIRE(got.size() == 2);
    for (int i = 0; i < 2; ++i) CHECK(std::abs(got[i] - expect[i]) < 1e-6);
  }
}

TEST_CASE("subset streaming matches the full enumeration") {
  std::mt19937_64 rng(47);
  RatMatPolynomial mp = monic_quadratic(rand_mat(rng, 2), rand_mat(rng, 2));
  SolutionSet full = solve_unilateral(mp);
  std::vector<std::vector<int>> subsets;
  for (const Solvent& s : full.solutions) subsets.push_back(s.subset);
  SolutionSet streamed = solve_unilateral_subsets(to_complex(mp), subsets);
  REQUIRE(streamed.solutions.size() == full.solutions.size());
  for (size_t i = 0; i < subsets.size(); ++i)
    CHECK(max_norm(streamed.solutions[i].x - full.solutions[i].x) < 1e-8);
}

TEST_CASE("verification rejects a perturbed solvent") {
  std::mt19937_64 rng(53);
  RatMatPolynomial mp = monic_quadratic(rand_mat(rng, 2), rand_mat(rng, 2));
  SolutionSet sols = solve_unilateral(mp);
  REQUIRE_FALSE(sols.solutions.empty());
  CMatrix x = sols.solutions[0].x;
  x(0, 0) += 1e-3;
  VerifyReport rep = verify_solvent(to_complex(mp), x);
  CHECK_FALSE(rep.equation_ok);
}

TEST_CASE("residuals are relative to the coefficient scale") {
  RatMatrix big = RatMatrix::from_rows({{Rat(1000000), Rat(0)}, {Rat(0), Rat(1000000)}});
  RatMatPolynomial mp = monic_quadratic(big, RatMatrix(2, 2));
  MatPolynomial cm = to_complex(mp);
  // The equation is X^2 + 10^6 I = 0; the residual scale absorbs the large
  // coefficient so the true solution scores tiny and a wrong one scores big.
  CMatrix x = 1000.0 * CMatrix::Identity(2, 2);
  CHECK(equation_residual(cm, x) > 0.1);
  CMatrix sol(2, 2);
  sol << Complex(0, 1000), 0, 0, Complex(0, 1000);
  CHECK(equation_residual(cm, sol) < 1e-12);
}

TEST_CASE("coefficient shape validation") {
  RatMatPolynomial bad{{RatMatrix(2, 2), RatMatrix(3, 3)}};
  CHECK_THROWS_AS(bad.validate(), Error);
  RatMatPolynomial empty{{}};
  CHECK_THROWS_AS(empty.validate(), Error);
}
