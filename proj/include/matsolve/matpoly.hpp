#pragma once

#include <vector>

#include "matsolve/cmatrix.hpp"
#include "matsolve/ratpoly.hpp"

namespace matsolve {

// Matrix polynomial A_k L^k + ... + A_1 L + A_0 with square coefficients,
// stored ascending: coeffs[i] = A_i. The matrix equation it induces is
// A_k X^k + ... + A_1 X + A_0 = 0 with coefficients on the left.
struct RatMatPolynomial {
  std::vector<RatMatrix> coeffs;

  int n() const { return coeffs.empty() ? 0 : coeffs.front().rows(); }
  int k() const { return static_cast<int>(coeffs.size()) - 1; }
  void validate() const;
};

struct MatPolynomial {
  std::vector<CMatrix> coeffs;

  int n() const { return coeffs.empty() ? 0 : static_cast<int>(coeffs.front().rows()); }
  int k() const { return static_cast<int>(coeffs.size()) - 1; }
  void validate() const;
};

MatPolynomial to_complex(const RatMatPolynomial& mp);

// det(sum_i lambda^i A_i), degree at most n*k.
// Exact path: Lagrange interpolation through the integer nodes 0..nk with
// fraction-free determinants. Float path: unit-circle nodes and inverse DFT.
RatUniPoly det_lambda(const RatMatPolynomial& mp);
CUniPoly det_lambda(const MatPolynomial& mp);

CMatrix eval_lambda(const MatPolynomial& mp, const Complex& lambda);
RatMatrix eval_lambda(const RatMatPolynomial& mp, const Rat& lambda);

// sum_i A_i X^i
CMatrix eval_at_matrix(const MatPolynomial& mp, const CMatrix& x);
RatMatrix eval_at_matrix(const RatMatPolynomial& mp, const RatMatrix& x);

// Relative equation residual: ||sum A_i X^i||_max over the evaluation scale
// sum_i ||A_i||_max * max(1, ||X||_max)^i.
double equation_residual(const MatPolynomial& mp, const CMatrix& x);

struct Solvent {
  CMatrix x;
  std::vector<int> subset;  // indices selecting the spectrum of x
  double residual = 0.0;
};

struct SolutionSet {
  std::vector<Solvent> solutions;
  int n = 0;
  long expected_count = 0;
  bool all_simple = true;  // pairwise distances above the dedup tolerance
  std::string method;
};

struct UnilateralOptions {
  double rank_tol = kRankTol;
  double dedup_tol = kDedupTol;
  double solvent_tol = kSolventTol;
  double cond_cap = kCondCap;
  double root_gap = kRootGapTol;
  long enum_cap = kEnumCap;
  AberthOptions aberth;
};

// Solvents of the unilateral equation: every n-subset of the nk lambda roots
// contributes X_J = P_J D_J P_J^{-1} built from the one-dimensional kernels
// at the selected roots. Rational input takes the exact det_lambda path.
SolutionSet solve_unilateral(const RatMatPolynomial& mp, const UnilateralOptions& opts = {});
SolutionSet solve_unilateral(const MatPolynomial& mp, const UnilateralOptions& opts = {});

// Streaming variant for instances beyond the enumeration cap: builds solvents
// only for the requested root subsets.
SolutionSet solve_unilateral_subsets(const MatPolynomial& mp,
                                     const std::vector<std::vector<int>>& subsets,
                                     const UnilateralOptions& opts = {});

struct VerifyReport {
  double equation_residual = 0.0;
  double phi_residual = 0.0;
  bool equation_ok = false;
  bool phi_ok = false;
  bool ok() const { return equation_ok && phi_ok; }
};

// Independent check of a candidate solvent: direct equation residual plus the
// annihilation of the lambda-determinant at the matrix argument.
VerifyReport verify_solvent(const MatPolynomial& mp, const CMatrix& x,
                            double equation_tol = kSolventTol, double phi_tol = kPhiResidualTol);

long binomial(int n, int r);  // throws CapExceeded past 2^62

}  // namespace matsolve
