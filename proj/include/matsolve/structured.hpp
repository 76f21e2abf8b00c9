#pragma once

#include "matsolve/matpoly.hpp"
#include "matsolve/ratpoly.hpp"

namespace matsolve {

struct StructuredOptions {
  double rank_tol = kRankTol;
  double root_gap = kRootGapTol;
  double residual_tol = kSolventTol;
  double dedup_tol = kDedupTol;
};

// X^k + B_{k-1} X^{k-1} + ... + B_1 X + B_0 = 0 where every B_j is expected
// to be a polynomial in B_0. b[j] holds B_j, so k = b.size() >= 2.
struct CommutingFamily {
  std::vector<RatMatrix> b;

  int n() const { return b.empty() ? 0 : b[0].rows(); }
  int k() const { return static_cast<int>(b.size()); }
  void validate() const;
};

// Exact structure extracted from a commuting family. p[j-1] is the polynomial
// P_j with B_j = P_j(B_0); theta(x, lambda) = x^k + sum P_j(lambda) x^j + lambda
// couples a scalar root x to an eigenvalue lambda of B_0; big_theta eliminates
// lambda through the resultant with the characteristic polynomial chi.
struct CommutingAnalysis {
  RatUniPoly chi;
  std::vector<RatUniPoly> p;
  RatUniPoly big_theta;
};

// Throws NotGeneric when B_0 has repeated eigenvalues, some B_j is not a
// polynomial in B_0, or the k*n scalar roots of big_theta collide.
CommutingAnalysis analyze_commuting(const CommutingFamily& fam);

// Scalar coupling polynomial theta(x, lambda0) for a fixed eigenvalue.
CUniPoly theta_at(const CommutingAnalysis& an, int k, const Complex& lambda0);

// All k^n solutions V diag(mu_i) V^{-1}: one root of theta(x, lambda_i) per
// eigenvalue of B_0. subset records the chosen root index per eigenvalue.
SolutionSet commuting_solve(const CommutingFamily& fam, const StructuredOptions& opts = {});

// X^2 + BX + XB + C = 0, equivalent to (X + B)^2 = B^2 - C. Requires B^2 - C
// invertible with distinct eigenvalues; returns all 2^n solutions, subset
// holding the sign pattern (0 -> principal square root, 1 -> negated).
SolutionSet symmetric_quadratic_solve(const RatMatrix& b, const RatMatrix& c,
                                      const StructuredOptions& opts = {});

// Z^2 + TZ = 0 for T with distinct non-zero eigenvalues. In the eigenbasis
// the solutions form strata indexed by the subset S of eigenvalues placed on
// the diagonal block: [[-Lambda_S, Y], [0, 0]] with Y free, so the stratum
// dimension is |S| * (n - |S|).
struct BinomeStratumSummary {
  int n = 0;
  int max_dimension = 0;
  long maximal_stratum_count = 0;  // subsets attaining max_dimension
};

BinomeStratumSummary binome_stratum_count(int n);

// Exact member of the stratum chosen by `chosen` for diagonal rational T:
// rows/cols listed in `chosen` carry -T, the free block Y sits above the
// complement. y must be |chosen| x (n - |chosen|).
RatMatrix binome_family_member(const RatMatrix& t_diag, const std::vector<int>& chosen,
                               const RatMatrix& y);

// One-parameter failure witness for X^2 + B X B + C = 0 with diagonal B, C
// (2x2, distinct diagonal of B): the solution set has a curve through the
// four diagonal solutions' complement, so no finite count exists.
struct CounterexampleReport {
  long hilbert_dimension = 0;
  int diagonal_solution_count = 0;
  RatMatrix family_member;
  bool member_solves_exactly = false;
  bool member_commutes_with_b = true;
};

CounterexampleReport commuting_counterexample_check(const RatMatrix& b, const RatMatrix& c,
                                                    const Rat& t);

}  // namespace matsolve
