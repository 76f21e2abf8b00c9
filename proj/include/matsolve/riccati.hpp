#pragma once

#include "matsolve/matpoly.hpp"

namespace matsolve {

// X A X + B1 X + X B2 + C = 0 with exact rational data, A invertible.
struct RiccatiProblem {
  RatMatrix a, b1, b2, c;

  int n() const { return a.rows(); }
  void validate() const;
};

// Change of variable X = A^{-1} Z + U with U = -A^{-1} B2 turns the equation
// into the monic unilateral Z^2 + Bt Z + Ct = 0; this records both directions.
struct ReductionTrace {
  RatMatrix u_shift;            // U
  RatMatrix a_inv;              // X = a_inv * Z + u_shift
  RatMatPolynomial unilateral;  // [Ct, Bt, I]
};

ReductionTrace reduce_riccati(const RiccatiProblem& p);  // throws Singular on det(A)=0

CMatrix apply_back_map(const ReductionTrace& tr, const CMatrix& z);

// [[-B2, -A], [C, B1]]; the graph of any solution is an invariant subspace.
RatMatrix structure_matrix(const RiccatiProblem& p);

double riccati_residual(const RiccatiProblem& p, const CMatrix& x);

struct HamiltonianOptions {
  double rank_tol = kRankTol;
  double u_gate = kUGate;      // smallest singular value of the top block
  double cond_cap = kCondCap;
  double root_gap = kRootGapTol;
  double residual_tol = kSolventTol;
  double dedup_tol = kDedupTol;
};

// All solutions with invertible top block: for each n-subset of eigenvectors
// of the structure matrix, stacks [U; V] and returns X = V U^{-1} when the
// gate accepts U. Throws NotGeneric when the 2n eigenvalues are not distinct.
SolutionSet hamiltonian_solve(const RiccatiProblem& p, const HamiltonianOptions& opts = {});

struct TraceEvennessReport {
  int tau = 0;                     // number of solutions consumed
  Complex shift;                   // recentring applied to the trace polynomial
  std::vector<Complex> p_coeffs;   // product polynomial, ascending
  std::vector<Complex> r_coeffs;   // Q(u) = R(u^2), ascending
  double max_odd_rel = 0.0;
  bool is_even = false;
};

// Builds prod (z - tr X_J) over a complete solution set of a degree-2 monic
// unilateral instance, recentres it, and checks that the result is even.
TraceEvennessReport trace_evenness_check(const SolutionSet& sols,
                                         double tol = kTraceEvenTol);

}  // namespace matsolve
