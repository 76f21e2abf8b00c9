#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "matsolve/cpoly.hpp"
#include "matsolve/defaults.hpp"
#include "matsolve/rat.hpp"

namespace matsolve {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

CMatrix to_complex(const RatMatrix& m);

double max_norm(const CMatrix& m);

// Largest entry magnitude among several matrices; equation residual scale.
double joint_scale(const std::vector<CMatrix>& ms);

// Orthonormal basis of {v : m v = 0}: right singular vectors whose singular
// value is at most rank_tol * sigma_max (all of them for the zero matrix).
std::vector<CVector> nullspace(const CMatrix& m, double rank_tol = kRankTol);

// sigma_max / sigma_min; +inf when numerically singular.
double condition_number(const CMatrix& m);

// Interpolated determinant: evaluates det(entry(lambda)) on the unit circle
// at degree+1 nodes and recovers the coefficients by an inverse DFT.
CUniPoly interpolated_det(const std::function<CMatrix(const Complex&)>& entry, int degree);

struct EigenDecomposition {
  std::vector<Complex> values;       // one entry per root, repeats inside a cluster
  CMatrix vectors;                   // n x r, one column per independent eigenvector
  std::vector<int> value_of_vector;  // column -> index into values
  bool deficient = false;            // fewer than n independent eigenvectors
};

// Schur-based eigenvalues sorted by (re, im), eigenvectors from the nullspace
// at each clustered value. cluster_tol is relative to the eigenvalue scale
// and groups numerically coincident roots, so repeated spectra share a slot.
EigenDecomposition eigen_decompose(const CMatrix& m, double rank_tol = kRankTol,
                                   double cluster_tol = kRootGapTol);

// p(m) by Horner.
CMatrix poly_of_matrix(const CUniPoly& p, const CMatrix& m);

// Scalar-coefficient matrix polynomial evaluation for exact input.
CMatrix poly_of_matrix(const RatUniPoly& p, const CMatrix& m);

}  // namespace matsolve
