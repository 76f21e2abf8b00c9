#include "matsolve/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "matsolve/errors.hpp"

namespace matsolve {

CMatrix to_complex(const RatMatrix& m) {
  CMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = Complex(rat_to_double(m.at(i, j)), 0.0);
  return out;
}

double max_norm(const CMatrix& m) {
  double v = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v = std::max(v, std::abs(m(i, j)));
  return v;
}

double joint_scale(const std::vector<CMatrix>& ms) {
  double v = 0;
  for (const CMatrix& m : ms) v = std::max(v, max_norm(m));
  return std::max(v, 1.0);
}

std::vector<CVector> nullspace(const CMatrix& m, double rank_tol) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  std::vector<CVector> basis;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) <= rank_tol * smax) basis.push_back(svd.matrixV().col(i));
  // columns of V beyond the row count never appear in singular triplets but
  // still span kernel directions of a wide matrix
  for (int i = sv.size(); i < svd.matrixV().cols(); ++i) basis.push_back(svd.matrixV().col(i));
  return basis;
}

double condition_number(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return std::numeric_limits<double>::infinity();
  double smin = sv(sv.size() - 1);
  if (smin == 0) return std::numeric_limits<double>::infinity();
  return sv(0) / smin;
}

CUniPoly interpolated_det(const std::function<CMatrix(const Complex&)>& entry, int degree) {
  const int m = degree + 1;
  std::vector<Complex> values(m);
  for (int j = 0; j < m; ++j) {
    double ang = 2.0 * M_PI * j / m;
    Complex node(std::cos(ang), std::sin(ang));
    values[j] = Eigen::PartialPivLU<CMatrix>(entry(node)).determinant();
  }
  std::vector<Complex> coeffs(m);
  for (int i = 0; i < m; ++i) {
    Complex acc = 0;
    for (int j = 0; j < m; ++j) {
      double ang = -2.0 * M_PI * i * j / m;
      acc += values[j] * Complex(std::cos(ang), std::sin(ang));
    }
    coeffs[i] = acc / static_cast<double>(m);
  }
  return CUniPoly(std::move(coeffs));
}

EigenDecomposition eigen_decompose(const CMatrix& m, double rank_tol, double cluster_tol) {
  const int n = static_cast<int>(m.rows());
  // Schur-based eigenvalues: repeated spectra come back numerically
  // coincident, which root-finding the characteristic polynomial cannot
  // promise (a double root is only locatable to the square root of the
  // residual tolerance).
  Eigen::ComplexEigenSolver<CMatrix> solver(m, false);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::NoConvergence, "eigenvalue iteration failed");
  std::vector<Complex> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  double scale = 1.0;
  for (const Complex& r : roots) scale = std::max(scale, std::abs(r));
  const double gap = cluster_tol * scale;

  // single-link clustering of numerically coincident roots
  std::vector<int> cluster(roots.size(), -1);
  std::vector<std::vector<int>> groups;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (cluster[i] >= 0) continue;
    std::vector<int> group{static_cast<int>(i)};
    cluster[i] = static_cast<int>(groups.size());
    for (size_t pos = 0; pos < group.size(); ++pos) {
      for (size_t j = 0; j < roots.size(); ++j) {
        if (cluster[j] >= 0) continue;
        if (std::abs(roots[group[pos]] - roots[j]) <= gap) {
          cluster[j] = cluster[i];
          group.push_back(static_cast<int>(j));
        }
      }
    }
    groups.push_back(std::move(group));
  }

  EigenDecomposition out;
  std::vector<CVector> cols;
  std::vector<int> owner;
  for (const std::vector<int>& group : groups) {
    Complex rep = 0;
    for (int i : group) rep += roots[i];
    rep /= static_cast<double>(group.size());
    int value_index = static_cast<int>(out.values.size());
    for (size_t i = 0; i < group.size(); ++i) out.values.push_back(rep);
    std::vector<CVector> vecs = nullspace(m - rep * CMatrix::Identity(n, n), rank_tol);
    if (vecs.empty()) {
      // the root is certified but the gate missed; take the weakest direction
      Eigen::JacobiSVD<CMatrix> svd(m - rep * CMatrix::Identity(n, n), Eigen::ComputeFullV);
      vecs.push_back(svd.matrixV().col(n - 1));
    }
    if (vecs.size() > group.size()) vecs.resize(group.size());
    for (const CVector& v : vecs) {
      cols.push_back(v);
      owner.push_back(value_index);
    }
  }
  out.vectors = CMatrix(n, static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) out.vectors.col(c) = cols[c];
  out.value_of_vector = std::move(owner);
  out.deficient = static_cast<int>(cols.size()) < n;
  return out;
}

CMatrix poly_of_matrix(const CUniPoly& p, const CMatrix& m) {
  const int n = static_cast<int>(m.rows());
  CMatrix acc = CMatrix::Zero(n, n);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    acc += p.coeff(i) * CMatrix::Identity(n, n);
  }
  return acc;
}

CMatrix poly_of_matrix(const RatUniPoly& p, const CMatrix& m) {
  return poly_of_matrix(CUniPoly::from_rational(p), m);
}

}  // namespace matsolve
