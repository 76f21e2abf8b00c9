#include "matsolve/matpoly.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "matsolve/parallel.hpp"

namespace matsolve {

void RatMatPolynomial::validate() const {
  if (coeffs.empty()) throw parse_error("matrix polynomial needs at least one coefficient");
  const int nn = coeffs.front().rows();
  for (const RatMatrix& a : coeffs)
    if (!a.is_square() || a.rows() != nn) throw parse_error("coefficients must be square, same size");
}

void MatPolynomial::validate() const {
  if (coeffs.empty()) throw parse_error("matrix polynomial needs at least one coefficient");
  const auto nn = coeffs.front().rows();
  for (const CMatrix& a : coeffs)
    if (a.rows() != a.cols() || a.rows() != nn)
      throw parse_error("coefficients must be square, same size");
}

MatPolynomial to_complex(const RatMatPolynomial& mp) {
  MatPolynomial out;
  out.coeffs.reserve(mp.coeffs.size());
  for (const RatMatrix& a : mp.coeffs) out.coeffs.push_back(to_complex(a));
  return out;
}

RatMatrix eval_lambda(const RatMatPolynomial& mp, const Rat& lambda) {
  const int n = mp.n();
  RatMatrix acc(n, n);
  for (int i = mp.k(); i >= 0; --i) {
    acc = acc * lambda + mp.coeffs[i];
  }
  return acc;
}

CMatrix eval_lambda(const MatPolynomial& mp, const Complex& lambda) {
  const int n = mp.n();
  CMatrix acc = CMatrix::Zero(n, n);
  for (int i = mp.k(); i >= 0; --i) acc = acc * lambda + mp.coeffs[i];
  return acc;
}

RatUniPoly det_lambda(const RatMatPolynomial& mp) {
  mp.validate();
  const int deg = mp.n() * mp.k();
  std::vector<Rat> nodes, values;
  nodes.reserve(deg + 1);
  values.reserve(deg + 1);
  for (int t = 0; t <= deg; ++t) {
    nodes.emplace_back(t);
    values.push_back(eval_lambda(mp, nodes.back()).det());
  }
  return interpolate(nodes, values);
}

CUniPoly det_lambda(const MatPolynomial& mp) {
  mp.validate();
  const int deg = mp.n() * mp.k();
  return interpolated_det(
      [&](const Complex& lambda) { return eval_lambda(mp, lambda); }, deg);
}

CMatrix eval_at_matrix(const MatPolynomial& mp, const CMatrix& x) {
  const int n = mp.n();
  CMatrix acc = CMatrix::Zero(n, n);
  for (int i = mp.k(); i >= 0; --i) acc = acc * x + mp.coeffs[i];
  return acc;
}

RatMatrix eval_at_matrix(const RatMatPolynomial& mp, const RatMatrix& x) {
  const int n = mp.n();
  RatMatrix acc(n, n);
  for (int i = mp.k(); i >= 0; --i) acc = acc * x + mp.coeffs[i];
  return acc;
}

double equation_residual(const MatPolynomial& mp, const CMatrix& x) {
  double xn = std::max(1.0, max_norm(x));
  double scale = 0, pw = 1;
  for (const CMatrix& a : mp.coeffs) {
    scale += max_norm(a) * pw;
    pw *= xn;
  }
  if (scale <= 0) scale = 1;
  return max_norm(eval_at_matrix(mp, x)) / scale;
}

long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  mpz_class acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc *= n - r + i;
    acc /= i;
  }
  if (!acc.fits_slong_p()) throw cap_exceeded("binomial overflow");
  return acc.get_si();
}

namespace {

struct SpectralData {
  std::vector<Complex> roots;
  std::vector<CVector> kernels;  // one unit vector per root
};

// Kernel direction at every lambda root; genericity demands exactly one.
SpectralData kernels_at_roots(const MatPolynomial& mp, const CUniPoly& phi,
                              const UnilateralOptions& opts) {
  const int n = mp.n(), k = mp.k();
  if (phi.degree() < n * k)
    throw not_generic("lambda determinant degree " + std::to_string(phi.degree()) +
                      " below n*k = " + std::to_string(n * k) +
                      " (leading coefficient matrix singular)");
  RootSet rs = aberth_roots(phi, opts.aberth);
  double scale = 1.0;
  for (const Complex& r : rs.roots) scale = std::max(scale, std::abs(r));
  if (rs.roots.size() > 1 && rs.min_separation <= opts.root_gap * scale)
    throw not_generic("repeated lambda roots (separation " +
                      std::to_string(rs.min_separation) + ")");

  SpectralData sd;
  sd.roots = rs.roots;
  sd.kernels.resize(rs.roots.size());
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    CMatrix m = eval_lambda(mp, rs.roots[i]);
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double smax = sv(0);
    if (smax == 0) throw not_generic("matrix vanishes identically at a lambda root");
    if (n >= 2 && sv(n - 2) <= opts.rank_tol * smax)
      throw not_generic("kernel at a lambda root has dimension > 1");
    if (sv(n - 1) > 1e-6 * smax)
      throw not_generic("no kernel direction at a lambda root (sigma_min/sigma_max = " +
                        std::to_string(sv(n - 1) / smax) + ")");
    sd.kernels[i] = svd.matrixV().col(n - 1);
  }
  return sd;
}

SolutionSet assemble_solvents(const MatPolynomial& mp, const SpectralData& sd,
                              const std::vector<std::vector<int>>& subsets,
                              const UnilateralOptions& opts) {
  const int n = mp.n();
  SolutionSet out;
  out.n = n;
  out.method = "spectral";
  out.expected_count = static_cast<long>(subsets.size());
  out.solutions.resize(subsets.size());
  std::vector<std::optional<std::string>> failure(subsets.size());

  parallel_for(subsets.size(), [&](size_t s) {
    const std::vector<int>& J = subsets[s];
    CMatrix p(n, n);
    CMatrix d = CMatrix::Zero(n, n);
    for (int c = 0; c < n; ++c) {
      p.col(c) = sd.kernels[J[c]];
      d(c, c) = sd.roots[J[c]];
    }
    double cond = condition_number(p);
    if (!(cond < opts.cond_cap)) {
      failure[s] = "eigenvector matrix ill-conditioned (cond " + std::to_string(cond) + ")";
      return;
    }
    Solvent sol;
    sol.x = p * d * p.partialPivLu().solve(CMatrix::Identity(n, n));
    sol.subset = J;
    sol.residual = equation_residual(mp, sol.x);
    out.solutions[s] = std::move(sol);
  });
  for (size_t s = 0; s < subsets.size(); ++s)
    if (failure[s]) throw not_generic(*failure[s]);

  for (size_t a = 0; a < out.solutions.size() && out.all_simple; ++a)
    for (size_t b = a + 1; b < out.solutions.size(); ++b)
      if (max_norm(out.solutions[a].x - out.solutions[b].x) <= opts.dedup_tol) {
        out.all_simple = false;
        break;
      }
  return out;
}

std::vector<std::vector<int>> all_subsets(int m, int n, long cap) {
  long count = binomial(m, n);
  if (count > cap)
    throw cap_exceeded("subset enumeration " + std::to_string(count) + " exceeds cap " +
                       std::to_string(cap));
  std::vector<std::vector<int>> subsets;
  subsets.reserve(count);
  std::vector<int> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = i;
  for (;;) {
    subsets.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == m - n + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < n; ++j) cur[j] = cur[j - 1] + 1;
  }
  return subsets;
}

SolutionSet solve_with_phi(const MatPolynomial& mp, const CUniPoly& phi,
                           const UnilateralOptions& opts) {
  SpectralData sd = kernels_at_roots(mp, phi, opts);
  auto subsets = all_subsets(mp.n() * mp.k(), mp.n(), opts.enum_cap);
  return assemble_solvents(mp, sd, subsets, opts);
}

}  // namespace

SolutionSet solve_unilateral(const RatMatPolynomial& mp, const UnilateralOptions& opts) {
  mp.validate();
  RatUniPoly phi = det_lambda(mp);
  return solve_with_phi(to_complex(mp), CUniPoly::from_rational(phi), opts);
}

SolutionSet solve_unilateral(const MatPolynomial& mp, const UnilateralOptions& opts) {
  mp.validate();
  return solve_with_phi(mp, det_lambda(mp), opts);
}

SolutionSet solve_unilateral_subsets(const MatPolynomial& mp,
                                     const std::vector<std::vector<int>>& subsets,
                                     const UnilateralOptions& opts) {
  mp.validate();
  SpectralData sd = kernels_at_roots(mp, det_lambda(mp), opts);
  for (const std::vector<int>& J : subsets) {
    if (static_cast<int>(J.size()) != mp.n()) throw parse_error("subset size must equal n");
    for (int idx : J)
      if (idx < 0 || idx >= static_cast<int>(sd.roots.size()))
        throw parse_error("subset index out of range");
  }
  return assemble_solvents(mp, sd, subsets, opts);
}

VerifyReport verify_solvent(const MatPolynomial& mp, const CMatrix& x, double equation_tol,
                            double phi_tol) {
  VerifyReport r;
  r.equation_residual = equation_residual(mp, x);
  r.equation_ok = r.equation_residual <= equation_tol;

  CUniPoly phi = det_lambda(mp);
  CMatrix value = poly_of_matrix(phi, x);
  // scale: sum |phi_i| * (n * max(1, ||x||))^i bounds the evaluation
  double xb = static_cast<double>(x.rows()) * std::max(1.0, max_norm(x));
  double scale = 0, pw = 1;
  for (int i = 0; i <= phi.degree(); ++i) {
    scale += std::abs(phi.coeff(i)) * pw;
    pw *= xb;
  }
  if (scale <= 0) scale = 1;
  r.phi_residual = max_norm(value) / scale;
  r.phi_ok = r.phi_residual <= phi_tol;
  return r;
}

}  // namespace matsolve
