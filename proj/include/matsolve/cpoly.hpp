#pragma once

#include <vector>

#include "matsolve/defaults.hpp"
#include "matsolve/ratpoly.hpp"

namespace matsolve {

// Univariate polynomial over complex doubles, coefficients ascending.
// Construction trims top coefficients whose magnitude is at most
// kLeadingTol times the largest coefficient magnitude.
class CUniPoly {
 public:
  CUniPoly() = default;
  explicit CUniPoly(std::vector<Complex> ascending);
  static CUniPoly from_rational(const RatUniPoly& p);
  static CUniPoly from_roots(const std::vector<Complex>& roots);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return c_; }
  Complex coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Complex(0);
  }

  Complex eval(const Complex& x) const;
  // Magnitude-weighted evaluation scale sum |c_i| |x|^i, for relative residuals.
  double eval_scale(const Complex& x) const;
  CUniPoly derivative() const;
  // p(x + shift)
  CUniPoly shifted(const Complex& shift) const;

 private:
  std::vector<Complex> c_;
};

struct AberthOptions {
  int max_iters = 400;
  double residual_tol = kRootResidualTol;
};

struct RootSet {
  std::vector<Complex> roots;       // sorted by (re, im)
  std::vector<double> residuals;    // relative backward residual per root
  double min_separation = 0.0;      // min pairwise distance, +inf for degree 1
  int iterations = 0;
};

// All roots at once by the Ehrlich-Aberth simultaneous iteration, started on
// a perturbed circle scaled by the Cauchy bound, finished with Newton polish.
// Throws ZeroPolynomial for the zero or constant polynomial and NoConvergence
// (with achieved residuals) when the iteration cap is hit.
RootSet aberth_roots(const CUniPoly& p, const AberthOptions& opts = {});

}  // namespace matsolve
