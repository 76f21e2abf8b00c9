#include "matsolve/cpoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace matsolve {

CUniPoly::CUniPoly(std::vector<Complex> ascending) : c_(std::move(ascending)) {
  double maxabs = 0;
  for (const Complex& v : c_) maxabs = std::max(maxabs, std::abs(v));
  while (!c_.empty() && std::abs(c_.back()) <= kLeadingTol * maxabs) c_.pop_back();
}

CUniPoly CUniPoly::from_rational(const RatUniPoly& p) {
  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  for (const Rat& v : p.coeffs()) c.emplace_back(rat_to_double(v), 0.0);
  return CUniPoly(std::move(c));
}

CUniPoly CUniPoly::from_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> c{Complex(1)};
  for (const Complex& r : roots) {
    c.push_back(0);
    for (size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
    c[0] = -r * c[0];
  }
  return CUniPoly(std::move(c));
}

Complex CUniPoly::eval(const Complex& x) const {
  Complex acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

double CUniPoly::eval_scale(const Complex& x) const {
  double ax = std::abs(x), acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * ax + std::abs(c_[i]);
  return acc;
}

CUniPoly CUniPoly::derivative() const {
  if (degree() < 1) return CUniPoly();
  std::vector<Complex> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<double>(i);
  return CUniPoly(std::move(d));
}

CUniPoly CUniPoly::shifted(const Complex& shift) const {
  // synthetic Taylor shift: repeated division by (x - shift)
  std::vector<Complex> work(c_), out(c_.size());
  const int d = degree();
  for (int k = 0; k <= d; ++k) {
    for (int i = d - 1; i >= k; --i) work[i] += shift * work[i + 1];
    out[k] = work[k];
  }
  return CUniPoly(std::move(out));
}

RootSet aberth_roots(const CUniPoly& p, const AberthOptions& opts) {
  const int d = p.degree();
  if (d < 1) throw Error(ErrorKind::ZeroPolynomial, "root finding needs degree >= 1");

  const CUniPoly dp = p.derivative();
  const Complex lead = p.coeff(d);

  // Cauchy bound on root magnitudes
  double bound = 0;
  for (int i = 0; i < d; ++i) bound = std::max(bound, std::abs(p.coeff(i) / lead));
  bound = 1.0 + bound;

  // perturbed circle start, rotated off the axes by a fixed irrational angle
  const double theta0 = 1.4142135623730951;
  const double golden = 0.6180339887498949;
  std::vector<Complex> z(d);
  for (int k = 0; k < d; ++k) {
    double frac = std::fmod(k * golden, 1.0);
    double radius = bound * (0.5 + 0.25 * frac);
    double angle = theta0 + 2.0 * M_PI * k / d;
    z[k] = Complex(radius * std::cos(angle), radius * std::sin(angle));
  }

  std::vector<double> resid(d, std::numeric_limits<double>::infinity());
  auto residual_at = [&](const Complex& x) {
    double scale = p.eval_scale(x);
    return scale > 0 ? std::abs(p.eval(x)) / scale : std::abs(p.eval(x));
  };

  int iters = 0;
  bool converged = false;
  for (; iters < opts.max_iters && !converged; ++iters) {
    converged = true;
    for (int k = 0; k < d; ++k) {
      Complex pv = p.eval(z[k]);
      resid[k] = residual_at(z[k]);
      if (resid[k] <= opts.residual_tol) continue;
      converged = false;
      Complex dv = dp.eval(z[k]);
      if (std::abs(dv) == 0) {
        z[k] += Complex(1e-8, 1e-8) * (1.0 + std::abs(z[k]));
        continue;
      }
      Complex newton = pv / dv;
      Complex repulsion = 0;
      for (int j = 0; j < d; ++j) {
        if (j == k) continue;
        Complex diff = z[k] - z[j];
        if (std::abs(diff) < 1e-300) diff = Complex(1e-300, 0);
        repulsion += 1.0 / diff;
      }
      Complex denom = 1.0 - newton * repulsion;
      Complex step = std::abs(denom) < 1e-300 ? newton : newton / denom;
      z[k] -= step;
    }
  }
  if (!converged) {
    for (int k = 0; k < d; ++k) resid[k] = residual_at(z[k]);
    throw NoConvergenceError("root iteration cap " + std::to_string(opts.max_iters) + " hit",
                             resid);
  }

  // Newton polish; keep a step only when it improves the residual
  for (int k = 0; k < d; ++k) {
    for (int it = 0; it < 3; ++it) {
      Complex dv = dp.eval(z[k]);
      if (std::abs(dv) == 0) break;
      Complex cand = z[k] - p.eval(z[k]) / dv;
      if (residual_at(cand) < resid[k]) {
        z[k] = cand;
        resid[k] = residual_at(cand);
      } else {
        break;
      }
    }
  }

  RootSet out;
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (z[a].real() != z[b].real()) return z[a].real() < z[b].real();
    return z[a].imag() < z[b].imag();
  });
  for (int i : idx) {
    out.roots.push_back(z[i]);
    out.residuals.push_back(resid[i]);
  }
  out.iterations = iters;
  out.min_separation = std::numeric_limits<double>::infinity();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      out.min_separation = std::min(out.min_separation, std::abs(out.roots[i] - out.roots[j]));
  return out;
}

}  // namespace matsolve
