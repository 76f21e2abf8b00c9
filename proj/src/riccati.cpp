#include "matsolve/riccati.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "matsolve/cmatrix.hpp"
#include "matsolve/errors.hpp"

namespace matsolve {

void RiccatiProblem::validate() const {
  if (!a.is_square() || a.rows() < 1) throw parse_error("coefficient A must be square");
  for (const RatMatrix* m : {&b1, &b2, &c}) {
    if (m->rows() != a.rows() || m->cols() != a.cols())
      throw parse_error("coefficient sizes disagree");
  }
}

ReductionTrace reduce_riccati(const RiccatiProblem& p) {
  p.validate();
  RatMatrix ainv = p.a.inverse();  // throws Singular when det(A) = 0
  RatMatrix u = -(ainv * p.b2);
  // Substituting X = A^{-1} Z + U and multiplying by A on the left leaves
  // Z^2 + (-B2 + A B1 A^{-1}) Z + (A C - A B1 A^{-1} B2) = 0; the cross
  // terms cancel because A U = -B2.
  RatMatrix ab1ai = p.a * p.b1 * ainv;
  RatMatrix bt = -p.b2 + ab1ai;
  RatMatrix ct = p.a * p.c - ab1ai * p.b2;
  ReductionTrace tr;
  tr.u_shift = u;
  tr.a_inv = ainv;
  tr.unilateral = RatMatPolynomial{{ct, bt, RatMatrix::identity(p.n())}};
  return tr;
}

CMatrix apply_back_map(const ReductionTrace& tr, const CMatrix& z) {
  return to_complex(tr.a_inv) * z + to_complex(tr.u_shift);
}

RatMatrix structure_matrix(const RiccatiProblem& p) {
  p.validate();
  const int n = p.n();
  RatMatrix m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = -p.b2.at(i, j);
      m.at(i, n + j) = -p.a.at(i, j);
      m.at(n + i, j) = p.c.at(i, j);
      m.at(n + i, n + j) = p.b1.at(i, j);
    }
  }
  return m;
}

double riccati_residual(const RiccatiProblem& p, const CMatrix& x) {
  CMatrix a = to_complex(p.a), b1 = to_complex(p.b1), b2 = to_complex(p.b2), c = to_complex(p.c);
  CMatrix r = x * a * x + b1 * x + x * b2 + c;
  double m = std::max(1.0, max_norm(x));
  double scale = max_norm(a) * m * m + (max_norm(b1) + max_norm(b2)) * m + max_norm(c);
  return max_norm(r) / std::max(scale, 1e-300);
}

SolutionSet hamiltonian_solve(const RiccatiProblem& p, const HamiltonianOptions& opts) {
  const int n = p.n();
  CMatrix m = to_complex(structure_matrix(p));
  EigenDecomposition eig = eigen_decompose(m, opts.rank_tol, opts.root_gap);
  if (eig.deficient || eig.vectors.cols() != 2 * n)
    throw not_generic("structure matrix is defective");
  // Vectors of one eigenvalue cluster share a value index, so 2n distinct
  // indices certify 2n simple eigenvalues.
  if (std::set<int>(eig.value_of_vector.begin(), eig.value_of_vector.end()).size() !=
      static_cast<size_t>(2 * n))
    throw not_generic("structure matrix has repeated eigenvalues");

  // Deterministic eigenpair order regardless of root-finder internals.
  std::vector<int> perm(2 * n);
  for (int i = 0; i < 2 * n; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](int l, int r) {
    const Complex& a = eig.values[eig.value_of_vector[l]];
    const Complex& b = eig.values[eig.value_of_vector[r]];
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  SolutionSet out;
  out.n = n;
  out.expected_count = binomial(2 * n, n);
  out.method = "invariant-subspace";

  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    CMatrix top(n, n), bot(n, n);
    for (int c2 = 0; c2 < n; ++c2) {
      CVector col = eig.vectors.col(perm[idx[c2]]);
      top.col(c2) = col.head(n);
      bot.col(c2) = col.tail(n);
    }
    Eigen::JacobiSVD<CMatrix> svd(top);
    double smax = svd.singularValues()(0);
    double smin = svd.singularValues()(n - 1);
    if (smin > opts.u_gate && smax / smin < opts.cond_cap) {
      // X [top] = [bot] columnwise, i.e. X = bot * top^{-1}.
      CMatrix x = top.transpose().partialPivLu().solve(bot.transpose()).transpose();
      double res = riccati_residual(p, x);
      if (res <= opts.residual_tol) {
        Solvent s;
        s.x = x;
        s.subset = idx;
        s.residual = res;
        out.solutions.push_back(std::move(s));
      }
    }
    int pos = n - 1;
    while (pos >= 0 && idx[pos] == 2 * n - n + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int q = pos + 1; q < n; ++q) idx[q] = idx[q - 1] + 1;
  }

  for (size_t i = 0; i + 1 < out.solutions.size() && out.all_simple; ++i) {
    for (size_t j = i + 1; j < out.solutions.size(); ++j) {
      double gap = max_norm(out.solutions[i].x - out.solutions[j].x);
      double scale = std::max(1.0, std::max(max_norm(out.solutions[i].x),
                                            max_norm(out.solutions[j].x)));
      if (gap <= opts.dedup_tol * scale) {
        out.all_simple = false;
        break;
      }
    }
  }
  return out;
}

TraceEvennessReport trace_evenness_check(const SolutionSet& sols, double tol) {
  const int n = sols.n;
  long tau = binomial(2 * n, n);
  if (static_cast<long>(sols.solutions.size()) != tau)
    throw parse_error("trace symmetry needs the complete solution set");

  std::vector<Complex> traces;
  traces.reserve(sols.solutions.size());
  for (const Solvent& s : sols.solutions) traces.push_back(s.x.trace());

  TraceEvennessReport rep;
  rep.tau = static_cast<int>(tau);
  CUniPoly prod = CUniPoly::from_roots(traces);
  rep.p_coeffs = prod.coeffs();
  // Kill the subleading coefficient; complement pairing then makes the rest even.
  rep.shift = -prod.coeff(rep.tau - 1) / static_cast<double>(tau);
  CUniPoly q = prod.shifted(rep.shift);

  double cmax = 0.0;
  for (const Complex& c : q.coeffs()) cmax = std::max(cmax, std::abs(c));
  double odd = 0.0;
  for (int i = 1; i <= q.degree(); i += 2) odd = std::max(odd, std::abs(q.coeff(i)));
  rep.max_odd_rel = cmax > 0 ? odd / cmax : 0.0;
  rep.is_even = rep.max_odd_rel <= tol;
  for (int i = 0; 2 * i <= q.degree(); ++i) rep.r_coeffs.push_back(q.coeff(2 * i));
  return rep;
}

}  // namespace matsolve
