#include "matsolve/structured.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "matsolve/cmatrix.hpp"
#include "matsolve/defaults.hpp"
#include "matsolve/errors.hpp"
#include "matsolve/syscount.hpp"

namespace matsolve {

namespace {

RatUniPoly char_poly(const RatMatrix& m) {
  RatMatPolynomial pencil{{-m, RatMatrix::identity(m.rows())}};
  return det_lambda(pencil);
}

// vec by rows: (i, j) -> i * n + j, matching the matricized variable order.
RatMatrix vec_columns(const std::vector<RatMatrix>& mats) {
  const int n = mats[0].rows();
  RatMatrix v(n * n, static_cast<int>(mats.size()));
  for (size_t c = 0; c < mats.size(); ++c)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v.at(i * n + j, static_cast<int>(c)) = mats[c].at(i, j);
  return v;
}

struct SortedEigen {
  std::vector<Complex> values;  // n distinct values, sorted by (re, im)
  CMatrix vectors;              // matching columns
};

// Requires a diagonalizable matrix with pairwise distinct eigenvalues; the
// order is independent of root-finder internals.
SortedEigen simple_eigen(const CMatrix& m, double rank_tol, double root_gap,
                         const char* what) {
  const int n = static_cast<int>(m.rows());
  EigenDecomposition eig = eigen_decompose(m, rank_tol, root_gap);
  if (eig.deficient || eig.vectors.cols() != n) throw not_generic(std::string(what) + " is defective");
  if (std::set<int>(eig.value_of_vector.begin(), eig.value_of_vector.end()).size() !=
      static_cast<size_t>(n))
    throw not_generic(std::string(what) + " has repeated eigenvalues");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](int l, int r) {
    const Complex& a = eig.values[eig.value_of_vector[l]];
    const Complex& b = eig.values[eig.value_of_vector[r]];
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  SortedEigen out;
  out.vectors = CMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    out.values.push_back(eig.values[eig.value_of_vector[perm[i]]]);
    out.vectors.col(i) = eig.vectors.col(perm[i]);
  }
  return out;
}

void mark_duplicates(SolutionSet& out, double dedup_tol) {
  for (size_t i = 0; i + 1 < out.solutions.size() && out.all_simple; ++i) {
    for (size_t j = i + 1; j < out.solutions.size(); ++j) {
      double gap = max_norm(out.solutions[i].x - out.solutions[j].x);
      double scale = std::max(1.0, std::max(max_norm(out.solutions[i].x),
                                            max_norm(out.solutions[j].x)));
      if (gap <= dedup_tol * scale) {
        out.all_simple = false;
        break;
      }
    }
  }
}

}  // namespace

void CommutingFamily::validate() const {
  if (b.size() < 2) throw parse_error("family needs degree at least 2");
  const int dim = n();
  for (const RatMatrix& m : b) {
    if (!m.is_square() || m.rows() != dim) throw parse_error("coefficient sizes disagree");
  }
  if (dim < 1) throw parse_error("empty coefficient matrices");
}

CommutingAnalysis analyze_commuting(const CommutingFamily& fam) {
  fam.validate();
  const int n = fam.n();
  const int k = fam.k();
  const RatMatrix& b0 = fam.b[0];
  for (int j = 1; j < k; ++j) {
    if (!(fam.b[j] * b0 == b0 * fam.b[j]))
      throw not_generic("coefficient does not commute with the constant term");
  }

  CommutingAnalysis an;
  an.chi = char_poly(b0);
  if (discriminant(an.chi) == 0)
    throw not_generic("constant term has repeated eigenvalues");

  // B_j = P_j(B_0) is a linear system in the monomial basis I, B_0, ...,
  // B_0^{n-1}; distinct eigenvalues make B_0 nonderogatory, so the basis has
  // full column rank and the solution, when it exists, is unique.
  std::vector<RatMatrix> powers;
  for (int c = 0; c < n; ++c) powers.push_back(mat_pow(b0, c));
  RatMatrix basis = vec_columns(powers);
  for (int j = 1; j < k; ++j) {
    RatMatrix rhs = vec_columns({fam.b[j]});
    std::optional<RatMatrix> sol = try_solve_linear(basis, rhs);
    if (!sol) throw not_generic("coefficient is not a polynomial in the constant term");
    std::vector<Rat> coeffs(n);
    for (int c = 0; c < n; ++c) coeffs[c] = sol->at(c, 0);
    an.p.push_back(RatUniPoly(std::move(coeffs)));
  }

  // theta as a polynomial in lambda whose coefficients live in Q[x].
  int dl = 1;
  for (const RatUniPoly& pj : an.p) dl = std::max(dl, pj.degree());
  std::vector<RatUniPoly> theta_l(dl + 1);
  for (int m = 0; m <= dl; ++m) {
    std::vector<Rat> cx(k + 1, Rat(0));
    for (int j = 1; j < k; ++j) cx[j] = an.p[j - 1].coeff(m);
    if (m == 0) cx[k] = 1;
    theta_l[m] = RatUniPoly(std::move(cx));
    if (m == 1) theta_l[m] = theta_l[m] + RatUniPoly::constant(1);
  }
  while (static_cast<int>(theta_l.size()) > 1 && theta_l.back().is_zero()) theta_l.pop_back();
  dl = static_cast<int>(theta_l.size()) - 1;
  if (dl < 1 || theta_l[dl].is_zero())
    throw Error(ErrorKind::Internal, "degenerate lambda degree in coupling polynomial");

  // Sylvester determinant of chi (degree n in lambda) against theta (degree
  // dl), entries constant respectively polynomial in x.
  const int size = n + dl;
  std::vector<std::vector<RatUniPoly>> syl(size, std::vector<RatUniPoly>(size));
  for (int r = 0; r < dl; ++r)
    for (int c2 = 0; c2 <= n; ++c2)
      syl[r][r + c2] = RatUniPoly::constant(an.chi.coeff(n - c2));
  for (int r = 0; r < n; ++r)
    for (int c2 = 0; c2 <= dl; ++c2) syl[dl + r][r + c2] = theta_l[dl - c2];
  an.big_theta = poly_matrix_det(syl);

  if (an.big_theta.is_zero() || an.big_theta.degree() != k * n)
    throw not_generic("scalar coupling polynomial degenerates");
  if (discriminant(an.big_theta) == 0)
    throw not_generic("scalar solutions collide");
  return an;
}

CUniPoly theta_at(const CommutingAnalysis& an, int k, const Complex& lambda0) {
  std::vector<Complex> c(k + 1, Complex(0));
  c[0] = lambda0;
  for (int j = 1; j < k; ++j) c[j] = an.p[j - 1].eval(lambda0);
  c[k] = 1;
  return CUniPoly(std::move(c));
}

SolutionSet commuting_solve(const CommutingFamily& fam, const StructuredOptions& opts) {
  CommutingAnalysis an = analyze_commuting(fam);
  const int n = fam.n();
  const int k = fam.k();

  long expected = 1;
  for (int i = 0; i < n; ++i) {
    expected *= k;
    if (expected > kEnumCap) throw cap_exceeded("too many root combinations");
  }

  SortedEigen eig = simple_eigen(to_complex(fam.b[0]), opts.rank_tol, opts.root_gap,
                                 "constant term");
  std::vector<std::vector<Complex>> roots(n);
  AberthOptions aopts;
  for (int i = 0; i < n; ++i) {
    roots[i] = aberth_roots(theta_at(an, k, eig.values[i]), aopts).roots;
    if (static_cast<int>(roots[i].size()) != k)
      throw not_generic("scalar polynomial lost degree");
  }

  MatPolynomial mp;
  for (int j = 0; j < k; ++j) mp.coeffs.push_back(to_complex(fam.b[j]));
  mp.coeffs.push_back(CMatrix::Identity(n, n));

  CMatrix vinv = eig.vectors.partialPivLu().inverse();

  SolutionSet out;
  out.n = n;
  out.expected_count = expected;
  out.method = "commuting-spectral";

  std::vector<int> digits(n, 0);
  while (true) {
    CMatrix d = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = roots[i][digits[i]];
    CMatrix x = eig.vectors * d * vinv;
    double res = equation_residual(mp, x);
    if (res <= opts.residual_tol) {
      Solvent s;
      s.x = x;
      s.subset = digits;
      s.residual = res;
      out.solutions.push_back(std::move(s));
    }
    int pos = n - 1;
    while (pos >= 0 && digits[pos] == k - 1) {
      digits[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++digits[pos];
  }
  mark_duplicates(out, opts.dedup_tol);
  return out;
}

SolutionSet symmetric_quadratic_solve(const RatMatrix& b, const RatMatrix& c,
                                      const StructuredOptions& opts) {
  if (!b.is_square() || b.rows() != c.rows() || !c.is_square() || b.rows() < 1)
    throw parse_error("coefficient sizes disagree");
  const int n = b.rows();
  RatMatrix s = b * b - c;
  if (s.det() == 0) throw not_generic("shifted square is singular");
  if (discriminant(char_poly(s)) == 0)
    throw not_generic("shifted square has repeated eigenvalues");

  SortedEigen eig = simple_eigen(to_complex(s), opts.rank_tol, opts.root_gap,
                                 "shifted square");
  std::vector<Complex> sq(n);
  for (int i = 0; i < n; ++i) sq[i] = std::sqrt(eig.values[i]);
  CMatrix vinv = eig.vectors.partialPivLu().inverse();
  CMatrix bc = to_complex(b), cc = to_complex(c);

  SolutionSet out;
  out.n = n;
  out.expected_count = 1L << n;
  out.method = "shift-square-root";

  for (long mask = 0; mask < (1L << n); ++mask) {
    CMatrix d = CMatrix::Zero(n, n);
    std::vector<int> bits(n);
    for (int i = 0; i < n; ++i) {
      bits[i] = static_cast<int>((mask >> i) & 1);
      d(i, i) = bits[i] ? -sq[i] : sq[i];
    }
    CMatrix x = eig.vectors * d * vinv - bc;
    CMatrix r = x * x + bc * x + x * bc + cc;
    double m = std::max(1.0, max_norm(x));
    double scale = m * m + 2 * max_norm(bc) * m + max_norm(cc);
    double res = max_norm(r) / scale;
    if (res <= opts.residual_tol) {
      Solvent sol;
      sol.x = x;
      sol.subset = bits;
      sol.residual = res;
      out.solutions.push_back(std::move(sol));
    }
  }
  mark_duplicates(out, opts.dedup_tol);
  return out;
}

BinomeStratumSummary binome_stratum_count(int n) {
  if (n < 1) throw parse_error("dimension must be positive");
  BinomeStratumSummary out;
  out.n = n;
  for (int s = 0; s <= n; ++s)
    out.max_dimension = std::max(out.max_dimension, s * (n - s));
  for (int s = 0; s <= n; ++s)
    if (s * (n - s) == out.max_dimension) out.maximal_stratum_count += binomial(n, s);
  return out;
}

RatMatrix binome_family_member(const RatMatrix& t_diag, const std::vector<int>& chosen,
                               const RatMatrix& y) {
  if (!t_diag.is_square()) throw parse_error("T must be square");
  const int n = t_diag.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && t_diag.at(i, j) != 0)
        throw parse_error("exact stratum member needs diagonal T");
  std::vector<bool> in(n, false);
  for (int i : chosen) {
    if (i < 0 || i >= n || in[i]) throw parse_error("bad stratum subset");
    in[i] = true;
  }
  std::vector<int> comp;
  for (int i = 0; i < n; ++i)
    if (!in[i]) comp.push_back(i);
  const int p = static_cast<int>(chosen.size());
  if (y.rows() != p || y.cols() != n - p) throw parse_error("free block shape mismatch");

  RatMatrix z(n, n);
  for (int a = 0; a < p; ++a) {
    z.at(chosen[a], chosen[a]) = -t_diag.at(chosen[a], chosen[a]);
    for (int bcol = 0; bcol < n - p; ++bcol) z.at(chosen[a], comp[bcol]) = y.at(a, bcol);
  }
  return z;
}

CounterexampleReport commuting_counterexample_check(const RatMatrix& b, const RatMatrix& c,
                                                    const Rat& t) {
  if (b.rows() != 2 || b.cols() != 2 || c.rows() != 2 || c.cols() != 2)
    throw parse_error("witness is built for the 2x2 case");
  if (b.at(0, 1) != 0 || b.at(1, 0) != 0 || c.at(0, 1) != 0 || c.at(1, 0) != 0)
    throw parse_error("witness needs diagonal coefficients");
  const Rat b1 = b.at(0, 0), b2 = b.at(1, 1), c1 = c.at(0, 0), c2 = c.at(1, 1);
  if (b1 == b2) throw parse_error("witness needs distinct diagonal entries");
  if (t == 0) throw parse_error("family parameter must be non-zero");

  EquationSpec spec;
  spec.n = 2;
  spec.words = {{EquationSpec::x(), EquationSpec::x()},
                {EquationSpec::c("B"), EquationSpec::x(), EquationSpec::c("B")}};
  spec.constants["B"] = b;
  spec.constant_term = c;
  spec.validate();

  CounterexampleReport rep;
  MatricizedSystem sys = matricize(spec);
  GroebnerBasis gb = buchberger(sys.polys);
  IdealSummary summary = analyze_ideal(gb);
  rep.hilbert_dimension = summary.hilbert_dimension;

  // Diagonal candidates decouple into two scalar quadratics.
  std::vector<std::vector<Complex>> diag_roots(2);
  for (int i = 0; i < 2; ++i) {
    Rat bi = i == 0 ? b1 : b2, ci = i == 0 ? c1 : c2;
    RatUniPoly quad({ci, bi * bi, Rat(1)});
    RootSet rs = aberth_roots(CUniPoly::from_rational(quad));
    diag_roots[i] = rs.roots;
    if (rs.min_separation <= kDedupTol) diag_roots[i].pop_back();
  }
  rep.diagonal_solution_count =
      static_cast<int>(diag_roots[0].size() * diag_roots[1].size());

  // Off-diagonal entries force x11 + x22 = -b1 b2; the difference of the two
  // diagonal equations then pins x11, and x12 stays free.
  Rat p = (b1 * b2 * b2 * (b1 - b2) + c2 - c1) / ((b1 - b2) * (b1 - b2));
  Rat s = -b1 * b2 - p;
  Rat q = (-p * p - b1 * b1 * p - c1) / t;
  rep.family_member = RatMatrix::from_rows({{p, t}, {q, s}});
  RatMatrix residual = rep.family_member * rep.family_member +
                       b * rep.family_member * b + c;
  rep.member_solves_exactly = residual.is_zero();
  rep.member_commutes_with_b = (rep.family_member * b - b * rep.family_member).is_zero();
  return rep;
}

}  // namespace matsolve
