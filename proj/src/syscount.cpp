#include "matsolve/syscount.hpp"

#include <algorithm>
#include <cmath>

namespace matsolve {

int EquationSpec::x_degree(const Word& w) const {
  int d = 0;
  for (const Factor& f : w)
    if (f.is_x) ++d;
  return d;
}

int EquationSpec::max_x_degree() const {
  int d = 0;
  for (const Word& w : words) d = std::max(d, x_degree(w));
  return d;
}

void EquationSpec::validate() const {
  if (n < 1) throw parse_error("equation needs n >= 1");
  if (words.empty() && !constant_term) throw parse_error("equation has no terms");
  for (const Word& w : words) {
    if (w.empty()) throw parse_error("empty word");
    if (x_degree(w) > 4) throw cap_exceeded("word X-degree above 4");
    for (const Factor& f : w) {
      if (f.is_x) continue;
      auto it = constants.find(f.name);
      if (it == constants.end()) throw parse_error("unknown constant '" + f.name + "'");
      if (it->second.rows() != n || it->second.cols() != n)
        throw parse_error("constant '" + f.name + "' is not n x n");
    }
  }
  if (constant_term && (constant_term->rows() != n || constant_term->cols() != n))
    throw parse_error("constant term is not n x n");
}

namespace {

std::vector<std::string> unknown_names(int n) {
  std::vector<std::string> vars;
  vars.reserve(n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) vars.push_back("x" + std::to_string(i) + std::to_string(j));
  return vars;
}

using PolyMat = std::vector<std::vector<MultiPoly>>;

PolyMat factor_matrix(const EquationSpec& spec, const EquationSpec::Factor& f,
                      const RingPtr& ring) {
  const int n = spec.n;
  PolyMat m(n, std::vector<MultiPoly>(n, MultiPoly(ring)));
  if (f.is_x) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = MultiPoly::variable(ring, i * n + j);
  } else {
    const RatMatrix& c = spec.constants.at(f.name);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = MultiPoly::constant(ring, c.at(i, j));
  }
  return m;
}

PolyMat mat_mul(const PolyMat& a, const PolyMat& b, const RingPtr& ring) {
  const int n = static_cast<int>(a.size());
  PolyMat r(n, std::vector<MultiPoly>(n, MultiPoly(ring)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MultiPoly acc(ring);
      for (int k = 0; k < n; ++k) acc = acc + a[i][k] * b[k][j];
      r[i][j] = std::move(acc);
    }
  return r;
}

}  // namespace

MatricizedSystem matricize(const EquationSpec& spec, MonomialOrder order) {
  spec.validate();
  if (spec.n > 3) throw cap_exceeded("matricize supports n <= 3");
  const int n = spec.n;
  RingPtr ring = make_ring(unknown_names(n), order);

  PolyMat sum(n, std::vector<MultiPoly>(n, MultiPoly(ring)));
  for (const EquationSpec::Word& w : spec.words) {
    PolyMat acc = factor_matrix(spec, w.front(), ring);
    for (size_t f = 1; f < w.size(); ++f)
      acc = mat_mul(acc, factor_matrix(spec, w[f], ring), ring);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sum[i][j] = sum[i][j] + acc[i][j];
  }
  if (spec.constant_term) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        sum[i][j] = sum[i][j] + MultiPoly::constant(ring, spec.constant_term->at(i, j));
  }

  MatricizedSystem out;
  out.ring = ring;
  out.n = n;
  out.polys.reserve(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.polys.push_back(std::move(sum[i][j]));
  return out;
}

RatMatrix eval_equation(const EquationSpec& spec, const RatMatrix& x) {
  spec.validate();
  const int n = spec.n;
  RatMatrix sum(n, n);
  for (const EquationSpec::Word& w : spec.words) {
    RatMatrix acc = w.front().is_x ? x : spec.constants.at(w.front().name);
    for (size_t f = 1; f < w.size(); ++f)
      acc = acc * (w[f].is_x ? x : spec.constants.at(w[f].name));
    sum = sum + acc;
  }
  if (spec.constant_term) sum = sum + *spec.constant_term;
  return sum;
}

CMatrix eval_equation(const EquationSpec& spec, const CMatrix& x) {
  spec.validate();
  const int n = spec.n;
  CMatrix sum = CMatrix::Zero(n, n);
  for (const EquationSpec::Word& w : spec.words) {
    CMatrix acc =
        w.front().is_x ? x : to_complex(spec.constants.at(w.front().name));
    for (size_t f = 1; f < w.size(); ++f)
      acc = acc * (w[f].is_x ? x : to_complex(spec.constants.at(w[f].name)));
    sum += acc;
  }
  if (spec.constant_term) sum += to_complex(*spec.constant_term);
  return sum;
}

double equation_residual(const EquationSpec& spec, const CMatrix& x) {
  double xb = std::max(1.0, max_norm(x));
  double scale = 0;
  for (const EquationSpec::Word& w : spec.words) {
    double t = 1;
    for (const EquationSpec::Factor& f : w)
      t *= f.is_x ? xb : std::max(1.0, max_norm(to_complex(spec.constants.at(f.name))));
    scale += t;
  }
  if (spec.constant_term) scale += max_norm(to_complex(*spec.constant_term));
  if (scale <= 0) scale = 1;
  return max_norm(eval_equation(spec, x)) / scale;
}

JacobianReport jacobian_at(const EquationSpec& spec, const RatMatrix& x0) {
  MatricizedSystem sys = matricize(spec);
  const int n = sys.n;
  if (x0.rows() != n || x0.cols() != n) throw parse_error("evaluation point is not n x n");
  std::vector<Rat> point;
  point.reserve(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) point.push_back(x0.at(i, j));

  JacobianReport rep;
  rep.jacobian = RatMatrix(n * n, n * n);
  for (int row = 0; row < n * n; ++row)
    for (int col = 0; col < n * n; ++col)
      rep.jacobian.at(row, col) = sys.polys[row].differentiate(col).eval(point);
  rep.det = rep.jacobian.det();
  rep.singular = rep.det == 0;
  return rep;
}

NumericJacobianReport jacobian_at(const EquationSpec& spec, const CMatrix& x0, double tol) {
  MatricizedSystem sys = matricize(spec);
  const int n = sys.n;
  std::vector<Complex> point;
  point.reserve(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) point.push_back(x0(i, j));

  NumericJacobianReport rep;
  rep.jacobian = CMatrix(n * n, n * n);
  for (int row = 0; row < n * n; ++row)
    for (int col = 0; col < n * n; ++col)
      rep.jacobian(row, col) = sys.polys[row].differentiate(col).eval(point);
  rep.det = Eigen::PartialPivLU<CMatrix>(rep.jacobian).determinant();
  double scale = std::max(1.0, max_norm(rep.jacobian));
  double scale_pow = std::pow(scale, n * n);
  rep.singular = std::abs(rep.det) <= tol * scale_pow;
  return rep;
}

namespace {

bool supported_only_in(const MultiPoly& p, int var) {
  for (const Term& t : p.terms())
    for (size_t v = 0; v < t.mono.size(); ++v)
      if (t.mono[v] > 0 && static_cast<int>(v) != var) return false;
  return true;
}

// Case-1 triangular shape relative to the smallest variable: one univariate
// generator in it, and a generator "x_v - tail(smallest)" for every other
// variable.
std::optional<SolutionSet> try_shape_solve(const EquationSpec& spec, const GroebnerBasis& gb,
                                           const CountOptions& opts) {
  const int nv = gb.ring->nvars();
  const int last = nv - 1;

  const MultiPoly* univ = nullptr;
  std::vector<const MultiPoly*> expr(nv, nullptr);
  for (const MultiPoly& g : gb.gens) {
    const Monomial& lm = g.leading_monomial();
    if (supported_only_in(g, last)) {
      if (univ) return std::nullopt;
      univ = &g;
      continue;
    }
    int lead_var = -1;
    for (int v = 0; v < nv; ++v)
      if (lm[v] > 0) {
        if (lead_var >= 0 || lm[v] != 1) return std::nullopt;
        lead_var = v;
      }
    if (lead_var < 0 || expr[lead_var]) return std::nullopt;
    MultiPoly tail = g - MultiPoly::variable(gb.ring, lead_var);
    if (!supported_only_in(tail, last)) return std::nullopt;
    expr[lead_var] = &g;
  }
  if (!univ) return std::nullopt;
  for (int v = 0; v < last; ++v)
    if (!expr[v]) return std::nullopt;

  // univariate coefficients ascending
  std::vector<Complex> uc(univ->terms().front().mono[last] + 1, Complex(0));
  for (const Term& t : univ->terms()) uc[t.mono[last]] = rat_to_double(t.coeff);
  RootSet rs = aberth_roots(CUniPoly(std::move(uc)), opts.aberth);

  const int n = spec.n;
  SolutionSet sols;
  sols.n = n;
  sols.method = "groebner-lex";
  sols.expected_count = static_cast<long>(rs.roots.size());
  for (size_t r = 0; r < rs.roots.size(); ++r) {
    std::vector<Complex> point(nv, Complex(0));
    point[last] = rs.roots[r];
    for (int v = 0; v < last; ++v) {
      // generator is x_v + tail; x_v = -tail(root)
      MultiPoly tail = *expr[v] - MultiPoly::variable(gb.ring, v);
      point[v] = -tail.eval(point);
    }
    Solvent s;
    s.x = CMatrix(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s.x(i, j) = point[i * n + j];
    s.subset = {static_cast<int>(r)};
    s.residual = equation_residual(spec, s.x);
    if (s.residual > opts.residual_tol) continue;
    sols.solutions.push_back(std::move(s));
  }
  for (size_t a = 0; a < sols.solutions.size() && sols.all_simple; ++a)
    for (size_t b = a + 1; b < sols.solutions.size(); ++b)
      if (max_norm(sols.solutions[a].x - sols.solutions[b].x) <= kDedupTol) {
        sols.all_simple = false;
        break;
      }
  return sols;
}

}  // namespace

CountResult count_solutions(const EquationSpec& spec, const CountOptions& opts) {
  MatricizedSystem sys = matricize(spec, opts.order);
  CountResult res;
  res.basis = buchberger(sys.polys, opts.groebner);
  res.summary = analyze_ideal(res.basis);
  res.method = "groebner";
  if (res.summary.is_zero_dimensional && opts.want_solutions) {
    GroebnerBasis lex_basis = res.basis;
    if (opts.order != MonomialOrder::Lex) {
      std::vector<MultiPoly> lex_polys;
      for (const MultiPoly& p : sys.polys) lex_polys.push_back(p.with_order(MonomialOrder::Lex));
      lex_basis = buchberger(lex_polys, opts.groebner);
    }
    res.solutions = try_shape_solve(spec, lex_basis, opts);
    if (res.solutions) res.method = "groebner+lex-shape";
  }
  return res;
}

InfinityReport homogeneous_infinity_check(const EquationSpec& spec, const CountOptions& opts) {
  spec.validate();
  for (const EquationSpec::Word& w : spec.words)
    if (spec.x_degree(w) != 2)
      throw parse_error("homogeneous check expects purely quadratic words");
  if (spec.constant_term && !spec.constant_term->is_zero())
    throw parse_error("homogeneous check expects no constant term");

  CountOptions local = opts;
  local.want_solutions = false;
  CountResult cr = count_solutions(spec, local);

  InfinityReport rep;
  rep.summary = cr.summary;
  rep.zero_dimensional = cr.summary.is_zero_dimensional;
  if (rep.zero_dimensional) {
    rep.multiplicity_at_zero = cr.summary.quotient_dimension.value_or(0);
    rep.only_zero =
        variety_is_origin_only(cr.basis, static_cast<int>(rep.multiplicity_at_zero));
  } else {
    rep.cone_dimension = cr.summary.hilbert_dimension;
  }
  return rep;
}

EquationSpec quadratic_part(const EquationSpec& spec) {
  EquationSpec out;
  out.n = spec.n;
  for (const EquationSpec::Word& w : spec.words)
    if (spec.x_degree(w) == 2) out.words.push_back(w);
  for (const EquationSpec::Word& w : out.words)
    for (const EquationSpec::Factor& f : w)
      if (!f.is_x) out.constants[f.name] = spec.constants.at(f.name);
  return out;
}

}  // namespace matsolve
