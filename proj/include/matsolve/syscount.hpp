#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matsolve/groebner.hpp"
#include "matsolve/matpoly.hpp"

namespace matsolve {

// A matrix equation as a sum of words. Each word is a left-to-right product
// of factors, each factor either the unknown X or a named constant matrix.
// An optional constant term F is added to the sum; the equation is
// sum(words) + F = 0.
struct EquationSpec {
  struct Factor {
    bool is_x = false;
    std::string name;  // constant key when is_x is false
  };
  using Word = std::vector<Factor>;

  int n = 0;
  std::vector<Word> words;
  std::map<std::string, RatMatrix> constants;
  std::optional<RatMatrix> constant_term;

  static Factor x() { return Factor{true, ""}; }
  static Factor c(std::string name) { return Factor{false, std::move(name)}; }

  int x_degree(const Word& w) const;
  int max_x_degree() const;
  void validate() const;  // throws Parse / CapExceeded (X-degree above 4)
};

struct MatricizedSystem {
  RingPtr ring;                  // variables x11..xnn, row-major
  std::vector<MultiPoly> polys;  // f_11..f_nn, row-major
  int n = 0;
};

// Entry-wise expansion of the equation into n^2 polynomials in the n^2
// unknowns; n <= 3.
MatricizedSystem matricize(const EquationSpec& spec,
                           MonomialOrder order = MonomialOrder::Grevlex);

RatMatrix eval_equation(const EquationSpec& spec, const RatMatrix& x);
CMatrix eval_equation(const EquationSpec& spec, const CMatrix& x);

// Relative residual of a numeric candidate solution.
double equation_residual(const EquationSpec& spec, const CMatrix& x);

struct JacobianReport {
  RatMatrix jacobian;  // (n^2) x (n^2); row f_ij, column x_kl, both row-major
  Rat det;
  bool singular = false;
};

// Exact Jacobian of the matricized system at a rational point. A singular
// Jacobian marks the solution as multiple or non-isolated.
JacobianReport jacobian_at(const EquationSpec& spec, const RatMatrix& x0);

struct NumericJacobianReport {
  CMatrix jacobian;
  Complex det;
  bool singular = false;
};

NumericJacobianReport jacobian_at(const EquationSpec& spec, const CMatrix& x0,
                                  double tol = kRankTol);

struct CountOptions {
  MonomialOrder order = MonomialOrder::Grevlex;
  bool want_solutions = false;  // lex triangular extraction + numeric roots
  GroebnerOptions groebner;
  AberthOptions aberth;
  double residual_tol = kSolventTol;
};

struct CountResult {
  IdealSummary summary;
  GroebnerBasis basis;
  std::optional<SolutionSet> solutions;  // present when a lex shape was effective
  std::string method = "groebner";
};

// Solution count with multiplicity (quotient dimension) in the
// zero-dimensional case; Hilbert dimension otherwise.
CountResult count_solutions(const EquationSpec& spec, const CountOptions& opts = {});

struct InfinityReport {
  IdealSummary summary;
  bool zero_dimensional = false;
  bool only_zero = false;         // variety certified to be exactly {0}
  long multiplicity_at_zero = 0;  // quotient dimension when finite
  int cone_dimension = 0;         // Hilbert dimension when positive-dimensional
};

// Classifies the solutions of a purely quadratic homogeneous equation; these
// are the directions at infinity of the affine equations sharing this
// quadratic part.
InfinityReport homogeneous_infinity_check(const EquationSpec& spec,
                                          const CountOptions& opts = {});

// The degree-2 words of a spec, constant term dropped.
EquationSpec quadratic_part(const EquationSpec& spec);

}  // namespace matsolve
