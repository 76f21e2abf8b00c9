#include "matsolve/fixtures.hpp"

#include <sstream>

#include "matsolve/errors.hpp"

namespace matsolve {

namespace {

RatMatrix m2(int a, int b, int c, int d) {
  return RatMatrix::from_rows({{Rat(a), Rat(b)}, {Rat(c), Rat(d)}});
}

using F = EquationSpec;

Fixture make(std::string name, EquationSpec spec, std::string note) {
  Fixture f;
  f.name = std::move(name);
  f.spec = std::move(spec);
  f.note = std::move(note);
  return f;
}

std::string classification(bool finite, long count, int dim) {
  std::ostringstream os;
  if (finite)
    os << "finite, total multiplicity " << count;
  else
    os << "positive-dimensional, Hilbert dimension " << dim;
  return os.str();
}

}  // namespace

std::vector<Fixture> fixture_catalogue() {
  std::vector<Fixture> out;

  {
    // X^2 equals a non-zero nilpotent matrix: any solution would be nilpotent
    // with zero square, so there are none.
    EquationSpec s;
    s.n = 2;
    s.words = {{F::x(), F::x()}};
    s.constant_term = m2(0, -1, 0, 0);
    Fixture f = make("square-of-nilpotent", std::move(s), "no solutions at all");
    f.expected_count = 0;
    out.push_back(std::move(f));
  }
  {
    // Middle coefficient of rank one; a single invariant subspace survives.
    EquationSpec s;
    s.n = 2;
    s.words = {{F::x(), F::c("A"), F::x()}, {F::c("B"), F::x()}};
    s.constants["A"] = m2(0, 1, 0, 1);
    s.constants["B"] = m2(-1, 2, 0, -1);
    s.constant_term = m2(-1, 0, 1, -1);
    Fixture f = make("rank-one-middle", std::move(s), "exactly one simple solution");
    f.expected_count = 1;
    f.known_points = {m2(0, -1, 1, -1)};
    f.point_check = PointCheck::Nonsingular;
    out.push_back(std::move(f));
  }
  {
    // X^2 + X against a target that halves the generic count.
    EquationSpec s;
    s.n = 2;
    s.words = {{F::x(), F::x()}, {F::x()}};
    s.constant_term = m2(0, 0, 2, 0);
    Fixture f = make("two-on-a-ramification-target", std::move(s), "two simple solutions");
    f.expected_count = 2;
    f.known_points = {m2(0, 0, -2, 0), m2(-1, 0, 2, -1)};
    f.point_check = PointCheck::Nonsingular;
    out.push_back(std::move(f));
  }
  {
    // One solution of multiplicity three; its Jacobian is singular.
    EquationSpec s;
    s.n = 2;
    s.words = {{F::x(), F::x()}, {F::c("B"), F::x()}};
    s.constants["B"] = m2(2, 0, 0, -1);
    s.constant_term = m2(1, -1, 0, -2);
    Fixture f = make("triple-point", std::move(s), "unique solution of multiplicity three");
    f.expected_count = 3;
    RatMatrix x0 = RatMatrix::from_rows({{Rat(-1), Rat(1) / 3}, {Rat(0), Rat(2)}});
    f.known_points = {x0};
    f.point_check = PointCheck::Singular;
    f.certified_sole_point = x0;
    out.push_back(std::move(f));
  }
  {
    // Same left shift, diagonal target: four simple solutions.
    EquationSpec s;
    s.n = 2;
    s.words = {{F::x(), F::x()}, {F::c("B"), F::x()}};
    s.constants["B"] = m2(2, 0, 0, -1);
    s.constant_term = m2(-1, 0, 0, -1);
    Fixture f = make("diagonal-target-four", std::move(s), "four simple solutions");
    f.expected_count = 4;
    out.push_back(std::move(f));
  }
  {
    // Upper-triangular target: the off-diagonal entry adds a fifth solution.
    EquationSpec s;
    s.n = 2;
    s.words = {{F::x(), F::x()}, {F::c("B"), F::x()}};
    s.constants["B"] = m2(2, 0, 0, -1);
    s.constant_term = m2(-1, -1, 0, -1);
    Fixture f = make("triangular-target-five", std::move(s), "five simple solutions");
    f.expected_count = 5;
    f.known_points = {RatMatrix::from_rows({{Rat(0), Rat(1) / 3}, {Rat(3), Rat(1)}})};
    f.point_check = PointCheck::Nonsingular;
    out.push_back(std::move(f));
  }
  {
    // Nilpotent non-derogatory structure matrix: the origin absorbs the full
    // count of six.
    EquationSpec s;
    s.n = 2;
    s.words = {{F::x(), F::c("A"), F::x()}, {F::c("B"), F::x()}, {F::x(), F::c("C")}};
    s.constants["A"] = m2(0, 1, 1, 1);
    s.constants["B"] = m2(0, -1, 0, 0);
    s.constants["C"] = m2(0, 1, 0, 0);
    Fixture f = make("origin-of-multiplicity-six", std::move(s),
                     "zero is the only solution, multiplicity six");
    f.expected_count = 6;
    f.known_points = {RatMatrix(2, 2)};
    f.point_check = PointCheck::Singular;
    f.certified_sole_point = RatMatrix(2, 2);
    out.push_back(std::move(f));
  }
  {
    // Generic full equation: the maximal count of six simple solutions.
    EquationSpec s;
    s.n = 2;
    s.words = {{F::x(), F::c("A"), F::x()}, {F::c("B1"), F::x()}, {F::x(), F::c("B2")}};
    s.constants["A"] = m2(1, 0, 0, 1);
    s.constants["B1"] = m2(0, 1, 1, 0);
    s.constants["B2"] = m2(1, 0, 0, 2);
    s.constant_term = m2(1, 1, 0, 1);
    Fixture f = make("generic-six", std::move(s), "six simple solutions");
    f.expected_count = 6;
    out.push_back(std::move(f));
  }
  {
    // X^2 + TX with T generic: two simple points and two disjoint lines.
    EquationSpec s;
    s.n = 2;
    s.words = {{F::x(), F::x()}, {F::c("T"), F::x()}};
    s.constants["T"] = m2(2, 1, -1, 1);
    Fixture f = make("two-lines", std::move(s), "solution curve of dimension one");
    f.finite = false;
    f.expected_dimension = 1;
    f.known_points = {RatMatrix(2, 2), m2(-2, -1, 1, -1)};
    f.point_check = PointCheck::Nonsingular;
    out.push_back(std::move(f));
  }
  {
    // Square roots of the identity: two isolated points plus a surface.
    EquationSpec s;
    s.n = 2;
    s.words = {{F::x(), F::x()}};
    s.constant_term = m2(-1, 0, 0, -1);
    Fixture f = make("square-roots-of-identity", std::move(s),
                     "two simple points and a dimension-two sheet");
    f.finite = false;
    f.expected_dimension = 2;
    f.known_points = {m2(1, 0, 0, 1), m2(-1, 0, 0, -1)};
    f.point_check = PointCheck::Nonsingular;
    out.push_back(std::move(f));
  }
  {
    // X A X with invertible A: a two-dimensional cone through the origin.
    EquationSpec s;
    s.n = 2;
    s.words = {{F::x(), F::c("A"), F::x()}};
    s.constants["A"] = m2(1, 2, -1, 3);
    Fixture f = make("rank-collapse-cone", std::move(s), "cone of dimension two");
    f.finite = false;
    f.expected_dimension = 2;
    f.known_points = {RatMatrix(2, 2)};
    f.point_check = PointCheck::Singular;
    out.push_back(std::move(f));
  }
  for (Fixture& f : out) f.spec.validate();
  return out;
}

FixtureOutcome check_fixture(const Fixture& f, const CountOptions& opts) {
  FixtureOutcome out;
  out.name = f.name;
  out.expected = classification(f.finite, f.expected_count, f.expected_dimension);

  for (size_t i = 0; i < f.known_points.size(); ++i) {
    RatMatrix r = eval_equation(f.spec, f.known_points[i]);
    if (!r.is_zero())
      out.failures.push_back("known point " + std::to_string(i) + " does not solve exactly");
    if (f.point_check != PointCheck::None) {
      JacobianReport jr = jacobian_at(f.spec, f.known_points[i]);
      bool want_singular = f.point_check == PointCheck::Singular;
      if (jr.singular != want_singular)
        out.failures.push_back("known point " + std::to_string(i) +
                               (want_singular ? " should be singular" : " should be simple"));
    }
  }

  CountResult res = count_solutions(f.spec, opts);
  out.actual = classification(res.summary.is_zero_dimensional,
                              res.summary.quotient_dimension.value_or(-1),
                              res.summary.hilbert_dimension);
  if (f.finite) {
    if (!res.summary.is_zero_dimensional)
      out.failures.push_back("expected a finite solution set");
    else if (res.summary.quotient_dimension.value_or(-1) != f.expected_count)
      out.failures.push_back("total multiplicity mismatch");
  } else {
    if (res.summary.is_zero_dimensional)
      out.failures.push_back("expected a positive-dimensional solution set");
    else if (res.summary.hilbert_dimension != f.expected_dimension)
      out.failures.push_back("Hilbert dimension mismatch");
  }

  if (f.certified_sole_point) {
    const RatMatrix& p = *f.certified_sole_point;
    std::vector<Rat> point;
    for (int i = 0; i < p.rows(); ++i)
      for (int j = 0; j < p.cols(); ++j) point.push_back(p.at(i, j));
    int max_power = static_cast<int>(f.expected_count) + 1;
    if (!variety_is_single_point(res.basis, point, max_power))
      out.failures.push_back("sole-point certificate failed");
  }

  out.pass = out.failures.empty();
  return out;
}

}  // namespace matsolve
