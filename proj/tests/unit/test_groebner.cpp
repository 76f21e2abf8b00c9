#include <doctest.h>

#include <matsolve/errors.hpp>
#include <matsolve/groebner.hpp>

using namespace matsolve;

namespace {

std::vector<MultiPoly> parse_all(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<MultiPoly> out;
  for (const auto& t : texts) out.push_back(parse_poly(ring, t));
  return out;
}

}  // namespace

TEST_CASE("normal form reduces every divisible leading term") {
  RingPtr ring = make_ring({"x", "y"});
  auto gens = parse_all(ring, {"x^2 - 1", "y - 2"});
  MultiPoly p = parse_poly(ring, "x^3*y + x*y^2");
  MultiPoly nf = normal_form(p, gens);
  // x -> sqrt(1) symbolically: x^3 y + x y^2 == x*y*(x^2) + x*y^2 -> 2x + 4x = 6x.
  CHECK(nf == parse_poly(ring, "6*x"));
  // No term of the remainder is divisible by a generator's leading monomial.
  for (const auto& t : nf.terms()) {
    CHECK_FALSE(divides(gens[0].leading_monomial(), t.mono));
    CHECK_FALSE(divides(gens[1].leading_monomial(), t.mono));
  }
  CHECK(normal_form(MultiPoly(ring), gens).is_zero());
}

TEST_CASE("monomial ideal quotient dimension counts standard monomials") {
  RingPtr ring = make_ring({"x", "y"});
  GroebnerBasis gb = buchberger(parse_all(ring, {"x^2", "y^3"}));
  IdealSummary s = analyze_ideal(gb);
  CHECK(s.is_zero_dimensional);
  REQUIRE(s.quotient_dimension.has_value());
  CHECK(*s.quotient_dimension == 6);
  auto std_monos = standard_monomials(gb);
  CHECK(std_monos.size() == 6);
  CHECK(variety_is_origin_only(gb, 3));
}

TEST_CASE("the two-curve intersection has total multiplicity 25") {
  RingPtr ring = make_ring({"x", "y"});
  GroebnerBasis gb = buchberger(parse_all(ring, {"y^2 - x^5", "x^2 - y^5"}));
  IdealSummary s = analyze_ideal(gb);
  CHECK(s.is_zero_dimensional);
  REQUIRE(s.quotient_dimension.has_value());
  CHECK(*s.quotient_dimension == 25);
  // Not a single point: the origin has multiplicity 4, the rest sit on the
  // unit-circle-like subsystem.
  CHECK_FALSE(variety_is_origin_only(gb, 30));
}

TEST_CASE("reduced basis is invariant under generator recombination") {
  RingPtr ring = make_ring({"x", "y"});
  auto gens = parse_all(ring, {"x^2 + y - 1", "x*y - 2"});
  GroebnerBasis g1 = buchberger(gens);

  // Unimodular recombination: same ideal, different presentation.
  MultiPoly x = MultiPoly::variable(ring, 0);
  std::vector<MultiPoly> mixed{gens[1], gens[0] + x * gens[1]};
  GroebnerBasis g2 = buchberger(mixed);

  REQUIRE(g1.gens.size() == g2.gens.size());
  for (size_t i = 0; i < g1.gens.size(); ++i) CHECK(g1.gens[i] == g2.gens[i]);
  CHECK(*analyze_ideal(g1).quotient_dimension == *analyze_ideal(g2).quotient_dimension);
}

TEST_CASE("basis generators are monic and pairwise reduced") {
  RingPtr ring = make_ring({"x", "y"});
  GroebnerBasis gb = buchberger(parse_all(ring, {"2*x^2 + 3*y - 1", "5*x*y - 7"}));
  for (size_t i = 0; i < gb.gens.size(); ++i) {
    CHECK(gb.gens[i].leading_term().coeff == 1);
    for (const auto& t : gb.gens[i].terms())
      for (size_t j = 0; j < gb.gens.size(); ++j)
        if (i != j) CHECK_FALSE(divides(gb.gens[j].leading_monomial(), t.mono));
  }
}

TEST_CASE("a linear system reduces to the single solution point") {
  RingPtr ring = make_ring({"x", "y"});
  GroebnerBasis gb = buchberger(parse_all(ring, {"x + y - 3", "x - y - 1"}));
  IdealSummary s = analyze_ideal(gb);
  CHECK(s.is_zero_dimensional);
  CHECK(*s.quotient_dimension == 1);
  CHECK(variety_is_single_point(gb, {Rat(2), Rat(1)}, 1));
  CHECK_FALSE(variety_is_single_point(gb, {Rat(0), Rat(0)}, 3));
}

TEST_CASE("contradictory generators collapse to the unit ideal") {
  RingPtr ring = make_ring({"x"});
  GroebnerBasis gb = buchberger(parse_all(ring, {"x - 1", "x + 1"}));
  CHECK(gb.contains_one());
  IdealSummary s = analyze_ideal(gb);
  CHECK(s.is_zero_dimensional);
  CHECK(*s.quotient_dimension == 0);
}

TEST_CASE("positive-dimensional ideals report the Hilbert dimension") {
  RingPtr ring = make_ring({"x", "y", "z"});
  // One hypersurface in 3-space: dimension 2.
  GroebnerBasis surface = buchberger(parse_all(ring, {"x*y - z^2"}));
  IdealSummary s1 = analyze_ideal(surface);
  CHECK_FALSE(s1.is_zero_dimensional);
  CHECK(s1.hilbert_dimension == 2);

  // A coordinate line: x = y = 0 leaves z free.
  GroebnerBasis line = buchberger(parse_all(ring, {"x", "y"}));
  CHECK(analyze_ideal(line).hilbert_dimension == 1);

  RingPtr r2 = make_ring({"x", "y"});
  CHECK(analyze_ideal(buchberger(parse_all(r2, {"x*y"}))).hilbert_dimension == 1);
}

TEST_CASE("standard monomials require a zero-dimensional ideal") {
  RingPtr ring = make_ring({"x", "y"});
  GroebnerBasis gb = buchberger(parse_all(ring, {"x*y"}));
  CHECK_THROWS_AS(standard_monomials(gb), Error);
}

TEST_CASE("quotient dimension is independent of the monomial order") {
  for (MonomialOrder order : {MonomialOrder::Grevlex, MonomialOrder::Lex}) {
    RingPtr ring = make_ring({"x", "y"}, order);
    GroebnerBasis gb = buchberger(parse_all(ring, {"x^2 + y^2 - 1", "x - y"}));
    IdealSummary s = analyze_ideal(gb);
    CHECK(s.is_zero_dimensional);
    CHECK(*s.quotient_dimension == 2);
  }
}

TEST_CASE("an exhausted pair budget raises the budget error") {
  // Coprime leading monomials never consume budget, so the generators here
  // are chosen to share the variable x: the first reduction yields y^3 and
  // the follow-up pair pushes the count past a budget of one.
  RingPtr ring = make_ring({"x", "y"});
  GroebnerOptions opts;
  opts.pair_budget = 1;
  try {
    buchberger(parse_all(ring, {"x^2 + y^2", "x*y + y^2"}), opts);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}
