#pragma once

#include <optional>
#include <vector>

#include "matsolve/multipoly.hpp"

namespace matsolve {

struct GroebnerOptions {
  long pair_budget = 200000;  // S-polynomial reductions before BudgetExceeded
};

// Reduced basis: generators monic, pairwise tail-reduced, sorted by leading
// monomial ascending in the ring's order. Unique for a given ideal and order.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<MultiPoly> gens;

  bool contains_one() const;
};

// Remainder of the full multivariate division of p by gens; no term of the
// result is divisible by any generator's leading monomial.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& gens);

// Buchberger with the coprime and chain criteria, normal selection strategy.
GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const GroebnerOptions& opts = {});

struct IdealSummary {
  bool is_zero_dimensional = false;
  // Total solution count with multiplicity (dim of the quotient algebra);
  // present only in the zero-dimensional case.
  std::optional<long> quotient_dimension;
  int hilbert_dimension = 0;
  int basis_size = 0;
  MonomialOrder order = MonomialOrder::Grevlex;
};

IdealSummary analyze_ideal(const GroebnerBasis& gb);

// Monomials outside the leading-term ideal; requires zero-dimensionality.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

// True when some power x_v^m with m <= max_power lies in the ideal for every
// variable v; certifies that the affine variety is exactly the origin.
bool variety_is_origin_only(const GroebnerBasis& gb, int max_power);

// Same certificate for an arbitrary point: (x_v - p_v)^m in the ideal.
bool variety_is_single_point(const GroebnerBasis& gb, const std::vector<Rat>& point,
                             int max_power);

}  // namespace matsolve
