#pragma once

#include <map>

#include "matsolve/riccati.hpp"
#include "matsolve/structured.hpp"
#include "matsolve/syscount.hpp"

namespace matsolve {

enum class Shape { Unilateral, Riccati, Plex1, Plex2, Degmax, Commuting, Symmetric, Binome };

std::string shape_name(Shape s);
Shape shape_from_name(const std::string& name);  // throws Parse

// A generated problem instance. coeffs carries the ordered list for the
// unilateral (A_0..A_k) and commuting (B_0..B_{k-1}) shapes; named carries
// the letter-keyed matrices for the rest.
struct Instance {
  Shape shape = Shape::Riccati;
  int n = 0;
  int k = 2;
  unsigned long long seed = 0;
  std::vector<RatMatrix> coeffs;
  std::map<std::string, RatMatrix> named;
};

// Seeded integer entries in [-2, 2]; byte-identical across reruns. The
// commuting shape builds B_j as a random polynomial in B_0, so the family
// commutes by construction. k is the degree for the unilateral and commuting
// shapes and is pinned to 2 for the quadratic ones. Unilateral draws are
// retried within the seed's stream until they solve to the full simple
// solvent family; Riccati draws only guarantee an invertible A, so callers
// wanting generic Riccati instances must retry degenerate seeds themselves.
Instance random_instance(Shape shape, int n, int k, unsigned long long seed);

EquationSpec to_equation_spec(const Instance& inst);

// Shape-specific views; each throws Parse when the shape does not match.
RatMatPolynomial to_unilateral(const Instance& inst);
RiccatiProblem to_riccati(const Instance& inst);
CommutingFamily to_commuting(const Instance& inst);

}  // namespace matsolve
