#pragma once

#include "matsolve/syscount.hpp"

namespace matsolve {

// What the exact Jacobian should say at each listed known point.
enum class PointCheck { None, Nonsingular, Singular };

// A small equation with a fully classified solution set: either a finite
// total multiplicity or a positive Hilbert dimension, plus optional exact
// solutions to substitute and certificates to establish.
struct Fixture {
  std::string name;
  EquationSpec spec;
  bool finite = true;
  long expected_count = 0;     // total multiplicity when finite
  int expected_dimension = 0;  // Hilbert dimension otherwise
  std::vector<RatMatrix> known_points;
  PointCheck point_check = PointCheck::None;
  // When set, the variety is certified to be exactly this point.
  std::optional<RatMatrix> certified_sole_point;
  std::string note;
};

// The 2x2 catalogue: one instance per finite count 0..6 (two for 6) plus the
// dimension-1 and dimension-2 infinite families.
std::vector<Fixture> fixture_catalogue();

struct FixtureOutcome {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
  std::vector<std::string> failures;
};

FixtureOutcome check_fixture(const Fixture& f, const CountOptions& opts = {});

}  // namespace matsolve
