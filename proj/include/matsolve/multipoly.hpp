#pragma once

#include <memory>
#include <string>
#include <vector>

#include "matsolve/rat.hpp"

namespace matsolve {

enum class MonomialOrder { Grevlex, Lex };

std::string order_name(MonomialOrder o);
MonomialOrder order_from_name(const std::string& name);

// Exponent vector; length equals the ring's variable count.
using Monomial = std::vector<unsigned>;

int total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);           // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& b, const Monomial& a);      // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

// Returns <0, 0, >0 like a three-way comparison; variable 0 is the largest.
int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order);

struct PolyRing {
  std::vector<std::string> vars;
  MonomialOrder order = MonomialOrder::Grevlex;

  int nvars() const { return static_cast<int>(vars.size()); }
  int var_index(const std::string& name) const;  // -1 when absent
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::Grevlex);

struct Term {
  Monomial mono;
  Rat coeff;
};

// Sparse multivariate polynomial; terms sorted strictly descending in the
// ring's monomial order, all coefficients non-zero.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
  MultiPoly(RingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  static MultiPoly constant(const RingPtr& ring, const Rat& v);
  static MultiPoly variable(const RingPtr& ring, int var);
  static MultiPoly term(const RingPtr& ring, Monomial m, const Rat& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const;
  int total_deg() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rat& s) const;
  MultiPoly operator-() const { return *this * Rat(-1); }
  bool operator==(const MultiPoly& o) const;

  MultiPoly mul_term(const Monomial& m, const Rat& c) const;

  MultiPoly differentiate(int var) const;

  Rat eval(const std::vector<Rat>& point) const;
  Complex eval(const std::vector<Complex>& point) const;

  // Scales so that coefficients are coprime integers and the leading
  // coefficient is positive. No-op on zero.
  MultiPoly primitive() const;
  MultiPoly monic() const;

  // Re-sorts the same terms under a different order (same variables).
  MultiPoly with_order(MonomialOrder order) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Accepts sums of terms over the ring's variables with ^, *, +, -, and
// integer or p/q rational literals, e.g. "x^2*y - 3/2*x + 1".
MultiPoly parse_poly(const RingPtr& ring, const std::string& text);

}  // namespace matsolve
