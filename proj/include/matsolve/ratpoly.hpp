#pragma once

#include <string>
#include <vector>

#include "matsolve/rat.hpp"

namespace matsolve {

struct PolyDivMod;

// Univariate polynomial over the rationals, coefficients ascending by degree.
// The zero polynomial is the empty coefficient list; invariant: the last
// stored coefficient is non-zero.
class RatUniPoly {
 public:
  RatUniPoly() = default;
  explicit RatUniPoly(std::vector<Rat> ascending) : c_(std::move(ascending)) { trim(); }

  static RatUniPoly constant(const Rat& v);
  // x - a
  static RatUniPoly linear_root(const Rat& a);
  static RatUniPoly monomial(int degree, const Rat& coeff);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }
  Rat leading() const;

  Rat eval(const Rat& x) const;
  Complex eval(const Complex& x) const;

  RatUniPoly derivative() const;

  RatUniPoly operator+(const RatUniPoly& o) const;
  RatUniPoly operator-(const RatUniPoly& o) const;
  RatUniPoly operator*(const RatUniPoly& o) const;
  RatUniPoly operator*(const Rat& s) const;
  RatUniPoly operator-() const { return *this * Rat(-1); }
  bool operator==(const RatUniPoly& o) const { return c_ == o.c_; }

  // Exact Euclidean division; throws on zero divisor.
  PolyDivMod divmod(const RatUniPoly& d) const;

  // Exact synthetic division by (x - a); remainder discarded (use eval for it).
  RatUniPoly deflate_root(const Rat& a) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

struct PolyDivMod {
  RatUniPoly quot, rem;
};

// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
RatUniPoly poly_gcd(RatUniPoly a, RatUniPoly b);

// Resultant as the determinant of the Sylvester matrix.
// Degenerate degrees follow the usual conventions: res(p, c) = c^deg(p) for a
// non-zero constant c, res of two non-zero constants = 1. Throws ZeroPolynomial
// if either argument is the zero polynomial.
Rat resultant(const RatUniPoly& p, const RatUniPoly& q);

// disc(p) = res(p, p') / lc(p), up to the conventional sign.
Rat discriminant(const RatUniPoly& p);

// Unique interpolating polynomial of degree < nodes.size() through
// (nodes[i], values[i]); nodes must be pairwise distinct.
RatUniPoly interpolate(const std::vector<Rat>& nodes, const std::vector<Rat>& values);

// Determinant of a square matrix with polynomial entries, by cofactor
// expansion along the first row. Intended for small sizes.
RatUniPoly poly_matrix_det(const std::vector<std::vector<RatUniPoly>>& m);

}  // namespace matsolve
