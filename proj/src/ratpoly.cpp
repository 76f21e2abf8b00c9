#include "matsolve/ratpoly.hpp"

#include <sstream>

namespace matsolve {

void RatUniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatUniPoly RatUniPoly::constant(const Rat& v) {
  RatUniPoly p;
  if (v != 0) p.c_ = {v};
  return p;
}

RatUniPoly RatUniPoly::linear_root(const Rat& a) { return RatUniPoly({-a, Rat(1)}); }

RatUniPoly RatUniPoly::monomial(int degree, const Rat& coeff) {
  RatUniPoly p;
  if (coeff != 0) {
    p.c_.assign(degree + 1, Rat(0));
    p.c_.back() = coeff;
  }
  return p;
}

Rat RatUniPoly::leading() const {
  if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
  return c_.back();
}

Rat RatUniPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

Complex RatUniPoly::eval(const Complex& x) const {
  Complex acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + rat_to_double(c_[i]);
  return acc;
}

RatUniPoly RatUniPoly::derivative() const {
  if (degree() < 1) return RatUniPoly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return RatUniPoly(std::move(d));
}

RatUniPoly RatUniPoly::operator+(const RatUniPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return RatUniPoly(std::move(r));
}

RatUniPoly RatUniPoly::operator-(const RatUniPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return RatUniPoly(std::move(r));
}

RatUniPoly RatUniPoly::operator*(const RatUniPoly& o) const {
  if (is_zero() || o.is_zero()) return RatUniPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return RatUniPoly(std::move(r));
}

RatUniPoly RatUniPoly::operator*(const Rat& s) const {
  if (s == 0) return RatUniPoly();
  std::vector<Rat> r(c_);
  for (Rat& v : r) v *= s;
  return RatUniPoly(std::move(r));
}

PolyDivMod RatUniPoly::divmod(const RatUniPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
  RatUniPoly rem = *this;
  std::vector<Rat> quot(std::max(0, degree() - d.degree() + 1), Rat(0));
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    int shift = rem.degree() - d.degree();
    Rat f = rem.leading() / d.leading();
    quot[shift] = f;
    rem = rem - d * RatUniPoly::monomial(shift, f);
  }
  return {RatUniPoly(std::move(quot)), rem};
}

RatUniPoly RatUniPoly::deflate_root(const Rat& a) const {
  if (degree() < 1) return RatUniPoly();
  std::vector<Rat> q(c_.size() - 1, Rat(0));
  Rat carry = 0;
  for (int i = degree(); i >= 1; --i) {
    carry = c_[i] + carry * a;
    q[i - 1] = carry;
  }
  return RatUniPoly(std::move(q));
}

std::string RatUniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    Rat v = c_[i];
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    first = false;
    Rat a = abs(v);
    if (a != 1 || i == 0) os << rat_to_string(a);
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RatUniPoly poly_gcd(RatUniPoly a, RatUniPoly b) {
  while (!b.is_zero()) {
    RatUniPoly r = a.divmod(b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a * (1 / a.leading());
  return a;
}

Rat resultant(const RatUniPoly& p, const RatUniPoly& q) {
  if (p.is_zero() || q.is_zero())
    throw Error(ErrorKind::ZeroPolynomial, "resultant of zero polynomial");
  const int m = p.degree(), n = q.degree();
  if (m == 0 && n == 0) return 1;
  if (n == 0) {
    Rat acc = 1;
    for (int i = 0; i < m; ++i) acc *= q.coeff(0);
    return acc;
  }
  if (m == 0) {
    Rat acc = 1;
    for (int i = 0; i < n; ++i) acc *= p.coeff(0);
    return acc;
  }
  RatMatrix s(m + n, m + n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s.at(i, i + j) = p.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s.at(n + i, i + j) = q.coeff(n - j);
  return s.det();
}

Rat discriminant(const RatUniPoly& p) {
  if (p.degree() < 1) throw Error(ErrorKind::ZeroPolynomial, "discriminant needs degree >= 1");
  if (p.degree() == 1) return 1;
  Rat r = resultant(p, p.derivative()) / p.leading();
  // sign (-1)^(d(d-1)/2)
  int d = p.degree();
  if (((d * (d - 1)) / 2) % 2 != 0) r = -r;
  return r;
}

RatUniPoly interpolate(const std::vector<Rat>& nodes, const std::vector<Rat>& values) {
  const size_t m = nodes.size();
  if (m == 0 || values.size() != m) throw parse_error("interpolation input size mismatch");
  // Full node product, then per-node synthetic division: O(m^2) exact.
  RatUniPoly master = RatUniPoly::constant(Rat(1));
  for (const Rat& x : nodes) master = master * RatUniPoly::linear_root(x);
  RatUniPoly acc;
  for (size_t j = 0; j < m; ++j) {
    RatUniPoly basis = master.deflate_root(nodes[j]);
    Rat denom = basis.eval(nodes[j]);
    if (denom == 0) throw parse_error("repeated interpolation node");
    acc = acc + basis * (values[j] / denom);
  }
  return acc;
}

RatUniPoly poly_matrix_det(const std::vector<std::vector<RatUniPoly>>& m) {
  const size_t n = m.size();
  if (n == 0) return RatUniPoly::constant(Rat(1));
  if (n == 1) return m[0][0];
  RatUniPoly acc;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<RatUniPoly>> minor;
    minor.reserve(n - 1);
    for (size_t i = 1; i < n; ++i) {
      std::vector<RatUniPoly> row;
      row.reserve(n - 1);
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    RatUniPoly term = m[0][j] * poly_matrix_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace matsolve
