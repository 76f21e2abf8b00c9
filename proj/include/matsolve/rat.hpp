#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "matsolve/errors.hpp"

namespace matsolve {

// Exact rational scalar. mpq_class keeps the canonical form invariant we
// rely on everywhere: gcd(num, den) == 1 and den > 0.
using Rat = mpq_class;

using Complex = std::complex<double>;

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rat parse_rat(const std::string& text);

std::string rat_to_string(const Rat& r);

inline double rat_to_double(const Rat& r) { return r.get_d(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Dense exact rational matrix, row-major.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static RatMatrix identity(int n);
  static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return data_[i * cols_ + j]; }
  const Rat& at(int i, int j) const { return data_[i * cols_ + j]; }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  RatMatrix transpose() const;

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator*(const Rat& s) const;
  RatMatrix operator-() const;

  Rat trace() const;

  // Fraction-free (Bareiss) determinant after clearing row denominators.
  Rat det() const;

  // Throws Singular when not invertible.
  RatMatrix inverse() const;

  // Basis of the right kernel {v : M v = 0}, from fraction-free echelon form.
  // Each basis vector is exact; the list is empty for full column rank.
  std::vector<std::vector<Rat>> kernel_basis() const;

  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<Rat> data_;
};

RatMatrix mat_pow(const RatMatrix& m, int e);

// Unique solution of M x = rhs; M may be rectangular with full column rank.
// Empty when the system is inconsistent or the solution is not unique.
std::optional<RatMatrix> try_solve_linear(const RatMatrix& m, const RatMatrix& rhs);

// Same, but throws Singular instead of returning empty.
RatMatrix solve_linear(const RatMatrix& m, const RatMatrix& rhs);

}  // namespace matsolve
