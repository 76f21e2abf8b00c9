#include "matsolve/rat.hpp"

#include <sstream>

namespace matsolve {

Rat parse_rat(const std::string& text) {
  std::string t;
  t.reserve(text.size());
  for (char c : text) {
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t.empty()) throw parse_error("empty rational literal");
  // mpq_class accepts "p/q" but leaves the value uncanonicalized and accepts
  // junk suffixes only by throwing, which is what we want.
  try {
    Rat r(t);
    if (r.get_den() == 0) throw parse_error("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw parse_error("bad rational literal '" + text + "'");
  }
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols())
      throw parse_error("ragged matrix rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool RatMatrix::is_zero() const {
  for (const Rat& v : data_)
    if (v != 0) return false;
  return true;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw parse_error("matrix shape mismatch in +");
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw parse_error("matrix shape mismatch in -");
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw parse_error("matrix shape mismatch in *");
  RatMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::operator*(const Rat& s) const {
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
  return r;
}

RatMatrix RatMatrix::operator-() const { return *this * Rat(-1); }

Rat RatMatrix::trace() const {
  Rat t = 0;
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

namespace {

// Clears denominators row by row; returns the integer matrix and the product
// of the scale factors applied (det(M) = det(Z) / scale).
struct ClearedMatrix {
  std::vector<std::vector<mpz_class>> z;
  mpq_class scale;  // det multiplier accumulated from row scaling
};

ClearedMatrix clear_denominators(const RatMatrix& m) {
  ClearedMatrix out;
  out.scale = 1;
  out.z.assign(m.rows(), std::vector<mpz_class>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (int j = 0; j < m.cols(); ++j) {
      const mpz_class& d = m.at(i, j).get_den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      l = l / g * d;
    }
    out.scale *= Rat(l);
    for (int j = 0; j < m.cols(); ++j) {
      const Rat& v = m.at(i, j);
      out.z[i][j] = v.get_num() * (l / v.get_den());
    }
  }
  return out;
}

// Bareiss fraction-free echelon reduction in place. Returns the column of the
// pivot used for each pivot row and the accumulated sign; entries stay integral.
struct BareissResult {
  std::vector<int> pivot_cols;
  int sign = 1;
};

BareissResult bareiss_echelon(std::vector<std::vector<mpz_class>>& a) {
  BareissResult res;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      res.sign = -res.sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    res.pivot_cols.push_back(c);
    ++r;
  }
  return res;
}

}  // namespace

Rat RatMatrix::det() const {
  if (!is_square()) throw parse_error("det of non-square matrix");
  if (rows_ == 0) return 1;
  ClearedMatrix cm = clear_denominators(*this);
  BareissResult br = bareiss_echelon(cm.z);
  if (static_cast<int>(br.pivot_cols.size()) < rows_) return 0;
  // After full-rank Bareiss the last pivot equals det of the integer matrix.
  Rat d(cm.z[rows_ - 1][rows_ - 1]);
  d *= br.sign;
  return d / cm.scale;
}

RatMatrix RatMatrix::inverse() const {
  if (!is_square()) throw parse_error("inverse of non-square matrix");
  const int n = rows_;
  // Exact Gauss-Jordan on [M | I].
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = at(i, j);
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw singular_error("matrix is singular");
    std::swap(a[piv], a[c]);
    Rat inv = 1 / a[c][c];
    for (int j = c; j < 2 * n; ++j) a[c][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = c; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  RatMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = a[i][n + j];
  return r;
}

std::vector<std::vector<Rat>> RatMatrix::kernel_basis() const {
  ClearedMatrix cm = clear_denominators(*this);
  BareissResult br = bareiss_echelon(cm.z);
  const int n = cols_;
  std::vector<bool> is_pivot(n, false);
  for (int c : br.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[free_col] = 1;
    // Back-substitute through the echelon rows, highest pivot last.
    for (int r = static_cast<int>(br.pivot_cols.size()) - 1; r >= 0; --r) {
      int pc = br.pivot_cols[r];
      Rat s = 0;
      for (int j = pc + 1; j < n; ++j)
        if (v[j] != 0) s += Rat(cm.z[r][j]) * v[j];
      v[pc] = -s / Rat(cm.z[r][pc]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << rat_to_string(at(i, j));
  }
  os << "]";
  return os.str();
}

RatMatrix mat_pow(const RatMatrix& m, int e) {
  RatMatrix acc = RatMatrix::identity(m.rows());
  for (int i = 0; i < e; ++i) acc = acc * m;
  return acc;
}

std::optional<RatMatrix> try_solve_linear(const RatMatrix& m, const RatMatrix& rhs) {
  if (m.rows() != rhs.rows()) throw parse_error("matrix shape mismatch in solve");
  const int r = m.rows(), c = m.cols(), k = rhs.cols();
  std::vector<std::vector<Rat>> a(r, std::vector<Rat>(c + k, Rat(0)));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) a[i][j] = m.at(i, j);
    for (int j = 0; j < k; ++j) a[i][c + j] = rhs.at(i, j);
  }
  std::vector<int> pivot_row(c, -1);
  int row = 0;
  for (int col = 0; col < c && row < r; ++col) {
    int piv = -1;
    for (int i = row; i < r; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    Rat inv = 1 / a[row][col];
    for (int j = col; j < c + k; ++j) a[row][j] *= inv;
    for (int i = 0; i < r; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (int j = col; j < c + k; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_row[col] = row;
    ++row;
  }
  for (int col = 0; col < c; ++col)
    if (pivot_row[col] < 0) return std::nullopt;  // underdetermined
  for (int i = row; i < r; ++i)
    for (int j = 0; j < k; ++j)
      if (a[i][c + j] != 0) return std::nullopt;  // inconsistent
  RatMatrix x(c, k);
  for (int col = 0; col < c; ++col)
    for (int j = 0; j < k; ++j) x.at(col, j) = a[pivot_row[col]][c + j];
  return x;
}

RatMatrix solve_linear(const RatMatrix& m, const RatMatrix& rhs) {
  std::optional<RatMatrix> x = try_solve_linear(m, rhs);
  if (!x) throw singular_error("linear system has no unique solution");
  return *x;
}

}  // namespace matsolve
