#include "fewnomial/linalg.hpp"

#include <algorithm>
#include <tuple>

#include "fewnomial/error.hpp"

namespace fewnomial {

ZMat ZMat::identity(int n) {
  ZMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat to_rational(const ZMat& m) {
  QMat q(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) q.a[i] = Rat(m.a[i]);
  return q;
}

namespace {

// Row echelon with partial pivoting; returns pivot columns. Mutates m in place.
std::vector<int> echelon(QMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0 && (p < 0 || abs(m.at(i, col)) > abs(m.at(p, col)))) p = i;
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    Rat inv = 1 / m.at(row, col);
    for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(QMat m) { return static_cast<int>(echelon(m).size()); }

Rat det(QMat m) {
  if (m.rows != m.cols) fail(Errc::bad_input, "determinant of a non-square matrix");
  int n = m.rows;
  Rat d(1);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (m.at(i, col) != 0 && (p < 0 || abs(m.at(i, col)) > abs(m.at(p, col)))) p = i;
    if (p < 0) return Rat(0);
    if (p != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Rat inv = 1 / m.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (m.at(i, col) == 0) continue;
      Rat f = m.at(i, col) * inv;
      for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

QMat mul(const QMat& a, const QMat& b) {
  if (a.cols != b.rows) fail(Errc::bad_input, "matrix product shape mismatch");
  QMat c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int l = 0; l < a.cols; ++l) {
      if (a.at(i, l) == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, l) * b.at(l, j);
    }
  return c;
}

ZMat mul(const ZMat& a, const ZMat& b) {
  if (a.cols != b.rows) fail(Errc::bad_input, "matrix product shape mismatch");
  ZMat c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int l = 0; l < a.cols; ++l) {
      if (a.at(i, l) == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, l) * b.at(l, j);
    }
  return c;
}

QVec mul(const QMat& a, const QVec& v) {
  if (a.cols != static_cast<int>(v.size())) fail(Errc::bad_input, "matrix-vector shape mismatch");
  QVec out(a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out[i] += a.at(i, j) * v[j];
  return out;
}

std::optional<QVec> solve_square(QMat m, QVec rhs) {
  if (m.rows != m.cols || m.rows != static_cast<int>(rhs.size()))
    fail(Errc::bad_input, "solve_square shape mismatch");
  int n = m.rows;
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (m.at(i, col) != 0 && (p < 0 || abs(m.at(i, col)) > abs(m.at(p, col)))) p = i;
    if (p < 0) return std::nullopt;
    if (p != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
      std::swap(rhs[p], rhs[col]);
    }
    Rat inv = 1 / m.at(col, col);
    for (int j = col; j < n; ++j) m.at(col, j) *= inv;
    rhs[col] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
      rhs[i] -= f * rhs[col];
    }
  }
  return rhs;
}

QMat inverse(const QMat& m) {
  if (m.rows != m.cols) fail(Errc::bad_input, "inverse of a non-square matrix");
  int n = m.rows;
  QMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto pivots = echelon(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
    fail(Errc::degenerate_system, "singular matrix");
  QMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::vector<QVec> kernel(QMat m) {
  int cols = m.cols;
  auto pivots = echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(cols);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Int det_bareiss(ZMat m) {
  if (m.rows != m.cols) fail(Errc::bad_input, "determinant of a non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  Int prev(1);
  int sign = 1;
  for (int col = 0; col < n - 1; ++col) {
    if (m.at(col, col) == 0) {
      int p = -1;
      for (int i = col + 1; i < n; ++i)
        if (m.at(i, col) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
      sign = -sign;
    }
    for (int i = col + 1; i < n; ++i)
      for (int j = col + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(col, col) - m.at(i, col) * m.at(col, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(col, col);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

namespace {

// Locate the entry of minimal nonzero absolute value in the trailing block.
bool min_entry(const ZMat& m, int start, int& bi, int& bj) {
  bool found = false;
  Int best;
  for (int i = start; i < m.rows; ++i)
    for (int j = start; j < m.cols; ++j) {
      if (m.at(i, j) == 0) continue;
      Int v = abs(m.at(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        bi = i;
        bj = j;
      }
    }
  return found;
}

void swap_rows(ZMat& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(ZMat& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] -= q * row[b]
void row_axpy(ZMat& m, int a, int b, const Int& q) {
  if (q == 0) return;
  for (int j = 0; j < m.cols; ++j) m.at(a, j) -= q * m.at(b, j);
}

void col_axpy(ZMat& m, int a, int b, const Int& q) {
  if (q == 0) return;
  for (int i = 0; i < m.rows; ++i) m.at(i, a) -= q * m.at(i, b);
}

}  // namespace

SmithForm smith_normal_form(ZMat m) {
  SmithForm out;
  out.u = ZMat::identity(m.rows);
  out.v = ZMat::identity(m.cols);
  int t = 0;
  int limit = std::min(m.rows, m.cols);
  while (t < limit) {
    int bi = 0, bj = 0;
    if (!min_entry(m, t, bi, bj)) break;
    swap_rows(m, t, bi);
    swap_rows(out.u, t, bi);
    swap_cols(m, t, bj);
    swap_cols(out.v, t, bj);
    bool clean = true;
    // Kill the rest of row/column t; restart if a division leaves a remainder.
    for (int i = t + 1; i < m.rows; ++i) {
      if (m.at(i, t) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(), m.at(t, t).get_mpz_t());
      row_axpy(m, i, t, q);
      row_axpy(out.u, i, t, q);
      if (m.at(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < m.cols; ++j) {
      if (m.at(t, j) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(), m.at(t, t).get_mpz_t());
      col_axpy(m, j, t, q);
      col_axpy(out.v, j, t, q);
      if (m.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;
    // Divisibility sweep: fold any non-multiple below-right into column t.
    bool fixed = false;
    for (int i = t + 1; i < m.rows && !fixed; ++i)
      for (int j = t + 1; j < m.cols && !fixed; ++j)
        if (m.at(i, j) % m.at(t, t) != 0) {
          col_axpy(m, t, j, Int(-1));
          col_axpy(out.v, t, j, Int(-1));
          fixed = true;
        }
    if (fixed) continue;
    if (m.at(t, t) < 0) {
      for (int j = 0; j < m.cols; ++j) m.at(t, j) = -m.at(t, j);
      for (int j = 0; j < out.u.cols; ++j) out.u.at(t, j) = -out.u.at(t, j);
    }
    ++t;
  }
  out.rank = t;
  out.d = ZMat(m.rows, m.cols);
  for (int i = 0; i < t; ++i) {
    out.d.at(i, i) = m.at(i, i);
    out.divisors.push_back(m.at(i, i));
  }
  return out;
}

ZMat integer_kernel(const ZMat& m) {
  // Columns of V beyond the rank map onto the kernel: M * v_j has Smith row
  // (U^-1 D)_j = 0 for j >= rank. Those columns are unimodular, hence a lattice basis.
  SmithForm s = smith_normal_form(m);
  int dim = m.cols - s.rank;
  ZMat k(m.cols, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < m.cols; ++i) k.at(i, j) = s.v.at(i, s.rank + j);
  // Normalize: primitive columns with positive leading entry.
  for (int j = 0; j < dim; ++j) {
    Int g(0);
    for (int i = 0; i < m.cols; ++i) g = gcd(g, k.at(i, j));
    if (g > 1)
      for (int i = 0; i < m.cols; ++i) mpz_divexact(k.at(i, j).get_mpz_t(), k.at(i, j).get_mpz_t(), g.get_mpz_t());
    for (int i = 0; i < m.cols; ++i) {
      if (k.at(i, j) == 0) continue;
      if (k.at(i, j) < 0)
        for (int l = 0; l < m.cols; ++l) k.at(l, j) = -k.at(l, j);
      break;
    }
  }
  return k;
}

Gf2Solution solve_gf2(std::vector<std::vector<std::uint8_t>> a, std::vector<std::uint8_t> b) {
  Gf2Solution out;
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  std::vector<int> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t p = row;
    while (p < rows && !a[p][col]) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || !a[i][col]) continue;
      for (size_t j = col; j < cols; ++j) a[i][j] ^= a[row][j];
      b[i] ^= b[row];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  for (size_t i = row; i < rows; ++i)
    if (b[i]) return out;  // 0 = 1: inconsistent
  out.consistent = true;
  out.free_vars = static_cast<int>(cols - pivot_col.size());
  out.x.assign(cols, 0);
  for (size_t r = 0; r < pivot_col.size(); ++r) out.x[pivot_col[r]] = b[r];
  return out;
}

}  // namespace fewnomial
