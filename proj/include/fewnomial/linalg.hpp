#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fewnomial/numeric.hpp"

namespace fewnomial {

/// Dense rational matrix, row-major.
struct QMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

/// Dense integer matrix, row-major.
struct ZMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  ZMat() = default;
  ZMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  static ZMat identity(int n);
};

QMat to_rational(const ZMat& m);

int rank(QMat m);
Rat det(QMat m);
QMat mul(const QMat& a, const QMat& b);
ZMat mul(const ZMat& a, const ZMat& b);
QVec mul(const QMat& a, const QVec& v);

/// Unique solution of a square system; nullopt when singular.
std::optional<QVec> solve_square(QMat m, QVec rhs);

/// Inverse of a square nonsingular matrix; throws degenerate_system otherwise.
QMat inverse(const QMat& m);

/// Basis of the right null space.
std::vector<QVec> kernel(QMat m);

/// Fraction-free determinant (Bareiss); exact for integer input.
Int det_bareiss(ZMat m);

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... (nonnegative).
struct SmithForm {
  ZMat u, d, v;
  std::vector<Int> divisors;  // nonzero invariant factors
  int rank = 0;
};
SmithForm smith_normal_form(ZMat m);

/// Integer kernel basis of an integer matrix: primitive columns spanning ker over Z.
ZMat integer_kernel(const ZMat& m);

/// Solve A x = b over GF(2). Rows of `a` are coefficient bit-rows.
struct Gf2Solution {
  bool consistent = false;
  int free_vars = 0;
  std::vector<std::uint8_t> x;  // one particular solution when consistent
};
Gf2Solution solve_gf2(std::vector<std::vector<std::uint8_t>> a, std::vector<std::uint8_t> b);

}  // namespace fewnomial
