#pragma once

#include <vector>

#include "fewnomial/linalg.hpp"
#include "fewnomial/numeric.hpp"

namespace fewnomial::lattice {

/// Monomial support of a sparse system: n+k+1 distinct exponent vectors in Z^n,
/// normalized so the first one is the origin.
struct ExponentSupport {
  int n = 0;
  std::vector<std::vector<Int>> vectors;

  int count() const { return static_cast<int>(vectors.size()); }
  int k() const { return count() - n - 1; }
  int m() const { return n + k(); }  // nonzero exponents
};

/// Translate so the first exponent is the origin; validates shape and distinctness.
ExponentSupport normalize_support(int n, std::vector<std::vector<Int>> vectors);

/// n x (n+k) matrix whose columns are the nonzero exponents w_1..w_{n+k}.
ZMat exponent_matrix(const ExponentSupport& w);

enum class SpanKind { odd, even, rank_deficient };

struct SpanIndex {
  SpanKind kind = SpanKind::rank_deficient;
  Int index;  // index of the exponent lattice in its saturation; valid unless rank deficient
};

/// Parity of the index of ZW inside (QW) ∩ Z^n, from the Smith invariant factors.
SpanIndex span_index_parity(const ExponentSupport& w);

/// Primitive integer basis of the relations among w_1..w_{n+k}: an (n+k) x k matrix
/// whose columns b_j satisfy sum_i b_ij w_i = 0, first nonzero entry positive.
struct WeightBasis {
  ZMat b;
  int rows() const { return b.rows; }
  int cols() const { return b.cols; }
};

WeightBasis relation_kernel(const ExponentSupport& w);

/// n! times the volume of conv(W); exact, supported for n <= 3.
Int kouchnirenko_bound(const ExponentSupport& w);

}  // namespace fewnomial::lattice
