#pragma once

#include <optional>
#include <vector>

#include "fewnomial/lattice.hpp"
#include "fewnomial/numeric.hpp"

namespace fewnomial {

/// Rational enclosures of e^2 and e^4 to 30 significant digits.
/// lower < e^s < upper, upper - lower = 1 ulp of the 30-digit grid.
const Rat& e2_lower();
const Rat& e2_upper();
const Rat& e4_lower();
const Rat& e4_upper();

/// An irrational bound value with a certified rational enclosure and the
/// largest integer strictly below it (usable as a strict solution-count cap).
struct BoundValue {
  Rat lower, upper;
  double value = 0;
  Int strict_int;
};

/// (e^4+3)/4 * 2^C(k,2) * n^k: cap on nondegenerate nonzero real solutions
/// of a system with n+k+1 monomial support of odd index.
BoundValue solution_bound(int n, int k);

/// (e^2+3)/4 * 2^C(k,2) * n^k: the positive-orthant counterpart.
BoundValue positive_solution_bound(int n, int k);

/// 2^C(n+k,2) * (n+1)^(n+k): the classical cap both of the above improve on.
Int khovanskii_bound(int n, int k);

/// Sharp caps in the minimal monomial-excess case (k = 1): 2n+1 nonzero
/// real solutions, n+1 positive ones.
struct SharpSmallBounds {
  Int nonzero;
  Int positive;
};
SharpSmallBounds sharp_small_bounds(int n);

/// Itemized curve-tracing budget: gamma_term caps the Jacobian-system zeros,
/// flat_terms[j-1] caps the unbounded components of curve C_j ending on
/// codimension-j faces, series_bound is the closed-form majorant of total.
struct KrLedger {
  Int gamma_term;
  std::vector<Rat> flat_terms;
  Rat total;
  Rat series_bound;  // gamma * (1 + 1/4 sum_{j=1}^k 4^j/j!)
};

/// Requires n >= 1, k >= 1; guarantees total <= series_bound < solution_bound.
KrLedger kr_ledger(int n, int k);

/// Face-count cap on the unbounded components of curve C_j alone: half of
/// (codim-j faces) * 2^j * (degree factor of the chain in k - j variables).
Rat flat_face_bound(int n, int k, int j);

struct BoundReport {
  int n = 0, k = 0;
  BoundValue solution;
  BoundValue positive;
  Int khovanskii;
  std::optional<Int> kouchnirenko;  // n <= 3 only
  KrLedger ledger;
};

BoundReport bound_report(int n, int k);
BoundReport bound_report(const lattice::ExponentSupport& support);

}  // namespace fewnomial
