#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fewnomial/bpoly.hpp"
#include "fewnomial/gale.hpp"
#include "fewnomial/interval.hpp"
#include "fewnomial/upoly.hpp"

namespace fewnomial::oracle {

/// Sign-definite isolating interval of a simple nonzero real root.
struct IsolatedRoot {
  Rat lo, hi;
  Rat mid;
};

struct UnivariateCount {
  int nondegenerate = 0;
  int degenerate = 0;  // distinct multiple roots, excluded from the headline count
  std::vector<IsolatedRoot> roots;  // simple nonzero roots, increasing
};

/// Exact real-root census of f, excluding 0. Counts come from Sturm chains, so
/// they are independent of any isolation or refinement precision.
UnivariateCount count_real_univariate(const UPoly& f);

/// Clear negative exponents by a monomial factor; nonzero roots unchanged,
/// roots on the coordinate axes become artifacts the counters must drop.
UPoly laurent_to_upoly(const SparseSystem& s);                       // n = 1
std::pair<Poly2Q, Poly2Q> laurent_to_bivariate(const SparseSystem& s);  // n = 2

struct IsolatedBox {
  QIv x, y;  // both sign-definite; certified to hold exactly one common root
};

struct BivariateCount {
  int nondegenerate = 0;
  int degenerate_suspects = 0;  // boxes neither certified nor excluded at the cap
  std::vector<IsolatedBox> boxes;
};

/// Common zeros of f and g off the coordinate axes: resultants in each
/// variable give candidate coordinates, interval arithmetic discards empty
/// boxes, and a Krawczyk step certifies existence, uniqueness, and a
/// nonsingular Jacobian on each surviving box.
BivariateCount count_real_bivariate(const Poly2Q& f, const Poly2Q& g);

/// All common zeros of f and g, axis points included. Works in a translated
/// frame whose resultants avoid the origin, then maps the boxes back.
BivariateCount common_zeros(const Poly2Q& f, const Poly2Q& g);

/// Contract a certified box until both widths drop below target, by Krawczyk
/// iteration with outward dyadic rounding. False if progress stalls first.
bool tighten_box(const Poly2Q& f, const Poly2Q& g, IsolatedBox& box, const Rat& target);

/// Ground-truth census for a sparse system (n <= 2), with the volume and
/// odd-index caps recorded as checkable flags rather than hard assertions.
struct OracleReport {
  int count = 0;            // nondegenerate solutions with all coordinates nonzero
  int positive_count = 0;   // subset in the open positive orthant
  int degenerate_suspects = 0;
  std::vector<QVec> approx;        // midpoint per counted solution
  std::optional<Int> volume_cap;   // n! vol(conv W)
  bool within_volume_cap = true;
  std::optional<Int> parity_cap;   // strict cap applicable when the span index is odd
  bool within_parity_cap = true;
};

OracleReport oracle_count(const SparseSystem& s);

}  // namespace fewnomial::oracle
