#pragma once

#include <utility>
#include <vector>

#include "fewnomial/numeric.hpp"

namespace fewnomial {

/// Dense univariate polynomial over Q; c[i] multiplies y^i, trailing zeros trimmed.
struct UPoly {
  std::vector<Rat> c;

  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
  static UPoly constant(const Rat& v) { return UPoly({v}); }
  static UPoly monomial(int deg, const Rat& coef);

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Rat& leading() const { return c.back(); }

  Rat eval(const Rat& x) const;
  double eval_d(double x) const;
  UPoly derivative() const;
};

UPoly operator+(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const UPoly& b);
UPoly operator*(const Rat& s, const UPoly& a);
bool operator==(const UPoly& a, const UPoly& b);

/// Quotient and remainder over Q, deg(r) < deg(b).
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

/// Integer coefficients, content 1, positive leading coefficient.
UPoly primitive_part(const UPoly& a);

/// Primitive gcd; zero if both inputs are zero.
UPoly poly_gcd(UPoly a, UPoly b);

/// f / gcd(f, f'), primitive. Same distinct roots as f, all simple.
UPoly squarefree_part(const UPoly& f);

/// Split f = y^v * g with g(0) != 0; returns {v, g}.
std::pair<int, UPoly> strip_valuation(const UPoly& f);

/// Canonical Sturm chain of f (f, f', then negated remainders).
struct SturmChain {
  std::vector<UPoly> seq;

  int variations_at(const Rat& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;
  /// Distinct real roots in (lo, hi]; requires f(lo) != 0 and f(hi) != 0.
  long count(const Rat& lo, const Rat& hi) const;
  long count_all() const;
};

SturmChain sturm_chain(const UPoly& f);

/// Cauchy bound: all real roots lie in (-B, B).
Rat root_bound(const UPoly& f);

/// Isolating open intervals for the real roots of a squarefree f with f(0) != 0.
/// Each interval holds exactly one root, excludes 0, and f is nonzero at both ends.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UPoly& f);

/// Shrink an isolating interval by bisection until hi - lo <= width.
std::pair<Rat, Rat> refine_root(const UPoly& f, Rat lo, Rat hi, const Rat& width);

}  // namespace fewnomial
