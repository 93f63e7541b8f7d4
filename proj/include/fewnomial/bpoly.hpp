#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fewnomial/numeric.hpp"
#include "fewnomial/upoly.hpp"

namespace fewnomial {

/// Sparse bivariate polynomial over Q; key (i, j) is the (y1, y2) exponent pair.
struct Poly2Q {
  std::map<std::pair<int, int>, Rat> t;

  static Poly2Q constant(const Rat& v);
  static Poly2Q variable(int var);  // 0 -> y1, 1 -> y2

  bool is_zero() const { return t.empty(); }
  int deg_x() const;
  int deg_y() const;
  int total_degree() const;

  void add_term(int i, int j, const Rat& coef);
  Rat coeff(int i, int j) const;

  Rat eval(const Rat& x, const Rat& y) const;
  double eval_d(double x, double y) const;
  Poly2Q partial(int var) const;
};

Poly2Q operator+(const Poly2Q& a, const Poly2Q& b);
Poly2Q operator-(const Poly2Q& a, const Poly2Q& b);
Poly2Q operator*(const Poly2Q& a, const Poly2Q& b);
Poly2Q operator*(const Rat& s, const Poly2Q& a);
bool operator==(const Poly2Q& a, const Poly2Q& b);

/// Coefficients of f viewed in the chosen variable; entry d is a polynomial in the other.
std::vector<Poly2Q> coefficients_in(const Poly2Q& f, int var);

/// f must not involve the other variable.
UPoly as_univariate(const Poly2Q& f, int var);
Poly2Q from_univariate(const UPoly& f, int var);

/// Exact division by c0 + c1*y1 + c2*y2; {quotient, true} when the remainder vanishes.
struct AffineForm {
  Rat c0, c1, c2;
  Rat eval(const Rat& x, const Rat& y) const { return c0 + c1 * x + c2 * y; }
};
std::pair<Poly2Q, bool> divide_affine(const Poly2Q& f, const AffineForm& p);

/// Resultant eliminating the chosen variable; univariate in the other.
/// Computed by sampling Sylvester determinants and interpolating.
UPoly resultant(const Poly2Q& f, const Poly2Q& g, int eliminate);

/// f(base + t * dir) as a polynomial in t.
UPoly restrict_to_line(const Poly2Q& f, const QVec& base, const QVec& dir);

/// f(x + a, y + b).
Poly2Q translate(const Poly2Q& f, const Rat& a, const Rat& b);

/// Newton interpolation through distinct sample points.
UPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

/// Double-precision mirror for fast inner loops.
struct Poly2D {
  struct Term {
    int i, j;
    double c;
  };
  std::vector<Term> terms;

  double eval(double x, double y) const;
  Poly2D partial(int var) const;
};
Poly2D to_double(const Poly2Q& f);

}  // namespace fewnomial
