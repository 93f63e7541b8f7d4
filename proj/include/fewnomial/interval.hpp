#pragma once

#include "fewnomial/bpoly.hpp"
#include "fewnomial/numeric.hpp"
#include "fewnomial/upoly.hpp"

namespace fewnomial {

/// Closed rational interval.
struct QIv {
  Rat lo, hi;

  QIv() = default;
  QIv(Rat a, Rat b) : lo(std::move(a)), hi(std::move(b)) {}
  static QIv point(const Rat& v) { return {v, v}; }

  bool valid() const { return lo <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  double mid_d() const { return to_double(mid()); }
};

QIv operator+(const QIv& a, const QIv& b);
QIv operator-(const QIv& a, const QIv& b);
QIv operator*(const QIv& a, const QIv& b);
QIv operator*(const Rat& s, const QIv& a);
QIv iv_pow(const QIv& a, int e);
bool subset(const QIv& inner, const QIv& outer);
bool strict_subset(const QIv& inner, const QIv& outer);
bool intersects(const QIv& a, const QIv& b);

/// Interval enclosure of f over the box X x Y (naive term-wise bounds).
QIv eval_box(const Poly2Q& f, const QIv& x, const QIv& y);
QIv eval_box(const UPoly& f, const QIv& x);

}  // namespace fewnomial
