#include "fewnomial/interval.hpp"

#include <algorithm>

namespace fewnomial {

QIv operator+(const QIv& a, const QIv& b) { return {a.lo + b.lo, a.hi + b.hi}; }

QIv operator-(const QIv& a, const QIv& b) { return {a.lo - b.hi, a.hi - b.lo}; }

QIv operator*(const QIv& a, const QIv& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

QIv operator*(const Rat& s, const QIv& a) {
  if (s >= 0) return {s * a.lo, s * a.hi};
  return {s * a.hi, s * a.lo};
}

QIv iv_pow(const QIv& a, int e) {
  if (e == 0) return QIv::point(Rat(1));
  if (e % 2 == 0) {
    // Even powers fold through zero.
    Rat l = rat_pow(abs(a.lo), e), h = rat_pow(abs(a.hi), e);
    Rat top = std::max(l, h);
    if (a.contains_zero()) return {Rat(0), top};
    return {std::min(l, h), top};
  }
  return {rat_pow(a.lo, e), rat_pow(a.hi, e)};
}

bool subset(const QIv& inner, const QIv& outer) {
  return outer.lo <= inner.lo && inner.hi <= outer.hi;
}

bool strict_subset(const QIv& inner, const QIv& outer) {
  return outer.lo < inner.lo && inner.hi < outer.hi;
}

bool intersects(const QIv& a, const QIv& b) { return a.lo <= b.hi && b.lo <= a.hi; }

QIv eval_box(const Poly2Q& f, const QIv& x, const QIv& y) {
  QIv acc = QIv::point(Rat(0));
  for (const auto& [e, c] : f.t) acc = acc + c * (iv_pow(x, e.first) * iv_pow(y, e.second));
  return acc;
}

QIv eval_box(const UPoly& f, const QIv& x) {
  QIv acc = QIv::point(Rat(0));
  for (size_t i = 0; i < f.c.size(); ++i)
    acc = acc + f.c[i] * iv_pow(x, static_cast<int>(i));
  return acc;
}

}  // namespace fewnomial
