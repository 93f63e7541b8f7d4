#include "fewnomial/bpoly.hpp"

#include <algorithm>
#include <cmath>

#include "fewnomial/error.hpp"
#include "fewnomial/linalg.hpp"
#include "fewnomial/numeric.hpp"

namespace fewnomial {

Poly2Q Poly2Q::constant(const Rat& v) {
  Poly2Q p;
  p.add_term(0, 0, v);
  return p;
}

Poly2Q Poly2Q::variable(int var) {
  Poly2Q p;
  p.add_term(var == 0 ? 1 : 0, var == 0 ? 0 : 1, Rat(1));
  return p;
}

int Poly2Q::deg_x() const {
  int d = -1;
  for (const auto& [e, c] : t) d = std::max(d, e.first);
  return d;
}

int Poly2Q::deg_y() const {
  int d = -1;
  for (const auto& [e, c] : t) d = std::max(d, e.second);
  return d;
}

int Poly2Q::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : t) d = std::max(d, e.first + e.second);
  return d;
}

void Poly2Q::add_term(int i, int j, const Rat& coef) {
  if (coef == 0) return;
  auto key = std::make_pair(i, j);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, coef);
    return;
  }
  it->second += coef;
  if (it->second == 0) t.erase(it);
}

Rat Poly2Q::coeff(int i, int j) const {
  auto it = t.find({i, j});
  return it == t.end() ? Rat(0) : it->second;
}

Rat Poly2Q::eval(const Rat& x, const Rat& y) const {
  Rat acc(0);
  for (const auto& [e, c] : t) acc += c * rat_pow(x, e.first) * rat_pow(y, e.second);
  return acc;
}

double Poly2Q::eval_d(double x, double y) const {
  double acc = 0;
  for (const auto& [e, c] : t) acc += c.get_d() * std::pow(x, e.first) * std::pow(y, e.second);
  return acc;
}

Poly2Q Poly2Q::partial(int var) const {
  Poly2Q d;
  for (const auto& [e, c] : t) {
    if (var == 0 && e.first > 0) d.add_term(e.first - 1, e.second, Rat(e.first) * c);
    if (var == 1 && e.second > 0) d.add_term(e.first, e.second - 1, Rat(e.second) * c);
  }
  return d;
}

Poly2Q operator+(const Poly2Q& a, const Poly2Q& b) {
  Poly2Q r = a;
  for (const auto& [e, c] : b.t) r.add_term(e.first, e.second, c);
  return r;
}

Poly2Q operator-(const Poly2Q& a, const Poly2Q& b) {
  Poly2Q r = a;
  for (const auto& [e, c] : b.t) r.add_term(e.first, e.second, -c);
  return r;
}

Poly2Q operator*(const Poly2Q& a, const Poly2Q& b) {
  Poly2Q r;
  for (const auto& [ea, ca] : a.t)
    for (const auto& [eb, cb] : b.t)
      r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

Poly2Q operator*(const Rat& s, const Poly2Q& a) {
  Poly2Q r;
  if (s == 0) return r;
  for (const auto& [e, c] : a.t) r.t.emplace(e, s * c);
  return r;
}

bool operator==(const Poly2Q& a, const Poly2Q& b) { return a.t == b.t; }

std::vector<Poly2Q> coefficients_in(const Poly2Q& f, int var) {
  int deg = var == 0 ? f.deg_x() : f.deg_y();
  std::vector<Poly2Q> out(static_cast<size_t>(std::max(deg, -1) + 1));
  for (const auto& [e, c] : f.t) {
    int d = var == 0 ? e.first : e.second;
    int other = var == 0 ? e.second : e.first;
    out[d].add_term(var == 0 ? 0 : other, var == 0 ? other : 0, c);
  }
  return out;
}

UPoly as_univariate(const Poly2Q& f, int var) {
  UPoly p;
  int deg = var == 0 ? f.deg_x() : f.deg_y();
  p.c.assign(static_cast<size_t>(std::max(deg, -1) + 1), Rat(0));
  for (const auto& [e, c] : f.t) {
    int other = var == 0 ? e.second : e.first;
    if (other != 0) fail(Errc::bad_input, "polynomial is not univariate in the chosen variable");
    p.c[var == 0 ? e.first : e.second] = c;
  }
  p.trim();
  return p;
}

Poly2Q from_univariate(const UPoly& f, int var) {
  Poly2Q p;
  for (size_t i = 0; i < f.c.size(); ++i) {
    int d = static_cast<int>(i);
    p.add_term(var == 0 ? d : 0, var == 0 ? 0 : d, f.c[i]);
  }
  return p;
}

std::pair<Poly2Q, bool> divide_affine(const Poly2Q& f, const AffineForm& p) {
  if (p.c1 == 0 && p.c2 == 0) fail(Errc::bad_input, "division by a constant form");
  // Divide along the variable with nonzero coefficient; the divisor is degree 1
  // there with constant leading coefficient, so plain long division stays exact.
  int var = p.c2 != 0 ? 1 : 0;
  Rat lead = var == 1 ? p.c2 : p.c1;
  // Divisor = lead * v + rest where rest is a poly in the other variable.
  Poly2Q rest;
  if (var == 1) {
    rest.add_term(0, 0, p.c0);
    rest.add_term(1, 0, p.c1);
  } else {
    rest.add_term(0, 0, p.c0);
    rest.add_term(0, 1, p.c2);
  }
  Poly2Q q, r = f;
  while (!r.is_zero()) {
    int d = var == 1 ? r.deg_y() : r.deg_x();
    if (d < 1) break;
    // Leading slice: terms of top degree in v, divided by lead.
    Poly2Q slice;
    for (const auto& [e, c] : r.t) {
      int dv = var == 1 ? e.second : e.first;
      if (dv == d) {
        if (var == 1)
          slice.add_term(e.first, e.second - 1, c / lead);
        else
          slice.add_term(e.first - 1, e.second, c / lead);
      }
    }
    q = q + slice;
    Poly2Q v = Poly2Q::variable(var);
    r = r - slice * (lead * v + rest);
  }
  return {q, r.is_zero()};
}

namespace {

// Sylvester determinant of f, g specialized at one sample of the kept variable.
// Formal degrees are fixed by the bivariate shapes so specialization commutes.
Rat sylvester_at(const std::vector<UPoly>& fc, int df, const std::vector<UPoly>& gc, int dg,
                 const Rat& s) {
  int n = df + dg;
  QMat m(n, n);
  for (int row = 0; row < dg; ++row)
    for (int i = 0; i <= df; ++i) m.at(row, row + i) = fc[static_cast<size_t>(df - i)].eval(s);
  for (int row = 0; row < df; ++row)
    for (int i = 0; i <= dg; ++i)
      m.at(dg + row, row + i) = gc[static_cast<size_t>(dg - i)].eval(s);
  return det(std::move(m));
}

}  // namespace

UPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  if (xs.size() != ys.size() || xs.empty()) fail(Errc::bad_input, "interpolation shape mismatch");
  size_t n = xs.size();
  // Newton divided differences.
  std::vector<Rat> dd = ys;
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  UPoly p = UPoly::constant(dd[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    UPoly shift({std::vector<Rat>{-xs[i], Rat(1)}});
    p = p * shift + UPoly::constant(dd[i]);
  }
  return p;
}

UPoly resultant(const Poly2Q& f, const Poly2Q& g, int eliminate) {
  if (f.is_zero() || g.is_zero()) fail(Errc::zero_polynomial, "resultant with a zero polynomial");
  int keep = 1 - eliminate;
  int df = eliminate == 0 ? f.deg_x() : f.deg_y();
  int dg = eliminate == 0 ? g.deg_x() : g.deg_y();
  if (df == 0 && dg == 0) fail(Errc::bad_input, "neither input involves the eliminated variable");
  // Coefficients in the eliminated variable, each univariate in the kept one.
  auto fslices = coefficients_in(f, eliminate);
  auto gslices = coefficients_in(g, eliminate);
  std::vector<UPoly> fc, gc;
  for (auto& s : fslices) fc.push_back(as_univariate(s, keep));
  for (auto& s : gslices) gc.push_back(as_univariate(s, keep));
  int bound = df * std::max(eliminate == 0 ? g.deg_y() : g.deg_x(), 0) +
              dg * std::max(eliminate == 0 ? f.deg_y() : f.deg_x(), 0);
  std::vector<Rat> xs, ys;
  long s = 0;
  while (static_cast<int>(xs.size()) <= bound) {
    Rat sample(s);
    xs.push_back(sample);
    ys.push_back(sylvester_at(fc, df, gc, dg, sample));
    s = s <= 0 ? -s + 1 : -s;
  }
  return interpolate(xs, ys);
}

UPoly restrict_to_line(const Poly2Q& f, const QVec& base, const QVec& dir) {
  UPoly x({std::vector<Rat>{base[0], dir[0]}});
  UPoly y({std::vector<Rat>{base[1], dir[1]}});
  // Powers built once per degree.
  int dx = std::max(f.deg_x(), 0), dy = std::max(f.deg_y(), 0);
  std::vector<UPoly> xp(static_cast<size_t>(dx) + 1), yp(static_cast<size_t>(dy) + 1);
  xp[0] = UPoly::constant(Rat(1));
  yp[0] = UPoly::constant(Rat(1));
  for (int i = 1; i <= dx; ++i) xp[i] = xp[i - 1] * x;
  for (int j = 1; j <= dy; ++j) yp[j] = yp[j - 1] * y;
  UPoly out;
  for (const auto& [e, c] : f.t) out = out + c * (xp[e.first] * yp[e.second]);
  return out;
}

Poly2Q translate(const Poly2Q& f, const Rat& a, const Rat& b) {
  // Binomial expansion of (x + a)^i (y + b)^j, power tables built once.
  int dx = std::max(f.deg_x(), 0), dy = std::max(f.deg_y(), 0);
  std::vector<Rat> ap(static_cast<size_t>(dx) + 1, Rat(1));
  std::vector<Rat> bp(static_cast<size_t>(dy) + 1, Rat(1));
  for (int i = 1; i <= dx; ++i) ap[static_cast<size_t>(i)] = Rat(ap[static_cast<size_t>(i - 1)] * a);
  for (int j = 1; j <= dy; ++j) bp[static_cast<size_t>(j)] = Rat(bp[static_cast<size_t>(j - 1)] * b);
  Poly2Q out;
  for (const auto& [e, c] : f.t)
    for (int u = 0; u <= e.first; ++u)
      for (int v = 0; v <= e.second; ++v) {
        Rat coef = c * Rat(binomial(static_cast<unsigned>(e.first), static_cast<unsigned>(u)) *
                           binomial(static_cast<unsigned>(e.second), static_cast<unsigned>(v)));
        coef = coef * ap[static_cast<size_t>(e.first - u)] * bp[static_cast<size_t>(e.second - v)];
        out.add_term(u, v, coef);
      }
  return out;
}

double Poly2D::eval(double x, double y) const {
  double acc = 0;
  for (const auto& t : terms) {
    double v = t.c;
    for (int a = 0; a < t.i; ++a) v *= x;
    for (int b = 0; b < t.j; ++b) v *= y;
    acc += v;
  }
  return acc;
}

Poly2D Poly2D::partial(int var) const {
  Poly2D d;
  for (const auto& t : terms) {
    if (var == 0 && t.i > 0) d.terms.push_back({t.i - 1, t.j, t.c * t.i});
    if (var == 1 && t.j > 0) d.terms.push_back({t.i, t.j - 1, t.c * t.j});
  }
  return d;
}

Poly2D to_double(const Poly2Q& f) {
  Poly2D d;
  for (const auto& [e, c] : f.t) d.terms.push_back({e.first, e.second, c.get_d()});
  return d;
}

}  // namespace fewnomial
