#include "fewnomial/upoly.hpp"

#include <algorithm>

#include "fewnomial/error.hpp"

namespace fewnomial {

UPoly UPoly::monomial(int deg, const Rat& coef) {
  UPoly p;
  if (coef == 0) return p;
  p.c.assign(deg + 1, Rat(0));
  p.c[deg] = coef;
  return p;
}

Rat UPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UPoly::eval_d(double x) const {
  double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

UPoly UPoly::derivative() const {
  UPoly d;
  if (c.size() <= 1) return d;
  d.c.resize(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) d.c[i - 1] = Rat(static_cast<long>(i)) * c[i];
  d.trim();
  return d;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

UPoly operator*(const Rat& s, const UPoly& a) {
  UPoly r;
  if (s == 0) return r;
  r.c = a.c;
  for (auto& v : r.c) v *= s;
  return r;
}

bool operator==(const UPoly& a, const UPoly& b) { return a.c == b.c; }

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) fail(Errc::bad_input, "polynomial division by zero");
  UPoly q, r = a;
  int db = b.degree();
  if (r.degree() >= db) q.c.assign(r.degree() - db + 1, Rat(0));
  while (!r.is_zero() && r.degree() >= db) {
    int shift = r.degree() - db;
    Rat f = r.leading() / b.leading();
    q.c[shift] = f;
    for (int i = 0; i <= db; ++i) r.c[shift + i] -= f * b.c[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

UPoly primitive_part(const UPoly& a) {
  if (a.is_zero()) return a;
  Int den(1);
  for (const auto& v : a.c) den = lcm(den, v.get_den());
  Int content(0);
  for (const auto& v : a.c) {
    Int scaled = v.get_num() * (den / v.get_den());
    content = gcd(content, scaled);
  }
  if (a.leading() < 0) content = -content;
  UPoly r = a;
  Rat f = Rat(den) / Rat(content);
  for (auto& v : r.c) v *= f;
  return r;
}

UPoly poly_gcd(UPoly a, UPoly b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

UPoly squarefree_part(const UPoly& f) {
  if (f.is_zero()) fail(Errc::zero_polynomial, "squarefree part of zero");
  if (f.degree() == 0) return UPoly::constant(Rat(1));
  UPoly g = poly_gcd(f, f.derivative());
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) fail(Errc::degenerate_system, "squarefree division left a remainder");
  return primitive_part(q);
}

std::pair<int, UPoly> strip_valuation(const UPoly& f) {
  if (f.is_zero()) fail(Errc::zero_polynomial, "valuation of zero polynomial");
  size_t v = 0;
  while (v < f.c.size() && f.c[v] == 0) ++v;
  UPoly g;
  g.c.assign(f.c.begin() + static_cast<long>(v), f.c.end());
  return {static_cast<int>(v), g};
}

namespace {

int variations(const std::vector<int>& signs) {
  int count = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int SturmChain::variations_at(const Rat& x) const {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& p : seq) signs.push_back(sgn(p.eval(x)));
  return variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> signs;
  for (const auto& p : seq) {
    if (p.is_zero()) {
      signs.push_back(0);
      continue;
    }
    int s = sgn(p.leading());
    signs.push_back(p.degree() % 2 ? -s : s);
  }
  return variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> signs;
  for (const auto& p : seq) signs.push_back(p.is_zero() ? 0 : sgn(p.leading()));
  return variations(signs);
}

long SturmChain::count(const Rat& lo, const Rat& hi) const {
  return variations_at(lo) - variations_at(hi);
}

long SturmChain::count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

SturmChain sturm_chain(const UPoly& f) {
  SturmChain chain;
  if (f.is_zero()) fail(Errc::zero_polynomial, "Sturm chain of zero");
  chain.seq.push_back(primitive_part(f));
  if (f.degree() == 0) return chain;
  chain.seq.push_back(primitive_part(f.derivative()));
  while (!chain.seq.back().is_zero() && chain.seq.back().degree() > 0) {
    const UPoly& a = chain.seq[chain.seq.size() - 2];
    const UPoly& b = chain.seq.back();
    UPoly r = divmod(a, b).second;
    if (r.is_zero()) break;
    // Rescale by a positive factor only; signs carry the information.
    UPoly next = primitive_part(r);
    if (r.leading() > 0) next = Rat(-1) * next;
    chain.seq.push_back(std::move(next));
  }
  return chain;
}

Rat root_bound(const UPoly& f) {
  if (f.is_zero() || f.degree() == 0) return Rat(1);
  Rat m(0);
  for (int i = 0; i < f.degree(); ++i) m = std::max(m, Rat(abs(f.c[i] / f.leading())));
  return m + 1;
}

namespace {

// Split point inside (lo, hi) avoiding roots of f; midpoint first, then skewed cuts.
Rat split_point(const UPoly& f, const Rat& lo, const Rat& hi) {
  Rat w = hi - lo;
  long den = 2;
  long num = 1;
  for (int tries = 0; tries < 64; ++tries) {
    Rat m = lo + w * Rat(num, den);
    if (f.eval(m) != 0) return m;
    den *= 2;
    num = den / 2 - 1;
  }
  fail(Errc::degenerate_system, "could not find a root-free split point");
}

void isolate_rec(const UPoly& f, const SturmChain& chain, const Rat& lo, const Rat& hi, long roots,
                 std::vector<std::pair<Rat, Rat>>& out) {
  if (roots == 0) return;
  bool spans_zero = lo < 0 && 0 < hi;
  if (roots == 1 && !spans_zero) {
    out.emplace_back(lo, hi);
    return;
  }
  // f(0) != 0 by precondition, so 0 is a valid cut that pushes roots off the origin.
  Rat mid = spans_zero ? Rat(0) : split_point(f, lo, hi);
  long left = chain.count(lo, mid);
  isolate_rec(f, chain, lo, mid, left, out);
  isolate_rec(f, chain, mid, hi, roots - left, out);
}

}  // namespace

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UPoly& f) {
  if (f.is_zero()) fail(Errc::zero_polynomial, "isolating roots of zero");
  if (f.eval(Rat(0)) == 0) fail(Errc::bad_input, "strip the valuation before isolating");
  std::vector<std::pair<Rat, Rat>> out;
  if (f.degree() == 0) return out;
  SturmChain chain = sturm_chain(f);
  Rat bound = root_bound(f);
  long total = chain.count(-bound, bound);
  isolate_rec(f, chain, -bound, bound, total, out);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::pair<Rat, Rat> refine_root(const UPoly& f, Rat lo, Rat hi, const Rat& width) {
  int slo = sgn(f.eval(lo));
  if (slo == 0) fail(Errc::bad_input, "refine_root endpoint is a root");
  while (hi - lo > width) {
    Rat mid = (lo + hi) / 2;
    int sm = sgn(f.eval(mid));
    if (sm == 0) {
      // Exact hit: shrink around the root, staying inside the old bracket.
      Rat w = std::min(Rat(width / 4), Rat((hi - lo) / 8));
      lo = std::max(lo, Rat(mid - w));
      hi = std::min(hi, Rat(mid + w));
      break;
    }
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

}  // namespace fewnomial
