#include "fewnomial/lattice.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "fewnomial/error.hpp"

namespace fewnomial::lattice {

ExponentSupport normalize_support(int n, std::vector<std::vector<Int>> vectors) {
  if (n < 1) fail(Errc::bad_input, "need n >= 1");
  if (static_cast<int>(vectors.size()) < n + 1)
    fail(Errc::bad_input, "need at least n+1 exponent vectors");
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != n) fail(Errc::bad_input, "exponent vector of wrong length");
  std::vector<Int> base = vectors[0];
  for (auto& v : vectors)
    for (int i = 0; i < n; ++i) v[i] -= base[i];
  std::set<std::vector<Int>> seen;
  for (const auto& v : vectors)
    if (!seen.insert(v).second) fail(Errc::duplicate_exponent, "repeated exponent vector");
  ExponentSupport w;
  w.n = n;
  w.vectors = std::move(vectors);
  return w;
}

ZMat exponent_matrix(const ExponentSupport& w) {
  ZMat e(w.n, w.m());
  for (int j = 0; j < w.m(); ++j)
    for (int i = 0; i < w.n; ++i) e.at(i, j) = w.vectors[j + 1][i];
  return e;
}

SpanIndex span_index_parity(const ExponentSupport& w) {
  SmithForm s = smith_normal_form(exponent_matrix(w));
  SpanIndex out;
  if (s.rank < w.n) {
    out.kind = SpanKind::rank_deficient;
    return out;
  }
  Int idx(1);
  for (const auto& d : s.divisors) idx *= d;
  out.index = idx;
  out.kind = (idx % 2 == 0) ? SpanKind::even : SpanKind::odd;
  return out;
}

WeightBasis relation_kernel(const ExponentSupport& w) {
  WeightBasis out;
  out.b = integer_kernel(exponent_matrix(w));
  if (out.b.cols != w.k())
    fail(Errc::rank_deficient, "exponents do not span: relation space too large");
  return out;
}

namespace {

using V3 = std::array<Int, 3>;

V3 cross(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Int dot(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Int det3(const V3& a, const V3& b, const V3& c) { return dot(a, cross(b, c)); }

void make_primitive(V3& g, Int& h) {
  Int d = gcd(gcd(abs(g[0]), abs(g[1])), gcd(abs(g[2]), abs(h)));
  if (d > 1) {
    for (auto& x : g) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), d.get_mpz_t());
  }
}

// 2D convex hull (monotone chain), strict turns only; returns CCW cycle.
std::vector<std::array<Int, 2>> hull2(std::vector<std::array<Int, 2>> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  auto cross2 = [](const std::array<Int, 2>& o, const std::array<Int, 2>& a,
                   const std::array<Int, 2>& b) -> Int {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<std::array<Int, 2>> h(2 * pts.size());
  size_t sz = 0;
  for (const auto& p : pts) {
    while (sz >= 2 && cross2(h[sz - 2], h[sz - 1], p) <= 0) --sz;
    h[sz++] = p;
  }
  size_t lower = sz + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (sz >= lower && cross2(h[sz - 2], h[sz - 1], *it) <= 0) --sz;
    h[sz++] = *it;
  }
  h.resize(sz - 1);
  return h;
}

Int twice_hull_area(const std::vector<std::vector<Int>>& vecs) {
  std::vector<std::array<Int, 2>> pts;
  pts.reserve(vecs.size());
  for (const auto& v : vecs) pts.push_back({v[0], v[1]});
  auto h = hull2(std::move(pts));
  if (h.size() < 3) return 0;
  Int s(0);
  for (size_t i = 0; i < h.size(); ++i) {
    const auto& a = h[i];
    const auto& b = h[(i + 1) % h.size()];
    s += a[0] * b[1] - a[1] * b[0];
  }
  return abs(s);
}

Int six_hull_volume(const std::vector<std::vector<Int>>& vecs) {
  std::vector<V3> pts;
  pts.reserve(vecs.size());
  for (const auto& v : vecs) pts.push_back({v[0], v[1], v[2]});
  int m = static_cast<int>(pts.size());
  {
    ZMat diffs(m - 1, 3);
    for (int i = 1; i < m; ++i)
      for (int j = 0; j < 3; ++j) diffs.at(i - 1, j) = pts[i][j] - pts[0][j];
    if (rank(to_rational(diffs)) < 3) return 0;
  }
  // Supporting planes from point triples, keyed by outward (primitive normal, offset).
  std::map<std::pair<V3, Int>, std::vector<int>> faces;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c) {
        V3 g = cross({pts[b][0] - pts[a][0], pts[b][1] - pts[a][1], pts[b][2] - pts[a][2]},
                     {pts[c][0] - pts[a][0], pts[c][1] - pts[a][1], pts[c][2] - pts[a][2]});
        if (g[0] == 0 && g[1] == 0 && g[2] == 0) continue;
        Int h = dot(g, pts[a]);
        bool below = true, above = true;
        for (const auto& p : pts) {
          Int v = dot(g, p);
          if (v > h) below = false;
          if (v < h) above = false;
          if (!below && !above) break;
        }
        if (!below && !above) continue;
        if (above) {  // orient outward: all points on the <= side
          for (auto& x : g) x = -x;
          h = -h;
        }
        make_primitive(g, h);
        auto& members = faces[{g, h}];
        if (!members.empty()) continue;
        for (int i = 0; i < m; ++i)
          if (dot(g, pts[i]) == h) members.push_back(i);
      }
  if (faces.empty()) return 0;  // not full-dimensional
  Int six_vol(0);
  for (const auto& [key, members] : faces) {
    const V3& g = key.first;
    // Project out the dominant axis, hull-order in 2D, then orient the cycle outward.
    int drop = 0;
    if (abs(g[1]) > abs(g[drop])) drop = 1;
    if (abs(g[2]) > abs(g[drop])) drop = 2;
    int u = (drop + 1) % 3, v = (drop + 2) % 3;
    std::vector<std::array<Int, 2>> flat;
    std::map<std::pair<Int, Int>, int> back;
    for (int idx : members) {
      flat.push_back({pts[idx][u], pts[idx][v]});
      back[{pts[idx][u], pts[idx][v]}] = idx;
    }
    auto cyc2 = hull2(std::move(flat));
    if (cyc2.size() < 3) continue;
    std::vector<V3> cyc;
    cyc.reserve(cyc2.size());
    for (const auto& q : cyc2) cyc.push_back(pts[back.at({q[0], q[1]})]);
    V3 nrm{Int(0), Int(0), Int(0)};
    for (size_t i = 0; i < cyc.size(); ++i) {
      V3 c = cross(cyc[i], cyc[(i + 1) % cyc.size()]);
      for (int t = 0; t < 3; ++t) nrm[t] += c[t];
    }
    if (dot(nrm, g) < 0) std::reverse(cyc.begin(), cyc.end());
    for (size_t i = 1; i + 1 < cyc.size(); ++i) six_vol += det3(cyc[0], cyc[i], cyc[i + 1]);
  }
  return six_vol;
}

}  // namespace

Int kouchnirenko_bound(const ExponentSupport& w) {
  switch (w.n) {
    case 1: {
      Int lo = w.vectors[0][0], hi = lo;
      for (const auto& v : w.vectors) {
        lo = std::min(lo, v[0]);
        hi = std::max(hi, v[0]);
      }
      return hi - lo;
    }
    case 2:
      return twice_hull_area(w.vectors);
    case 3:
      return six_hull_volume(w.vectors);
    default:
      fail(Errc::unsupported_dimension, "normalized volume implemented for n <= 3");
  }
}

}  // namespace fewnomial::lattice
