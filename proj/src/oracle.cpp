#include "fewnomial/oracle.hpp"

#include <algorithm>
#include <utility>

#include "fewnomial/bounds.hpp"
#include "fewnomial/error.hpp"
#include "fewnomial/lattice.hpp"
#include "fewnomial/linalg.hpp"

namespace fewnomial::oracle {

namespace {

// Distinct real roots via a Sturm chain; zero degree means none.
int distinct_real_roots(const UPoly& squarefree) {
  if (squarefree.degree() < 1) return 0;
  return static_cast<int>(sturm_chain(squarefree).count_all());
}

}  // namespace

UnivariateCount count_real_univariate(const UPoly& f) {
  if (f.is_zero()) fail(Errc::zero_polynomial, "cannot count roots of the zero polynomial");
  UnivariateCount out;
  UPoly f0 = strip_valuation(f).second;  // drops the root at 0 with its multiplicity
  if (f0.degree() < 1) return out;

  UPoly repeated = poly_gcd(f0, f0.derivative());
  UPoly repeated_sf = squarefree_part(repeated);
  out.degenerate = distinct_real_roots(repeated_sf);

  // Keep only the simple roots: all distinct roots divided by the repeated ones.
  UPoly simple = squarefree_part(f0);
  if (repeated_sf.degree() >= 1) {
    auto [q, r] = divmod(simple, repeated_sf);
    if (!r.is_zero()) fail(Errc::clearing_failure, "squarefree split lost exactness");
    simple = q;
  }
  if (simple.degree() < 1) return out;

  const Rat width(1, 1 << 24);
  for (auto& [lo, hi] : isolate_real_roots(simple)) {
    auto [rlo, rhi] = refine_root(simple, lo, hi, width);
    out.roots.push_back({rlo, rhi, (rlo + rhi) / 2});
  }
  out.nondegenerate = static_cast<int>(out.roots.size());
  return out;
}

UPoly laurent_to_upoly(const SparseSystem& s) {
  if (s.n() != 1) fail(Errc::unsupported_dimension, "univariate clearing needs n = 1");
  Int shift(0);
  for (const auto& w : s.support.vectors) shift = std::min(shift, w[0]);
  std::vector<Rat> c;
  for (int j = 0; j < s.support.count(); ++j) {
    Int e = s.support.vectors[j][0] - shift;
    unsigned long deg = e.get_ui();
    if (c.size() <= deg) c.resize(deg + 1, Rat(0));
    c[deg] += s.coeffs.at(0, j);
  }
  return UPoly(std::move(c));
}

std::pair<Poly2Q, Poly2Q> laurent_to_bivariate(const SparseSystem& s) {
  if (s.n() != 2) fail(Errc::unsupported_dimension, "bivariate clearing needs n = 2");
  std::pair<Poly2Q, Poly2Q> out;
  Int sx(0), sy(0);
  for (const auto& w : s.support.vectors) {
    sx = std::min(sx, w[0]);
    sy = std::min(sy, w[1]);
  }
  for (int eq = 0; eq < 2; ++eq) {
    Poly2Q p;
    for (int j = 0; j < s.support.count(); ++j) {
      Int ex = s.support.vectors[j][0] - sx;
      Int ey = s.support.vectors[j][1] - sy;
      p.add_term(static_cast<int>(ex.get_si()), static_cast<int>(ey.get_si()),
                 s.coeffs.at(eq, j));
    }
    (eq == 0 ? out.first : out.second) = std::move(p);
  }
  return out;
}

namespace {

struct Candidate {
  UPoly fx, fy;  // squarefree resultant factors isolating each coordinate
  QIv x, y;
};

enum class BoxVerdict { certified, empty, undecided };

// One Krawczyk test on the current box; shrinks toward the root when possible.
BoxVerdict krawczyk_step(const Poly2Q& f, const Poly2Q& g, const Poly2Q& fx0,
                         const Poly2Q& fx1, const Poly2Q& gx0, const Poly2Q& gx1,
                         Candidate& c) {
  QIv fv = eval_box(f, c.x, c.y);
  QIv gv = eval_box(g, c.x, c.y);
  if (!fv.contains_zero() || !gv.contains_zero()) return BoxVerdict::empty;

  Rat mx = c.x.mid(), my = c.y.mid();
  QMat jm(2, 2);
  jm.at(0, 0) = fx0.eval(mx, my);
  jm.at(0, 1) = fx1.eval(mx, my);
  jm.at(1, 0) = gx0.eval(mx, my);
  jm.at(1, 1) = gx1.eval(mx, my);
  Rat det = jm.at(0, 0) * jm.at(1, 1) - jm.at(0, 1) * jm.at(1, 0);
  if (det == 0) return BoxVerdict::undecided;
  Rat y00 = jm.at(1, 1) / det, y01 = -jm.at(0, 1) / det;
  Rat y10 = -jm.at(1, 0) / det, y11 = jm.at(0, 0) / det;

  QIv jb[2][2] = {{eval_box(fx0, c.x, c.y), eval_box(fx1, c.x, c.y)},
                  {eval_box(gx0, c.x, c.y), eval_box(gx1, c.x, c.y)}};
  // A = I - Y * J(box), entrywise intervals.
  QIv a00 = QIv::point(1) - (y00 * jb[0][0] + y01 * jb[1][0]);
  QIv a01 = QIv::point(0) - (y00 * jb[0][1] + y01 * jb[1][1]);
  QIv a10 = QIv::point(0) - (y10 * jb[0][0] + y11 * jb[1][0]);
  QIv a11 = QIv::point(1) - (y10 * jb[0][1] + y11 * jb[1][1]);

  Rat fm0 = f.eval(mx, my), fm1 = g.eval(mx, my);
  QIv dx = c.x - QIv::point(mx);
  QIv dy = c.y - QIv::point(my);
  QIv kx = QIv::point(mx - (y00 * fm0 + y01 * fm1)) + a00 * dx + a01 * dy;
  QIv ky = QIv::point(my - (y10 * fm0 + y11 * fm1)) + a10 * dx + a11 * dy;

  if (strict_subset(kx, c.x) && strict_subset(ky, c.y)) {
    c.x = kx;
    c.y = ky;
    return BoxVerdict::certified;
  }
  if (!intersects(kx, c.x) || !intersects(ky, c.y)) return BoxVerdict::empty;
  return BoxVerdict::undecided;
}

// Krawczyk census over all candidate boxes built from isolated coordinate roots.
BivariateCount census(const Poly2Q& f, const Poly2Q& g, const UPoly& sx, const UPoly& sy) {
  BivariateCount out;
  if (sx.degree() < 1 || sy.degree() < 1) return out;

  const Rat start_width(1, 1 << 12);
  std::vector<QIv> xs, ys;
  for (auto& [lo, hi] : isolate_real_roots(sx)) {
    auto [a, b] = refine_root(sx, lo, hi, start_width);
    xs.emplace_back(a, b);
  }
  for (auto& [lo, hi] : isolate_real_roots(sy)) {
    auto [a, b] = refine_root(sy, lo, hi, start_width);
    ys.emplace_back(a, b);
  }

  Poly2Q fx0 = f.partial(0), fx1 = f.partial(1);
  Poly2Q gx0 = g.partial(0), gx1 = g.partial(1);
  const int max_rounds = 48;
  for (const QIv& ix : xs)
    for (const QIv& iy : ys) {
      Candidate c{sx, sy, ix, iy};
      BoxVerdict verdict = BoxVerdict::undecided;
      for (int round = 0; round < max_rounds; ++round) {
        verdict = krawczyk_step(f, g, fx0, fx1, gx0, gx1, c);
        if (verdict != BoxVerdict::undecided) break;
        // Halve the certified one-root enclosures and retry.
        Rat wx = c.x.width() / 2, wy = c.y.width() / 2;
        auto [xa, xb] = refine_root(sx, c.x.lo, c.x.hi, wx);
        auto [ya, yb] = refine_root(sy, c.y.lo, c.y.hi, wy);
        c.x = QIv(xa, xb);
        c.y = QIv(ya, yb);
      }
      if (verdict == BoxVerdict::certified)
        out.boxes.push_back({c.x, c.y});
      else if (verdict == BoxVerdict::undecided)
        ++out.degenerate_suspects;
    }
  out.nondegenerate = static_cast<int>(out.boxes.size());
  return out;
}

// Resultants of the pair; fails when the common zero set has a curve component.
std::pair<UPoly, UPoly> coordinate_resultants(const Poly2Q& f, const Poly2Q& g) {
  if (f.is_zero() || g.is_zero())
    fail(Errc::zero_polynomial, "cannot count zeros of a vanishing equation");
  UPoly res_x = resultant(f, g, 1);  // candidates for the x coordinate
  UPoly res_y = resultant(f, g, 0);
  if (res_x.is_zero() || res_y.is_zero())
    fail(Errc::degenerate_system, "common zero set is positive-dimensional");
  return {res_x, res_y};
}

}  // namespace

BivariateCount count_real_bivariate(const Poly2Q& f, const Poly2Q& g) {
  auto [res_x, res_y] = coordinate_resultants(f, g);
  UPoly sx = squarefree_part(strip_valuation(res_x).second);
  UPoly sy = squarefree_part(strip_valuation(res_y).second);
  return census(f, g, sx, sy);
}

BivariateCount common_zeros(const Poly2Q& f, const Poly2Q& g) {
  auto [res_x, res_y] = coordinate_resultants(f, g);
  // Shift so no candidate coordinate sits at the origin; small denominators
  // keep the translated coefficients cheap.
  Rat a(0), b(0);
  for (long t = 0; res_x.eval(a) == 0; ++t) a = Rat(7 * t + 1, 7);
  for (long t = 0; res_y.eval(b) == 0; ++t) b = Rat(13 * t + 1, 13);
  Poly2Q ft = translate(f, a, b);
  Poly2Q gt = translate(g, a, b);
  UPoly sx = squarefree_part(resultant(ft, gt, 1));
  UPoly sy = squarefree_part(resultant(ft, gt, 0));
  BivariateCount out = census(ft, gt, sx, sy);
  for (IsolatedBox& box : out.boxes) {
    box.x = box.x + QIv::point(a);
    box.y = box.y + QIv::point(b);
  }
  return out;
}

bool tighten_box(const Poly2Q& f, const Poly2Q& g, IsolatedBox& box, const Rat& target) {
  if (target <= 0) return false;
  // Dyadic precision fine enough that outward rounding cannot stall above target.
  long p = 4;
  while (Rat(1, 1) / Rat(Int(1) << static_cast<unsigned long>(p)) > target / 8) ++p;
  Int den = Int(1) << static_cast<unsigned long>(p);
  auto dyadic = [&](const Int& num) {
    Rat q(num, den);
    q.canonicalize();
    return q;
  };
  auto round_out = [&](const QIv& v) {
    return QIv(dyadic(floor_rat(Rat(v.lo * den))), dyadic(Int(-floor_rat(Rat(-v.hi * den)))));
  };
  Poly2Q fx0 = f.partial(0), fx1 = f.partial(1);
  Poly2Q gx0 = g.partial(0), gx1 = g.partial(1);
  Candidate c{UPoly{}, UPoly{}, box.x, box.y};
  for (int round = 0; round < 64; ++round) {
    if (c.x.width() <= target && c.y.width() <= target) {
      box.x = c.x;
      box.y = c.y;
      return true;
    }
    if (krawczyk_step(f, g, fx0, fx1, gx0, gx1, c) != BoxVerdict::certified) return false;
    c.x = round_out(c.x);
    c.y = round_out(c.y);
  }
  return false;
}

OracleReport oracle_count(const SparseSystem& s) {
  OracleReport rep;
  if (s.n() == 1) {
    UnivariateCount uc = count_real_univariate(laurent_to_upoly(s));
    rep.count = uc.nondegenerate;
    rep.degenerate_suspects = uc.degenerate;
    for (const auto& r : uc.roots) {
      if (r.lo > 0) ++rep.positive_count;
      rep.approx.push_back({r.mid});
    }
  } else if (s.n() == 2) {
    auto [f, g] = laurent_to_bivariate(s);
    BivariateCount bc = count_real_bivariate(f, g);
    rep.count = bc.nondegenerate;
    rep.degenerate_suspects = bc.degenerate_suspects;
    for (const auto& b : bc.boxes) {
      if (b.x.lo > 0 && b.y.lo > 0) ++rep.positive_count;
      rep.approx.push_back({b.x.mid(), b.y.mid()});
    }
  } else {
    fail(Errc::unsupported_dimension, "exact census implemented for n <= 2");
  }

  if (s.n() <= 3) {
    rep.volume_cap = lattice::kouchnirenko_bound(s.support);
    rep.within_volume_cap = Int(rep.count) <= *rep.volume_cap;
  }
  lattice::SpanIndex parity = lattice::span_index_parity(s.support);
  if (parity.kind == lattice::SpanKind::odd) {
    rep.parity_cap = solution_bound(s.n(), s.k()).strict_int;
    rep.within_parity_cap = Int(rep.count) <= *rep.parity_cap;
  }
  return rep;
}

}  // namespace fewnomial::oracle
