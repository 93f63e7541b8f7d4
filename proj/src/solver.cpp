#include "fewnomial/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "fewnomial/error.hpp"
#include "fewnomial/interval.hpp"
#include "fewnomial/oracle.hpp"
#include "fewnomial/upoly.hpp"

namespace fewnomial {
namespace {

using Pt = std::array<double, 2>;

Pt add(const Pt& a, const Pt& b) { return {a[0] + b[0], a[1] + b[1]}; }
Pt sub(const Pt& a, const Pt& b) { return {a[0] - b[0], a[1] - b[1]}; }
Pt mul(double s, const Pt& a) { return {s * a[0], s * a[1]}; }
double dot(const Pt& a, const Pt& b) { return a[0] * b[0] + a[1] * b[1]; }
double nrm(const Pt& a) { return std::hypot(a[0], a[1]); }
Pt unit(const Pt& a) {
  double n = nrm(a);
  return n > 0 ? Pt{a[0] / n, a[1] / n} : Pt{0, 0};
}
Pt perp(const Pt& a) { return {-a[1], a[0]}; }
double seg_dist(const Pt& p, const Pt& a, const Pt& b) {
  Pt ab = sub(b, a);
  double t = dot(sub(p, a), ab) / std::max(dot(ab, ab), 1e-300);
  t = std::clamp(t, 0.0, 1.0);
  return nrm(sub(p, add(a, mul(t, ab))));
}
int sgn(double v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }
int sgn_rat(const Rat& v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

struct FormD {
  double c0 = 0, l0 = 0, l1 = 0, ln = 1;
  double eval(const Pt& y) const { return c0 + l0 * y[0] + l1 * y[1]; }
};

// Exact intersection of two form lines; nullopt when parallel.
std::optional<QVec> meet_exact(const LinearForm& a, const LinearForm& b) {
  QMat m(2, 2);
  m.at(0, 0) = a.lin[0];
  m.at(0, 1) = a.lin[1];
  m.at(1, 0) = b.lin[0];
  m.at(1, 1) = b.lin[1];
  return solve_square(m, {Rat(-a.c0), Rat(-b.c0)});
}

// 1 + largest coordinate magnitude over arrangement vertices (or roots, k = 1).
double arrangement_scale(const Arrangement& a) {
  double best = 0;
  if (a.k == 1) {
    for (const LinearForm& f : a.forms)
      best = std::max(best, std::fabs(to_double(Rat(-f.c0 / f.lin[0]))));
  } else {
    for (int i = 0; i < a.m(); ++i)
      for (int j = i + 1; j < a.m(); ++j)
        if (auto v = meet_exact(a.forms[static_cast<size_t>(i)], a.forms[static_cast<size_t>(j)]))
          best = std::max({best, std::fabs(to_double((*v)[0])), std::fabs(to_double((*v)[1]))});
  }
  return 1 + best;
}

// Shared double-precision context for tracing one master system with k = 2.
struct Frame {
  const MasterSystem* ms = nullptr;
  SolverOptions opt;
  int m = 0;
  std::vector<FormD> fd;
  std::vector<std::vector<double>> w;  // weight per (form, column)
  double scale = 1, guard = 0, rmax = 0;
  Poly2D f0, f0x, f0y;  // cleared Jacobian surface and its partials

  double psi(int col, const Pt& y) const {
    double s = 0;
    for (int i = 0; i < m; ++i) {
      double p = fd[static_cast<size_t>(i)].eval(y);
      if (p == 0) return -std::numeric_limits<double>::infinity();
      s += w[static_cast<size_t>(i)][static_cast<size_t>(col)] * std::log(std::fabs(p));
    }
    return s;
  }
  Pt psi_grad(int col, const Pt& y) const {
    Pt g{0, 0};
    for (int i = 0; i < m; ++i) {
      const FormD& f = fd[static_cast<size_t>(i)];
      double c = w[static_cast<size_t>(i)][static_cast<size_t>(col)] / f.eval(y);
      g[0] += c * f.l0;
      g[1] += c * f.l1;
    }
    return g;
  }
  // Distance to the nearest form line, normalized by the form gradient.
  double face_dist(const Pt& y, int* which = nullptr) const {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      double d = std::fabs(fd[static_cast<size_t>(i)].eval(y)) / fd[static_cast<size_t>(i)].ln;
      if (d < best) {
        best = d;
        if (which) *which = i;
      }
    }
    return best;
  }
  // Two smallest line distances; the second one measures the remaining path
  // when an arc funnels into a vertex hugging one of its lines.
  std::pair<double, double> face_dist2(const Pt& y) const {
    double b0 = std::numeric_limits<double>::infinity(), b1 = b0;
    for (int i = 0; i < m; ++i) {
      double d = std::fabs(fd[static_cast<size_t>(i)].eval(y)) / fd[static_cast<size_t>(i)].ln;
      if (d < b0) {
        b1 = b0;
        b0 = d;
      } else if (d < b1) {
        b1 = d;
      }
    }
    return {b0, b1};
  }
  std::vector<int> signs(const Pt& y) const {
    std::vector<int> s(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) s[static_cast<size_t>(i)] = sgn(fd[static_cast<size_t>(i)].eval(y));
    return s;
  }
};

Frame make_frame(const MasterSystem& ms, const Arrangement& arr, const GammaChain& chain,
                 const SolverOptions& opt) {
  Frame fr;
  fr.ms = &ms;
  fr.opt = opt;
  fr.m = ms.m();
  for (const LinearForm& f : ms.forms) {
    FormD d{to_double(f.c0), to_double(f.lin[0]), f.k() > 1 ? to_double(f.lin[1]) : 0.0, 1};
    d.ln = std::max(std::hypot(d.l0, d.l1), 1e-300);
    fr.fd.push_back(d);
  }
  fr.w.assign(static_cast<size_t>(fr.m), std::vector<double>(static_cast<size_t>(ms.k)));
  for (int i = 0; i < fr.m; ++i)
    for (int j = 0; j < ms.k; ++j)
      fr.w[static_cast<size_t>(i)][static_cast<size_t>(j)] = ms.weight_d(i, j);
  fr.scale = arrangement_scale(arr);
  fr.guard = opt.guard_rel * fr.scale;
  fr.rmax = opt.infinity_rel * fr.scale;
  if (ms.k == 2 && !chain.f.empty()) {
    fr.f0 = to_double(chain.f[0]);
    Poly2Q p0x = chain.f[0].partial(0), p0y = chain.f[0].partial(1);
    fr.f0x = to_double(p0x);
    fr.f0y = to_double(p0y);
  }
  return fr;
}

// The surface being traced: level 1 is the cleared Jacobian polynomial, level 2
// the psi_1 level set. Each level watches the next psi for sign changes.
struct LevelCurve {
  const Frame* fr = nullptr;
  int level = 1;

  double eval(const Pt& y) const {
    return level == 1 ? fr->f0.eval(y[0], y[1]) : fr->psi(0, y);
  }
  Pt grad(const Pt& y) const {
    if (level == 1) return {fr->f0x.eval(y[0], y[1]), fr->f0y.eval(y[0], y[1])};
    return fr->psi_grad(0, y);
  }
  int phi_col() const { return level - 1; }
  double phi(const Pt& y) const { return fr->psi(phi_col(), y); }
  Pt phi_grad(const Pt& y) const { return fr->psi_grad(phi_col(), y); }
};

// Newton projection onto the curve; converged when the increment is tiny.
bool correct(const LevelCurve& c, Pt& y, int iters = 40) {
  const double tol = c.fr->opt.corrector_tol;
  for (int it = 0; it < iters; ++it) {
    double h = c.eval(y);
    if (!std::isfinite(h)) return false;
    Pt g = c.grad(y);
    double g2 = dot(g, g);
    if (!(g2 > 0) || !std::isfinite(g2)) return false;
    Pt d = mul(-h / g2, g);
    y = add(y, d);
    if (nrm(d) <= tol * (1 + nrm(y))) return true;
  }
  return false;
}

double sigma_min2(double a, double b, double c, double d) {
  double t = a * a + b * b + c * c + d * d;
  double det = a * d - b * c;
  double disc = std::sqrt(std::max(t * t - 4 * det * det, 0.0));
  return std::sqrt(std::max((t - disc) / 2, 0.0));
}

// Newton on (curve, phi); returns false when the Jacobian degenerates.
bool polish_pair(const LevelCurve& c, Pt& y, double& sigma, double& phi_resid) {
  for (int it = 0; it < 60; ++it) {
    double f0 = c.eval(y), f1 = c.phi(y);
    if (!std::isfinite(f0) || !std::isfinite(f1)) return false;
    Pt g0 = c.grad(y), g1 = c.phi_grad(y);
    double det = g0[0] * g1[1] - g0[1] * g1[0];
    if (det == 0 || !std::isfinite(det)) return false;
    Pt d{(-f0 * g1[1] + f1 * g0[1]) / det, (-f1 * g0[0] + f0 * g1[0]) / det};
    y = add(y, d);
    if (nrm(d) <= 1e-15 * (1 + nrm(y))) break;
  }
  Pt g0 = c.grad(y), g1 = c.phi_grad(y);
  sigma = sigma_min2(g0[0], g0[1], g1[0], g1[1]);
  phi_resid = std::fabs(c.phi(y));
  return std::isfinite(phi_resid);
}

struct HalfTrace {
  std::vector<Pt> samples;
  ArcEnd end;
  int end_phi_sign = 0;  // sign of the watched psi at the last interior sample
  bool closed = false;
  bool ok = true;
  std::string note;
  std::vector<std::pair<Pt, Pt>> brackets;
  long steps = 0;
};

// Endpoint landing: identify the vanishing forms and snap onto the face.
ArcEnd classify_face_end(const Frame& fr, const LevelCurve& c, Pt y) {
  ArcEnd e;
  const double member_tol = 1e-6 * fr.scale;
  for (int i = 0; i < fr.m; ++i)
    if (std::fabs(fr.fd[static_cast<size_t>(i)].eval(y)) / fr.fd[static_cast<size_t>(i)].ln <
        member_tol)
      e.members.push_back(i);
  if (e.members.empty()) {
    int which = 0;
    fr.face_dist(y, &which);
    e.members.push_back(which);
  }
  if (e.members.size() >= 2) {
    e.kind = EndKind::vertex;
    auto v = meet_exact(fr.ms->forms[static_cast<size_t>(e.members[0])],
                        fr.ms->forms[static_cast<size_t>(e.members[1])]);
    if (v) y = {to_double((*v)[0]), to_double((*v)[1])};
  } else {
    e.kind = EndKind::face;
    // One projected Newton pass onto (curve, face).
    const FormD& f = fr.fd[static_cast<size_t>(e.members[0])];
    for (int it = 0; it < 20; ++it) {
      double h = c.level == 1 ? c.eval(y) : 0.0;  // psi blows up; hold the line only
      double p = f.eval(y);
      Pt g = c.level == 1 ? c.grad(y) : perp(Pt{f.l0, f.l1});
      double det = g[0] * f.l1 - g[1] * f.l0;
      if (det == 0 || !std::isfinite(det)) break;
      Pt d{(-h * f.l1 + p * g[1]) / det, (-p * g[0] + h * f.l0) / det};
      y = add(y, d);
      if (nrm(d) <= 1e-15 * (1 + nrm(y))) break;
    }
  }
  e.at = y;
  return e;
}

HalfTrace trace_half(const LevelCurve& c, const Pt& start, const Pt& dir0, bool allow_close) {
  const Frame& fr = *c.fr;
  const SolverOptions& o = fr.opt;
  HalfTrace out;

  Pt y = start;
  out.samples.push_back(y);
  double phi_prev = c.phi(y);
  int sign_prev = sgn(phi_prev);
  Pt t_prev = dir0;
  Pt y_prev = y;

  double h = o.init_step_rel * fr.scale;
  double d0 = fr.face_dist(start);
  if (std::isfinite(d0) && d0 > 0) h = std::min(h, std::max(0.25 * d0, 8 * o.min_step));
  const double hmax = o.max_step_rel * fr.scale;
  const double escape = 0.5 * o.init_step_rel * fr.scale;
  const double squeeze_floor = 10 * o.squeeze_rel * fr.scale;
  bool escaped = false;
  bool squeezing = false;
  bool outbound = false;
  Pt bb_lo = start, bb_hi = start;
  size_t stride = 1, since_kept = 0;

  while (out.steps < o.max_steps) {
    ++out.steps;
    Pt g = c.grad(y);
    Pt tau = unit(perp(g));
    if (!(nrm(tau) > 0) || !std::isfinite(tau[0]) || !std::isfinite(tau[1])) {
      out.ok = false;
      out.note = "tangent degenerated mid-arc";
      break;
    }
    if (dot(tau, t_prev) < 0) tau = mul(-1.0, tau);

    Pt yp = add(y, mul(h, tau));
    Pt yc = yp;
    bool accept = correct(c, yc) && nrm(sub(yc, yp)) <= 0.75 * h;
    if (accept) {
      // The curve never crosses a form line; a sign flip is a jump artifact.
      for (int i = 0; accept && i < fr.m; ++i) {
        int sa = sgn(fr.fd[static_cast<size_t>(i)].eval(y));
        int sb = sgn(fr.fd[static_cast<size_t>(i)].eval(yc));
        if (sa != 0 && sb != 0 && sa != sb) accept = false;
      }
    }
    if (!accept) {
      h /= 2;
      if (h < o.min_step) {
        out.ok = false;
        out.note = "step collapse";
        break;
      }
      continue;
    }

    y_prev = y;
    y = yc;
    t_prev = tau;
    if (++since_kept >= stride) {
      since_kept = 0;
      out.samples.push_back(y);
      if (out.samples.size() > 100000) {
        std::vector<Pt> thin;
        for (size_t i = 0; i < out.samples.size(); i += 2) thin.push_back(out.samples[i]);
        out.samples.swap(thin);
        stride *= 2;
      }
    }

    double phi_cur = c.phi(y);
    int sign_cur = sgn(phi_cur);
    if (sign_cur == 0) sign_cur = -sign_prev;  // exact zero sample still brackets
    if (sign_prev != 0 && sign_cur != sign_prev) out.brackets.emplace_back(y_prev, y);
    sign_prev = sign_cur;

    double d = fr.face_dist(y);
    if (d < squeeze_floor) {
      out.end = classify_face_end(fr, c, y);
      out.end_phi_sign = sign_cur;
      out.samples.push_back(out.end.at);
      return out;
    }
    if (d < fr.guard) squeezing = true;
    if (squeezing && d > 20 * fr.guard) squeezing = false;  // near miss, resume
    double r = nrm(y);
    if (!squeezing && r > fr.rmax) outbound = true;
    if (outbound) {
      if (r > 1e4 * fr.rmax) {
        out.end.kind = EndKind::infinity;
        out.end.members = {fr.m};
        out.end.at = unit(y);
        out.end_phi_sign = sign_cur;
        return out;
      }
      h = 0.5 * r;
    } else if (squeezing) {
      double d2 = fr.face_dist2(y).second;
      double rem = d2 < 1e-4 * fr.scale ? d2 : d;
      h = std::max(0.35 * rem, o.min_step);
    } else {
      h = std::min(h * 1.5, hmax);
    }

    if (allow_close) {
      // Closure: a chord entered after escaping passes back through the start
      // with the starting orientation. The same-step escape must not count, or
      // the first chord (which begins at the start) closes everything at once.
      bool was_escaped = escaped;
      if (!escaped && nrm(sub(y, start)) > escape) escaped = true;
      if (was_escaped && seg_dist(start, y_prev, y) < 0.15 * h && dot(tau, dir0) > 0.7) {
        out.closed = true;
        out.samples.push_back(start);
        return out;
      }
      bb_lo = {std::min(bb_lo[0], y[0]), std::min(bb_lo[1], y[1])};
      bb_hi = {std::max(bb_hi[0], y[0]), std::max(bb_hi[1], y[1])};
      // An oval too small to escape still closes once it has clearly orbited.
      if (!escaped && out.steps > 500 &&
          std::hypot(bb_hi[0] - bb_lo[0], bb_hi[1] - bb_lo[1]) < escape) {
        out.closed = true;
        out.samples.push_back(start);
        return out;
      }
    }
  }
  if (out.steps >= o.max_steps) {
    out.ok = false;
    out.note = "step budget exhausted";
  }
  out.end.kind = EndKind::loop;  // abandoned; caller flags via ok
  out.end.at = y;
  out.end_phi_sign = sign_prev;
  return out;
}

struct FullTrace {
  Arc arc;
  std::vector<std::pair<Pt, Pt>> brackets;
  int head_phi_sign = 0, tail_phi_sign = 0;
  bool ok = true;
  std::string note;
};

FullTrace trace_full(const LevelCurve& c, Pt seed) {
  FullTrace out;
  if (!correct(c, seed)) {
    out.ok = false;
    out.note = "seed failed to land on the curve";
    return out;
  }
  Pt tau = unit(perp(c.grad(seed)));
  if (!(nrm(tau) > 0)) {
    out.ok = false;
    out.note = "seed sits on a singular curve point";
    return out;
  }
  HalfTrace a = trace_half(c, seed, tau, true);
  out.brackets = a.brackets;
  if (!a.ok) {
    out.ok = false;
    out.note = a.note;
  }
  if (a.closed) {
    out.arc.samples = a.samples;
    out.arc.closed = true;
    out.arc.head.kind = out.arc.tail.kind = EndKind::loop;
    return out;
  }
  HalfTrace b = trace_half(c, seed, mul(-1.0, tau), false);
  for (const auto& br : b.brackets) out.brackets.push_back(br);
  if (!b.ok) {
    out.ok = false;
    out.note = out.note.empty() ? b.note : out.note + "; " + b.note;
  }
  out.arc.samples.assign(a.samples.rbegin(), a.samples.rend());
  out.arc.samples.insert(out.arc.samples.end(), b.samples.begin() + 1, b.samples.end());
  out.arc.head = a.end;
  out.arc.tail = b.end;
  out.head_phi_sign = a.end_phi_sign;
  out.tail_phi_sign = b.end_phi_sign;
  return out;
}

long quant(double v, double cell) { return std::lround(v / cell); }

// Stable token for one arc end; the interior sample disambiguates the side of
// a face and the quadrant at a vertex.
std::string end_token(const Frame& fr, const ArcEnd& e, const Pt& interior) {
  std::ostringstream os;
  double cell = 1e-5 * fr.scale;
  if (e.kind == EndKind::infinity) {
    os << "I " << quant(e.at[0], 1e-6) << " " << quant(e.at[1], 1e-6);
    return os.str();
  }
  os << (e.kind == EndKind::vertex ? "V" : "F");
  for (int t : e.members) os << " " << t << ":" << sgn(fr.fd[static_cast<size_t>(t)].eval(interior));
  os << " " << quant(e.at[0], cell) << " " << quant(e.at[1], cell);
  return os.str();
}

std::string arc_signature(const Frame& fr, const Arc& arc) {
  if (arc.closed) {
    Pt lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    for (const Pt& p : arc.samples)
      if (p[0] < lo[0] || (p[0] == lo[0] && p[1] < lo[1])) lo = p;
    std::ostringstream os;
    os << "L " << quant(lo[0], 1e-3 * fr.scale) << " " << quant(lo[1], 1e-3 * fr.scale);
    return os.str();
  }
  size_t n = arc.samples.size();
  const Pt& near_head = arc.samples[std::min<size_t>(5, n - 1)];
  const Pt& near_tail = arc.samples[n - 1 - std::min<size_t>(5, n - 1)];
  std::string ha = end_token(fr, arc.head, near_head);
  std::string hb = end_token(fr, arc.tail, near_tail);
  if (hb < ha) std::swap(ha, hb);
  return ha + " | " + hb;
}

// Bisection along the curve between two on-curve samples straddling a phi zero.
std::optional<Pt> bisect_on_curve(const LevelCurve& c, Pt a, Pt b) {
  double fa = c.phi(a);
  double fb = c.phi(b);
  if (sgn(fa) * sgn(fb) >= 0) return std::nullopt;
  Pt mid = a;
  for (int it = 0; it < 100; ++it) {
    mid = mul(0.5, add(a, b));
    if (!correct(c, mid)) return std::nullopt;
    if (nrm(sub(a, b)) < 1e-14 * (1 + nrm(mid))) return mid;
    double fm = c.phi(mid);
    if (sgn(fm) == 0) return mid;
    if (sgn(fm) == sgn(fa)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
      fb = fm;
    }
  }
  return mid;
}

// Expected sign of the watched psi just short of an arc end, from the exact
// weights; 0 when the local expansion leaves the sign open.
int analytic_end_sign(const Frame& fr, int level, const ArcEnd& e) {
  const QMat& b = fr.ms->b;
  int col = level - 1;
  Rat cs0(0), cs1(0);
  for (int i = 0; i < fr.m; ++i) {
    cs0 += b.at(i, 0);
    cs1 += b.at(i, col);
  }
  if (e.kind == EndKind::face) {
    return -sgn_rat(b.at(e.members[0], col));
  }
  if (e.kind == EndKind::vertex) {
    if (level != 2 || e.members.size() < 2) return 0;
    int ia = e.members[0], ib = e.members[1];
    if (b.at(ia, 0) == 0) return 0;
    Rat expr = Rat(b.at(ib, col) * b.at(ia, 0) - b.at(ia, col) * b.at(ib, 0)) / b.at(ia, 0);
    return -sgn_rat(expr);
  }
  if (e.kind == EndKind::infinity) {
    // Asymptotic to a line: the balance along the level set fixes the ratio.
    if (level == 2) {
      double r = std::max(nrm(e.at), 1.0) * 1e4 * fr.rmax;
      Pt far = mul(1e4 * fr.rmax, e.at);
      for (int t = 0; t < fr.m; ++t) {
        const FormD& f = fr.fd[static_cast<size_t>(t)];
        if (std::fabs(f.eval(far)) / (f.ln * r) < 1e-3) {
          if (b.at(t, 0) == 0) return 0;
          Rat expr = Rat(cs1 * b.at(t, 0) - b.at(t, col) * cs0) / b.at(t, 0);
          return sgn_rat(expr);
        }
      }
      if (cs0 == 0) return sgn_rat(cs1);
      return 0;
    }
    return sgn_rat(cs1);
  }
  return 0;
}

void dedupe_sorted(std::vector<MasterSolution>& v, double tol) {
  std::sort(v.begin(), v.end(), [](const MasterSolution& a, const MasterSolution& b) {
    return a.y < b.y;
  });
  std::vector<MasterSolution> kept;
  for (const MasterSolution& s : v) {
    bool dup = false;
    for (const MasterSolution& k : kept) {
      double d = 0, sc = 1;
      for (size_t i = 0; i < s.y.size(); ++i) {
        d = std::max(d, std::fabs(s.y[i] - k.y[i]));
        sc = std::max(sc, std::fabs(k.y[i]));
      }
      if (d <= tol * sc) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(s);
  }
  v.swap(kept);
}

// Exact test: does some common zero of the restricted chain lie inside the box
// on the given form line?
bool gamma_zero_on_line(const GammaChain& chain, const LinearForm& f, const oracle::IsolatedBox& b) {
  QVec base, dir{f.lin[1], Rat(-f.lin[0])};
  if (f.lin[1] != 0)
    base = {Rat(0), Rat(-f.c0 / f.lin[1])};
  else
    base = {Rat(-f.c0 / f.lin[0]), Rat(0)};
  UPoly ra = restrict_to_line(chain.f[0], base, dir);
  UPoly rb = restrict_to_line(chain.f[1], base, dir);
  if (ra.is_zero() || rb.is_zero())
    fail(Errc::genericity_violation, "chain surface contains an arrangement line");
  UPoly g = poly_gcd(ra, rb);
  if (g.degree() < 1) return false;
  auto [gv, g0] = strip_valuation(g);
  UPoly sg = squarefree_part(g0);
  auto hits = [&](const Rat& lo, const Rat& hi) {
    // Point interval base + [lo, hi] * dir against the box.
    QIv t(lo, hi);
    QIv px = QIv::point(base[0]) + dir[0] * t;
    QIv py = QIv::point(base[1]) + dir[1] * t;
    return intersects(px, b.x) && intersects(py, b.y);
  };
  if (gv > 0 && hits(Rat(0), Rat(0))) return true;
  if (sg.degree() < 1) return false;
  for (auto [lo, hi] : isolate_real_roots(sg)) {
    Rat a = lo, c = hi;
    for (int round = 0; round < 80 && hits(a, c); ++round) {
      if (Rat(c - a) == 0) return true;
      auto [l2, h2] = refine_root(sg, a, c, Rat(Rat(c - a) / 4));
      a = l2;
      c = h2;
    }
    if (hits(a, c)) return true;
  }
  return false;
}

}  // namespace

int SolutionSet::observed_budget() const {
  int f = 0;
  for (int v : flat_observed) f += v;
  return gamma.count + f;
}

GammaZeros solve_gamma_system(const MasterSystem& ms, const GammaChain& chain,
                              const Arrangement& a, const SolverOptions& opt) {
  (void)opt;
  GammaZeros out;
  if (chain.f.empty()) fail(Errc::bad_input, "empty chain");
  if (chain.k == 1) {
    UPoly f = as_univariate(chain.f[0], 0);
    if (f.is_zero()) fail(Errc::genericity_violation, "jacobian polynomial vanishes identically");
    for (int t = 0; t < a.m(); ++t) {
      const LinearForm& fm = a.forms[static_cast<size_t>(t)];
      Rat r(-fm.c0 / fm.lin[0]);
      if (f.eval(r) != 0) continue;
      // A vanishing first-column weight forces the jacobian numerator to zero
      // at this wall. The point sits on the arrangement, not in the domain the
      // census counts over, so peel the forced factor off; a second vanishing
      // order, or a zero at a wall with nonzero weight, is real degeneracy.
      if (ms.b.at(t, 0) != 0)
        fail(Errc::genericity_violation, "jacobian zero on the arrangement");
      f = divmod(f, UPoly({Rat(-r), Rat(1)})).first;
      if (f.is_zero() || f.eval(r) == 0)
        fail(Errc::genericity_violation, "jacobian zero on the arrangement");
    }
    auto [v, f0] = strip_valuation(f);
    if (v > 0) out.points.push_back({0.0});
    UPoly sf = squarefree_part(f0);
    if (sf.degree() >= 1) {
      const Rat width(Int(1), Int(1) << 44);
      for (auto [lo, hi] : isolate_real_roots(sf)) {
        auto [l2, h2] = refine_root(sf, lo, hi, width);
        out.points.push_back({to_double(Rat((l2 + h2) / 2))});
      }
    }
    std::sort(out.points.begin(), out.points.end());
    out.count = static_cast<int>(out.points.size());
    return out;
  }

  auto bc = oracle::common_zeros(chain.f[0], chain.f[1]);
  out.suspects = bc.degenerate_suspects;
  for (oracle::IsolatedBox box : bc.boxes) {
    bool keep = true;
    for (int round = 0; round < 200; ++round) {
      int offending = -1;
      for (int t = 0; t < a.m(); ++t) {
        const LinearForm& fm = a.forms[static_cast<size_t>(t)];
        QIv pv = QIv::point(fm.c0) + fm.lin[0] * box.x + fm.lin[1] * box.y;
        if (pv.contains_zero()) {
          offending = t;
          break;
        }
      }
      if (offending < 0) break;
      Rat wmin = std::min(box.x.width(), box.y.width());
      if (wmin < Rat(Int(1), Int(1) << 100) || round > 60) {
        if (gamma_zero_on_line(chain, a.forms[static_cast<size_t>(offending)], box)) {
          // A vanishing first-column weight forces the second chain polynomial
          // to zero wherever the first meets this line, so the box holds a
          // clearing artifact on the arrangement, not a census member: drop it.
          // With a nonzero weight a shared on-line zero is real degeneracy.
          if (ms.b.at(offending, 0) == 0) {
            keep = false;
            break;
          }
          fail(Errc::genericity_violation, "jacobian zero on the arrangement");
        }
      }
      if (!oracle::tighten_box(chain.f[0], chain.f[1], box, Rat(wmin / 4))) {
        ++out.suspects;
        keep = false;
        break;
      }
    }
    if (keep) out.points.push_back({to_double(box.x.mid()), to_double(box.y.mid())});
  }
  std::sort(out.points.begin(), out.points.end());
  out.count = static_cast<int>(out.points.size());
  Int cap = kr_ledger(chain.n, chain.k).gamma_term;
  if (Int(out.count) > cap) fail(Errc::solver_stall, "jacobian census exceeds its degree cap");
  return out;
}

std::vector<BoundaryStart> boundary_starts(const MasterSystem& ms, const GammaChain& chain,
                                           const Arrangement& a, int j, const SolverOptions& opt) {
  if (j < 1 || j > ms.k) fail(Errc::bad_input, "face codimension out of range");
  std::vector<BoundaryStart> out;
  double scale = arrangement_scale(a);
  double delta = opt.seed_offset_rel * scale;
  double far = 8 * scale;

  if (ms.k == 1) {
    for (int t = 0; t < a.m(); ++t) {
      const LinearForm& fm = a.forms[static_cast<size_t>(t)];
      double r = to_double(Rat(-fm.c0 / fm.lin[0]));
      out.push_back({{t}, {r, 0.0}, {{r - delta, 0.0}, {r + delta, 0.0}}});
    }
    out.push_back({{a.infinity_index()}, {1.0, 0.0}, {{-far, 0.0}, {far, 0.0}}});
    return out;
  }

  if (j == 1) {
    for (int t = 0; t < a.m(); ++t) {
      const LinearForm& fm = a.forms[static_cast<size_t>(t)];
      QVec dir{fm.lin[1], Rat(-fm.lin[0])};
      QVec base = fm.lin[1] != 0 ? QVec{Rat(0), Rat(-fm.c0 / fm.lin[1])}
                                 : QVec{Rat(-fm.c0 / fm.lin[0]), Rat(0)};
      UPoly rest = restrict_to_line(chain.f[0], base, dir);
      if (rest.is_zero())
        fail(Errc::genericity_violation, "chain surface contains an arrangement line");
      // A chain zero at a vertex breaks the face/vertex separation.
      for (int u = 0; u < a.m(); ++u) {
        if (u == t) continue;
        const LinearForm& fu = a.forms[static_cast<size_t>(u)];
        Rat den = fu.lin[0] * dir[0] + fu.lin[1] * dir[1];
        if (den == 0) continue;
        Rat q = Rat(-(fu.c0 + fu.lin[0] * base[0] + fu.lin[1] * base[1]) / den);
        if (rest.eval(q) == 0)
          fail(Errc::genericity_violation, "curve end collides with a vertex");
      }
      auto [v, r0] = strip_valuation(rest);
      std::vector<Rat> params;
      if (v > 0) params.push_back(Rat(0));
      UPoly sf = squarefree_part(r0);
      if (sf.degree() >= 1) {
        const Rat width(Int(1), Int(1) << 40);
        for (auto [lo, hi] : isolate_real_roots(sf)) {
          auto [l2, h2] = refine_root(sf, lo, hi, width);
          params.push_back(Rat((l2 + h2) / 2));
        }
      }
      std::sort(params.begin(), params.end());
      double nx = to_double(fm.lin[0]), ny = to_double(fm.lin[1]);
      double nl = std::hypot(nx, ny);
      for (const Rat& q : params) {
        Pt p{to_double(Rat(base[0] + q * dir[0])), to_double(Rat(base[1] + q * dir[1]))};
        Pt off{delta * nx / nl, delta * ny / nl};
        out.push_back({{t}, p, {add(p, off), sub(p, off)}});
      }
    }
    // Far face: asymptotic directions from the top form.
    int d = chain.f[0].total_degree();
    UPoly top;
    std::vector<Rat> cs(static_cast<size_t>(d) + 1, Rat(0));
    for (const auto& [e, cf] : chain.f[0].t)
      if (e.first + e.second == d) cs[static_cast<size_t>(e.second)] = cf;
    top = UPoly{cs};
    std::vector<Pt> dirs;
    if (!top.is_zero()) {
      auto [tv, t0] = strip_valuation(top);
      std::vector<Rat> roots;
      if (tv > 0) roots.push_back(Rat(0));
      UPoly st = squarefree_part(t0);
      if (st.degree() >= 1) {
        const Rat width(Int(1), Int(1) << 40);
        for (auto [lo, hi] : isolate_real_roots(st)) {
          auto [l2, h2] = refine_root(st, lo, hi, width);
          roots.push_back(Rat((l2 + h2) / 2));
        }
      }
      for (const Rat& s : roots) dirs.push_back(unit(Pt{1.0, to_double(s)}));
      if (chain.f[0].coeff(0, d) == 0 && d > 0) dirs.push_back({0.0, 1.0});
    }
    for (const Pt& u : dirs)
      out.push_back({{a.infinity_index()}, u, {mul(far, u), mul(-far, u)}});
    return out;
  }

  // j == 2: vertices whose first-column weights change sign host level-2 ends.
  for (int t = 0; t < a.m(); ++t)
    for (int u = t + 1; u < a.m(); ++u) {
      Rat wt = ms.b.at(t, 0), wu = ms.b.at(u, 0);
      if (!(wt * wu < 0)) continue;
      auto v = meet_exact(ms.forms[static_cast<size_t>(t)], ms.forms[static_cast<size_t>(u)]);
      if (!v) continue;
      Pt vp{to_double((*v)[0]), to_double((*v)[1])};
      BoundaryStart bs{{t, u}, vp, {}};
      QMat mm(2, 2);
      mm.at(0, 0) = ms.forms[static_cast<size_t>(t)].lin[0];
      mm.at(0, 1) = ms.forms[static_cast<size_t>(t)].lin[1];
      mm.at(1, 0) = ms.forms[static_cast<size_t>(u)].lin[0];
      mm.at(1, 1) = ms.forms[static_cast<size_t>(u)].lin[1];
      for (int sa : {1, -1})
        for (int sb : {1, -1}) {
          auto wdir = solve_square(mm, {Rat(sa), Rat(sb)});
          if (!wdir) continue;
          Pt wd = unit(Pt{to_double((*wdir)[0]), to_double((*wdir)[1])});
          bs.seeds.push_back(add(vp, mul(delta, wd)));
        }
      out.push_back(bs);
    }
  return out;
}

TraceOutcome trace_curve(const MasterSystem& ms, const GammaChain& chain, int level,
                         const Point2& seed, const SolverOptions& opt) {
  if (ms.k != 2 || (level != 1 && level != 2)) fail(Errc::bad_input, "tracing needs k = 2");
  Arrangement arr = make_arrangement(ms);
  Frame fr = make_frame(ms, arr, chain, opt);
  LevelCurve c{&fr, level};
  FullTrace ft = trace_full(c, seed);
  TraceOutcome out;
  out.arc = ft.arc;
  out.ok = ft.ok;
  out.note = ft.note;
  for (const auto& [p, q] : ft.brackets) out.brackets.emplace_back(p, q);
  return out;
}

namespace {

// Ring crossing points of psi_1 = 0 on a circle outside every vertex; one seed
// per transversal crossing, segments split at the arrangement poles.
std::vector<Pt> ring_seeds(const Frame& fr) {
  double R = 4 * fr.scale;
  std::vector<double> cuts;
  for (int t = 0; t < fr.m; ++t) {
    const FormD& f = fr.fd[static_cast<size_t>(t)];
    double amp = R * f.ln;
    if (std::fabs(f.c0) >= amp) continue;
    double phase = std::atan2(f.l1, f.l0);
    double off = std::acos(-f.c0 / amp);
    cuts.push_back(phase + off);
    cuts.push_back(phase - off);
  }
  const double tau = 2 * std::acos(-1.0);
  for (double& c : cuts) c = std::fmod(std::fmod(c, tau) + tau, tau);
  std::sort(cuts.begin(), cuts.end());
  if (cuts.empty()) cuts.push_back(0);
  auto at = [&](double th) { return Pt{R * std::cos(th), R * std::sin(th)}; };
  std::vector<Pt> seeds;
  for (size_t i = 0; i < cuts.size(); ++i) {
    double a = cuts[i];
    double b = i + 1 < cuts.size() ? cuts[i + 1] : cuts[0] + tau;
    double span = b - a;
    if (span <= 0) continue;
    // Uniform interior samples plus geometric tails toward both poles.
    std::vector<double> ts;
    for (int s = 1; s < 48; ++s) ts.push_back(s / 48.0);
    for (int s = 2; s < 42; ++s) {
      ts.push_back(std::pow(0.5, s));
      ts.push_back(1 - std::pow(0.5, s));
    }
    std::sort(ts.begin(), ts.end());
    double prev_t = ts.front();
    double prev_v = fr.psi(0, at(a + span * prev_t));
    for (size_t s = 1; s < ts.size(); ++s) {
      double cur_t = ts[s];
      double cur_v = fr.psi(0, at(a + span * cur_t));
      if (sgn(prev_v) * sgn(cur_v) < 0) {
        double lo = prev_t, hi = cur_t, flo = prev_v;
        for (int it = 0; it < 100; ++it) {
          double mid = (lo + hi) / 2;
          double fm = fr.psi(0, at(a + span * mid));
          if (sgn(fm) == sgn(flo)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        seeds.push_back(at(a + span * (lo + hi) / 2));
      }
      prev_t = cur_t;
      prev_v = cur_v;
    }
  }
  return seeds;
}

// Level-2 ends interior to a line whose first-column weight vanishes: psi_1
// stays finite there, so its zeros along the line are curve endpoints.
std::vector<BoundaryStart> zero_weight_line_starts(const Frame& fr, const SolverOptions& opt) {
  std::vector<BoundaryStart> out;
  const MasterSystem& ms = *fr.ms;
  for (int t = 0; t < fr.m; ++t) {
    if (!(ms.b.at(t, 0) == 0)) continue;
    const FormD& f = fr.fd[static_cast<size_t>(t)];
    Pt base = f.l1 != 0 ? Pt{0, -f.c0 / f.l1} : Pt{-f.c0 / f.l0, 0};
    Pt dir = unit(Pt{f.l1, -f.l0});
    double T = 5 * fr.scale;
    auto at = [&](double s) { return add(base, mul(s, dir)); };
    auto val = [&](double s) {
      Pt y = at(s);
      double acc = 0;
      for (int i = 0; i < fr.m; ++i) {
        if (i == t) continue;
        double p = fr.fd[static_cast<size_t>(i)].eval(y);
        if (p == 0) return std::numeric_limits<double>::infinity();
        acc += fr.w[static_cast<size_t>(i)][0] * std::log(std::fabs(p));
      }
      return acc;
    };
    const int N = 1024;
    double prev_s = -T, prev_v = val(prev_s);
    for (int i = 1; i <= N; ++i) {
      double cur_s = -T + 2 * T * i / N;
      double cur_v = val(cur_s);
      if (std::isfinite(prev_v) && std::isfinite(cur_v) && sgn(prev_v) * sgn(cur_v) < 0) {
        // No pole between the samples: skip spans crossing another line.
        bool pole = false;
        for (int u = 0; u < fr.m && !pole; ++u) {
          if (u == t) continue;
          double pa = fr.fd[static_cast<size_t>(u)].eval(at(prev_s));
          double pb = fr.fd[static_cast<size_t>(u)].eval(at(cur_s));
          if (sgn(pa) != sgn(pb)) pole = true;
        }
        if (!pole) {
          double lo = prev_s, hi = cur_s, flo = prev_v;
          for (int it = 0; it < 100; ++it) {
            double mid = (lo + hi) / 2;
            double fm = val(mid);
            if (sgn(fm) == sgn(flo)) {
              lo = mid;
              flo = fm;
            } else {
              hi = mid;
            }
          }
          Pt p = at((lo + hi) / 2);
          double delta = opt.seed_offset_rel * fr.scale;
          Pt off{delta * f.l0 / f.ln, delta * f.l1 / f.ln};
          out.push_back({{t}, p, {add(p, off), sub(p, off)}});
        }
      }
      prev_s = cur_s;
      prev_v = cur_v;
    }
  }
  return out;
}

struct LevelSweep {
  CurveTrace trace;
  std::vector<std::pair<Pt, Pt>> brackets;
  std::vector<std::string> notes;
  bool ok = true;
};

LevelSweep sweep_level(const Frame& fr, int level, const std::vector<Pt>& seeds) {
  LevelSweep out;
  out.trace.level = level;
  LevelCurve c{&fr, level};
  std::set<std::string> sigs;
  for (const Pt& seed : seeds) {
    FullTrace ft = trace_full(c, seed);
    if (!ft.ok) {
      out.ok = false;
      if (!ft.note.empty()) out.notes.push_back(ft.note);
      if (ft.arc.samples.empty()) continue;
    }
    for (const auto& br : ft.brackets) out.brackets.push_back(br);
    if (ft.arc.samples.empty()) continue;
    std::string sig = arc_signature(fr, ft.arc);
    if (!sigs.insert(sig).second) continue;
    if (ft.arc.closed) {
      // A loop re-traced from another seed lands on the same polyline; its
      // brackets are already collected, so only the duplicate arc is dropped.
      bool dup = false;
      const Pt& probe = ft.arc.samples.front();
      for (const Arc& ex : out.trace.arcs) {
        if (!ex.closed) continue;
        double best = std::numeric_limits<double>::infinity();
        for (const Pt& q : ex.samples) best = std::min(best, nrm(sub(probe, q)));
        if (best < 0.05 * fr.scale) {
          dup = true;
          break;
        }
      }
      if (dup) continue;
    }
    // Ends whose forced blowup sign disagrees with the traced sign hide a zero
    // beyond numeric resolution.
    if (!ft.arc.closed && ft.ok) {
      int ah = analytic_end_sign(fr, level, ft.arc.head);
      int at = analytic_end_sign(fr, level, ft.arc.tail);
      if ((ah != 0 && ft.head_phi_sign != 0 && ah != ft.head_phi_sign) ||
          (at != 0 && ft.tail_phi_sign != 0 && at != ft.tail_phi_sign)) {
        out.ok = false;
        out.notes.push_back("sign unresolved at an arc end");
      }
    }
    out.trace.arcs.push_back(ft.arc);
  }
  for (const Arc& a : out.trace.arcs)
    if (!a.closed) ++out.trace.flat;
  return out;
}

SolutionSet solve_master_k2(const MasterSystem& ms, const Arrangement& arr,
                            const GammaChain& chain, const SolverOptions& opt) {
  Frame fr = make_frame(ms, arr, chain, opt);
  SolutionSet out;
  out.n = chain.n;
  out.k = 2;
  out.gamma = solve_gamma_system(ms, chain, arr, opt);
  if (out.gamma.suspects > 0) {
    out.verified = false;
    out.notes.push_back("jacobian census left uncertified boxes");
  }

  // Level 1: trace the cleared Jacobian surface, collect psi_1 sign changes.
  std::vector<Pt> seeds1;
  for (const BoundaryStart& bs : boundary_starts(ms, chain, arr, 1, opt))
    for (const auto& s : bs.seeds) seeds1.push_back({s[0], s[1]});
  for (const auto& g : out.gamma.points) seeds1.push_back({g[0], g[1]});
  LevelSweep s1 = sweep_level(fr, 1, seeds1);
  if (!s1.ok) out.verified = false;
  for (const std::string& n : s1.notes) out.notes.push_back(n);

  LevelCurve c1{&fr, 1};
  std::vector<MasterSolution> marks;
  for (const auto& [pa, pb] : s1.brackets) {
    auto pt = bisect_on_curve(c1, pa, pb);
    if (!pt) {
      out.verified = false;
      out.notes.push_back("a level-1 bracket failed to converge");
      continue;
    }
    Pt y = *pt;
    double sigma = 0, resid = 0;
    if (!polish_pair(c1, y, sigma, resid)) {
      out.verified = false;
      out.notes.push_back("a level-1 mark failed to polish");
      continue;
    }
    if (resid > 1e-8) {
      out.verified = false;
      out.notes.push_back("a level-1 mark kept a large residual");
    }
    MasterSolution m;
    m.y = {y[0], y[1]};
    m.residual = resid;
    m.sigma_min = sigma;
    m.signs = fr.signs(y);
    marks.push_back(m);
  }
  dedupe_sorted(marks, opt.dedupe_tol);
  s1.trace.marks.clear();
  for (const MasterSolution& m : marks) s1.trace.marks.push_back(m.y);
  if (static_cast<int>(marks.size()) > s1.trace.flat + out.gamma.count + out.gamma.suspects) {
    out.verified = false;
    out.notes.push_back("level-1 marks exceed their rolle budget");
  }

  // Level 2: trace the psi_1 level set from vertex branches, interior marks,
  // zero-weight line ends, and the far ring.
  std::vector<Pt> seeds2;
  for (const BoundaryStart& bs : boundary_starts(ms, chain, arr, 2, opt))
    for (const auto& s : bs.seeds) seeds2.push_back({s[0], s[1]});
  for (const BoundaryStart& bs : zero_weight_line_starts(fr, opt))
    for (const auto& s : bs.seeds) seeds2.push_back({s[0], s[1]});
  for (const MasterSolution& m : marks) seeds2.push_back({m.y[0], m.y[1]});
  for (const Pt& p : ring_seeds(fr)) seeds2.push_back(p);
  LevelSweep s2 = sweep_level(fr, 2, seeds2);
  if (!s2.ok) out.verified = false;
  for (const std::string& n : s2.notes) out.notes.push_back(n);

  LevelCurve c2{&fr, 2};
  std::vector<MasterSolution> sols, suspects;
  for (const auto& [pa, pb] : s2.brackets) {
    auto pt = bisect_on_curve(c2, pa, pb);
    if (!pt) {
      out.verified = false;
      out.notes.push_back("a level-2 bracket failed to converge");
      continue;
    }
    Pt y = *pt;
    double sigma = 0, resid = 0;
    if (!polish_pair(c2, y, sigma, resid)) {
      out.verified = false;
      out.notes.push_back("a candidate failed to polish");
      continue;
    }
    MasterSolution m;
    m.y = {y[0], y[1]};
    m.residual = std::max(std::fabs(fr.psi(0, y)), std::fabs(fr.psi(1, y)));
    m.sigma_min = sigma;
    m.signs = fr.signs(y);
    if (m.residual > opt.newton_tol) {
      out.verified = false;
      out.notes.push_back("a candidate kept a large residual");
      suspects.push_back(m);
    } else if (sigma < opt.degen_tol) {
      suspects.push_back(m);
    } else {
      sols.push_back(m);
    }
  }
  dedupe_sorted(sols, opt.dedupe_tol);
  dedupe_sorted(suspects, opt.dedupe_tol);
  // A suspect indistinguishable from a counted solution is its shadow.
  std::vector<MasterSolution> kept;
  for (const MasterSolution& s : suspects) {
    bool shadow = false;
    for (const MasterSolution& k : sols) {
      double d = std::max(std::fabs(s.y[0] - k.y[0]), std::fabs(s.y[1] - k.y[1]));
      if (d <= opt.dedupe_tol * (1 + std::max(std::fabs(k.y[0]), std::fabs(k.y[1])))) {
        shadow = true;
        break;
      }
    }
    if (!shadow) kept.push_back(s);
  }
  suspects.swap(kept);
  if (!suspects.empty()) {
    out.verified = false;
    out.notes.push_back("degenerate suspects present");
  }
  s2.trace.marks.clear();
  for (const MasterSolution& m : sols) s2.trace.marks.push_back(m.y);

  if (static_cast<int>(sols.size()) > s2.trace.flat + static_cast<int>(marks.size())) {
    out.verified = false;
    out.notes.push_back("solutions exceed their rolle budget");
  }

  out.solutions = sols;
  out.degenerate_suspects = suspects;
  out.traces = {s1.trace, s2.trace};
  out.flat_observed = {s1.trace.flat, s2.trace.flat};
  if (static_cast<int>(out.solutions.size()) > out.observed_budget()) {
    out.verified = false;
    out.notes.push_back("count exceeds the trace budget");
  }
  return out;
}

SolutionSet solve_master_k1(const MasterSystem& ms, const Arrangement& arr,
                            const GammaChain& chain, const SolverOptions& opt) {
  SolutionSet out;
  out.n = chain.n;
  out.k = 1;
  out.gamma = solve_gamma_system(ms, chain, arr, opt);

  int m = ms.m();
  std::vector<std::pair<double, int>> walls;
  for (int t = 0; t < m; ++t)
    walls.emplace_back(to_double(Rat(-ms.forms[static_cast<size_t>(t)].c0 /
                                     ms.forms[static_cast<size_t>(t)].lin[0])),
                       t);
  std::sort(walls.begin(), walls.end());
  double scale = arrangement_scale(arr);
  double rfar = opt.infinity_rel * scale;

  auto psi = [&](double x) {
    double s = 0;
    for (int i = 0; i < m; ++i) {
      double p = to_double(ms.forms[static_cast<size_t>(i)].c0) +
                 to_double(ms.forms[static_cast<size_t>(i)].lin[0]) * x;
      if (p == 0) return -std::numeric_limits<double>::infinity();
      s += ms.weight_d(i, 0) * std::log(std::fabs(p));
    }
    return s;
  };
  auto dpsi = [&](double x) {
    double s = 0;
    for (int i = 0; i < m; ++i) {
      double l = to_double(ms.forms[static_cast<size_t>(i)].lin[0]);
      double p = to_double(ms.forms[static_cast<size_t>(i)].c0) + l * x;
      s += ms.weight_d(i, 0) * l / p;
    }
    return s;
  };

  Rat colsum(0);
  for (int i = 0; i < m; ++i) colsum += ms.b.at(i, 0);
  int inf_sign = sgn_rat(colsum);
  if (inf_sign == 0) inf_sign = sgn(psi(rfar));

  // Signed samples bracketing each monotone stretch: wall blowup signs from the
  // exact weights, numeric signs at the division points.
  struct Node {
    double x;
    int sign;
    bool wall;
  };
  auto wall_sign = [&](int t) { return -sgn_rat(ms.b.at(t, 0)); };
  auto wall_offset_sign = [&](double wx, int into) {
    double eps = 1e-9 * scale;
    for (int it = 0; it < 40; ++it) {
      double v = psi(wx + into * eps);
      if (std::isfinite(v) && v != 0) return sgn(v);
      eps /= 4;
    }
    return 0;
  };

  std::vector<MasterSolution> sols, suspects;
  for (int ch = 0; ch <= m; ++ch) {
    double lo = ch == 0 ? -rfar : walls[static_cast<size_t>(ch - 1)].first;
    double hi = ch == m ? rfar : walls[static_cast<size_t>(ch)].first;
    if (!(lo < hi)) continue;
    std::vector<Node> nodes;
    if (ch == 0)
      nodes.push_back({-rfar, inf_sign != 0 ? inf_sign : sgn(psi(-rfar)), false});
    else {
      int t = walls[static_cast<size_t>(ch - 1)].second;
      int s = wall_sign(t);
      if (s == 0) s = wall_offset_sign(lo, +1);
      nodes.push_back({lo, s, true});
    }
    for (const auto& g : out.gamma.points) {
      if (g[0] > lo && g[0] < hi) {
        double v = psi(g[0]);
        if (std::fabs(v) < 1e-11) {
          MasterSolution msus;
          msus.y = {g[0]};
          msus.residual = std::fabs(v);
          msus.sigma_min = std::fabs(dpsi(g[0]));
          msus.signs = {};
          suspects.push_back(msus);
          out.verified = false;
          out.notes.push_back("psi nearly vanishes at a division point");
        }
        nodes.push_back({g[0], sgn(v), false});
      }
    }
    if (ch == m)
      nodes.push_back({rfar, inf_sign != 0 ? inf_sign : sgn(psi(rfar)), false});
    else {
      int t = walls[static_cast<size_t>(ch)].second;
      int s = wall_sign(t);
      if (s == 0) s = wall_offset_sign(hi, -1);
      nodes.push_back({hi, s, true});
    }

    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
      if (nodes[i].sign == 0 || nodes[i + 1].sign == 0) {
        out.verified = false;
        out.notes.push_back("an interval endpoint sign stayed unresolved");
        continue;
      }
      if (nodes[i].sign * nodes[i + 1].sign > 0) continue;
      // One zero in the open interval; bisect with numeric endpoints pushed
      // slightly inside when the boundary is a wall.
      double a = nodes[i].x, b = nodes[i + 1].x;
      int sa = nodes[i].sign;
      if (nodes[i].wall) {
        double eps = 1e-9 * scale * std::max(1.0, std::fabs(a));
        while (eps > 1e-16 && sgn(psi(a + eps)) != sa) eps /= 4;
        a += eps;
      }
      if (nodes[i + 1].wall) {
        double eps = 1e-9 * scale * std::max(1.0, std::fabs(b));
        while (eps > 1e-16 && sgn(psi(b - eps)) != nodes[i + 1].sign) eps /= 4;
        b -= eps;
      }
      if (sgn(psi(a)) != sa || sgn(psi(b)) != nodes[i + 1].sign) {
        out.verified = false;
        out.notes.push_back("a wall-adjacent sample lost its sign");
        continue;
      }
      for (int it = 0; it < 200 && (b - a) > 1e-16 * (1 + std::fabs(a)); ++it) {
        double mid = (a + b) / 2;
        double v = psi(mid);
        if (sgn(v) == sa)
          a = mid;
        else
          b = mid;
      }
      double x = (a + b) / 2;
      for (int it = 0; it < 40; ++it) {
        double v = psi(x), dv = dpsi(x);
        if (!(std::fabs(dv) > 0)) break;
        double nx = x - v / dv;
        if (!(nx > lo && nx < hi)) break;
        if (std::fabs(nx - x) <= 1e-16 * (1 + std::fabs(x))) {
          x = nx;
          break;
        }
        x = nx;
      }
      MasterSolution sol;
      sol.y = {x};
      sol.residual = std::fabs(psi(x));
      sol.sigma_min = std::fabs(dpsi(x));
      sol.signs.resize(static_cast<size_t>(m));
      for (int t = 0; t < m; ++t)
        sol.signs[static_cast<size_t>(t)] =
            sgn(to_double(ms.forms[static_cast<size_t>(t)].c0) +
                to_double(ms.forms[static_cast<size_t>(t)].lin[0]) * x);
      if (sol.residual > opt.newton_tol) {
        out.verified = false;
        out.notes.push_back("a root kept a large residual");
        suspects.push_back(sol);
      } else if (sol.sigma_min < opt.degen_tol) {
        suspects.push_back(sol);
        out.verified = false;
        out.notes.push_back("degenerate suspects present");
      } else {
        sols.push_back(sol);
      }
    }
  }
  dedupe_sorted(sols, opt.dedupe_tol);
  out.solutions = sols;
  out.degenerate_suspects = suspects;

  // The complement itself is the level-1 curve: one unbounded arc per chamber.
  CurveTrace tr;
  tr.level = 1;
  for (int ch = 0; ch <= m; ++ch) {
    Arc a;
    if (ch == 0) {
      a.head.kind = EndKind::infinity;
      a.head.members = {m};
      a.head.at = {-1.0, 0.0};
    } else {
      a.head.kind = EndKind::face;
      a.head.members = {walls[static_cast<size_t>(ch - 1)].second};
      a.head.at = {walls[static_cast<size_t>(ch - 1)].first, 0.0};
    }
    if (ch == m) {
      a.tail.kind = EndKind::infinity;
      a.tail.members = {m};
      a.tail.at = {1.0, 0.0};
    } else {
      a.tail.kind = EndKind::face;
      a.tail.members = {walls[static_cast<size_t>(ch)].second};
      a.tail.at = {walls[static_cast<size_t>(ch)].first, 0.0};
    }
    a.samples = {a.head.at, a.tail.at};
    tr.arcs.push_back(a);
  }
  tr.flat = m + 1;
  for (const MasterSolution& s : out.solutions) tr.marks.push_back(s.y);
  out.traces = {tr};
  out.flat_observed = {tr.flat};
  if (static_cast<int>(out.solutions.size()) > out.observed_budget()) {
    out.verified = false;
    out.notes.push_back("count exceeds the trace budget");
  }
  return out;
}

}  // namespace

SolutionSet solve_master(const MasterSystem& ms, const SolverOptions& opt) {
  if (!ms.rational_weights) fail(Errc::unsupported_dimension, "tracing needs rational weights");
  if (ms.k != 1 && ms.k != 2) fail(Errc::unsupported_dimension, "tracing supports k <= 2");
  Arrangement arr = make_arrangement(ms);
  auto viol = genericity_check(arr);
  if (!viol.empty()) fail(Errc::genericity_violation, viol.front().what);
  GammaChain chain = build_gamma_chain(ms);
  return ms.k == 1 ? solve_master_k1(ms, arr, chain, opt) : solve_master_k2(ms, arr, chain, opt);
}

namespace {

SparseSystem perturb_system(const SparseSystem& s, std::mt19937_64& rng, double rel) {
  QMat c = s.coeffs;
  std::uniform_int_distribution<long> d(-(1L << 20), 1L << 20);
  Rat mag(rel);
  for (int i = 0; i < c.rows; ++i)
    for (int j = 0; j < c.cols; ++j) {
      if (c.at(i, j) == 0) continue;
      Rat delta = mag * Rat(d(rng), 1L << 20);
      delta.canonicalize();
      c.at(i, j) = Rat(c.at(i, j) * (1 + delta));
    }
  return make_sparse_system(s.support, c);
}

double sparse_residual(const SparseSystem& s, const std::vector<double>& x) {
  double worst = 0;
  for (int i = 0; i < s.coeffs.rows; ++i) {
    double acc = 0, mag = 0;
    for (int j = 0; j < s.coeffs.cols; ++j) {
      double mono = 1;
      for (int l = 0; l < s.n(); ++l) {
        long e = s.support.vectors[static_cast<size_t>(j)][static_cast<size_t>(l)].get_si();
        mono *= std::pow(x[static_cast<size_t>(l)], static_cast<double>(e));
      }
      double cv = to_double(s.coeffs.at(i, j));
      acc += cv * mono;
      mag += std::fabs(cv * mono);
    }
    worst = std::max(worst, std::fabs(acc) / std::max(mag, 1e-300));
  }
  return worst;
}

}  // namespace

SparseSolveReport solve_sparse(const SparseSystem& s, const SolverOptions& opt) {
  auto par = lattice::span_index_parity(s.support);
  if (par.kind == lattice::SpanKind::rank_deficient)
    fail(Errc::rank_deficient, "exponents do not span the space");
  if (par.kind == lattice::SpanKind::even)
    fail(Errc::even_index, "even lattice index leaves the real count untracked");

  SparseSolveReport rep;
  std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ull);
  for (int attempt = 0;; ++attempt) {
    SparseSystem sys = attempt == 0 ? s : perturb_system(s, rng, opt.perturb_rel);
    try {
      rep.dual = build_gale_dual(sys);
      MasterSystem ms = make_master(rep.dual);
      rep.master = solve_master(ms, opt);
      rep.solved = sys;
      rep.perturbed = attempt > 0;
      break;
    } catch (const Error& e) {
      if (e.code() != Errc::genericity_violation && e.code() != Errc::degenerate_system) throw;
      if (attempt >= opt.max_repairs) throw;
    }
  }
  rep.verified = rep.master.verified;

  const ZMat& B = rep.dual.weights.b;
  for (const MasterSolution& sol : rep.master.solutions) {
    // Real lifts exist exactly when the negative forms cancel mod 2 in every
    // weight column.
    bool liftable = true;
    for (int j = 0; j < B.cols && liftable; ++j) {
      Int acc(0);
      for (int i = 0; i < B.rows; ++i)
        if (sol.signs[static_cast<size_t>(i)] < 0) acc += B.at(i, j);
      if (mpz_odd_p(acc.get_mpz_t())) liftable = false;
    }
    if (!liftable) continue;
    std::vector<double> z = push_to_torus_coords_d(rep.dual, sol.y);
    TorusLift lift = lift_to_torus(rep.solved.support, z);
    if (!lift.sign_consistent || !lift.magnitude_consistent) {
      rep.verified = false;
      continue;
    }
    SparseSolution ss;
    ss.x = lift.x;
    ss.residual = sparse_residual(rep.solved, lift.x);
    if (ss.residual > 1e-7) rep.verified = false;
    rep.solutions.push_back(ss);
    bool pos = true;
    for (double v : lift.x) pos = pos && v > 0;
    if (pos) rep.positive.push_back(ss);
  }
  std::sort(rep.solutions.begin(), rep.solutions.end(),
            [](const SparseSolution& a, const SparseSolution& b) { return a.x < b.x; });
  std::sort(rep.positive.begin(), rep.positive.end(),
            [](const SparseSolution& a, const SparseSolution& b) { return a.x < b.x; });
  return rep;
}

}  // namespace fewnomial
