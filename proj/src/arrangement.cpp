#include "fewnomial/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fewnomial/error.hpp"

namespace fewnomial {

Arrangement make_arrangement(const std::vector<LinearForm>& forms) {
  if (forms.empty()) fail(Errc::bad_input, "empty arrangement");
  Arrangement a;
  a.k = forms[0].k();
  if (a.k < 1 || a.k > 2) fail(Errc::unsupported_dimension, "arrangements implemented for k <= 2");
  for (const auto& f : forms)
    if (f.k() != a.k) fail(Errc::bad_input, "mixed form arities");
  a.forms = forms;
  return a;
}

Arrangement make_arrangement(const MasterSystem& ms) { return make_arrangement(ms.forms); }

namespace {

// Root of a 1-form on the line.
Rat root1(const LinearForm& f) { return -f.c0 / f.lin[0]; }

// Intersection of two 2-forms; nullopt when parallel.
std::optional<QVec> meet2(const LinearForm& a, const LinearForm& b) {
  Rat det = a.lin[0] * b.lin[1] - a.lin[1] * b.lin[0];
  if (det == 0) return std::nullopt;
  Rat x = (-a.c0 * b.lin[1] + b.c0 * a.lin[1]) / det;
  Rat y = (-a.lin[0] * b.c0 + b.lin[0] * a.c0) / det;
  return QVec{x, y};
}

// Primitive integer direction of a 2-form's line (kernel of its gradient).
QVec direction2(const LinearForm& f) {
  Rat dx = -f.lin[1], dy = f.lin[0];
  Int num_gcd = gcd(dx.get_num() * dy.get_den(), dy.get_num() * dx.get_den());
  if (num_gcd == 0) num_gcd = 1;
  Rat scale = Rat(dx.get_den() * dy.get_den()) / Rat(abs(num_gcd));
  QVec d{dx * scale, dy * scale};
  // Canonical sign: first nonzero entry positive.
  for (auto& v : d) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& w : d) w = -w;
    break;
  }
  return d;
}

}  // namespace

std::vector<Violation> genericity_check(const Arrangement& a) {
  std::vector<Violation> out;
  for (int i = 0; i < a.m(); ++i)
    if (a.forms[i].is_constant()) out.push_back({"constant form", {i}});
  if (!out.empty()) return out;
  if (a.k == 1) {
    for (int i = 0; i < a.m(); ++i)
      for (int j = i + 1; j < a.m(); ++j)
        if (root1(a.forms[i]) == root1(a.forms[j]))
          out.push_back({"coincident points", {i, j}});
    return out;
  }
  for (int i = 0; i < a.m(); ++i)
    for (int j = i + 1; j < a.m(); ++j) {
      const auto& f = a.forms[i];
      const auto& g = a.forms[j];
      if (f.lin[0] * g.lin[1] - f.lin[1] * g.lin[0] == 0)
        out.push_back({"parallel lines", {i, j}});
    }
  if (!out.empty()) return out;
  for (int i = 0; i < a.m(); ++i)
    for (int j = i + 1; j < a.m(); ++j) {
      auto v = meet2(a.forms[i], a.forms[j]);
      for (int l = j + 1; l < a.m(); ++l)
        if (a.forms[l].eval(*v) == 0) out.push_back({"concurrent lines", {i, j, l}});
    }
  return out;
}

Int face_count(int n, int k, int j) {
  if (j < 1 || j > k) fail(Errc::bad_input, "face codimension out of range");
  return binomial(static_cast<unsigned>(n + k + 1), static_cast<unsigned>(j));
}

namespace {

// Point on line i distinct from every intersection with the other lines.
QVec free_point_on_line(const Arrangement& a, int i) {
  const LinearForm& f = a.forms[i];
  QVec base = f.lin[1] != 0 ? QVec{Rat(0), -f.c0 / f.lin[1]} : QVec{-f.c0 / f.lin[0], Rat(0)};
  QVec dir = direction2(f);
  Rat tmax(0);
  for (int j = 0; j < a.m(); ++j) {
    if (j == i) continue;
    Rat den(0);
    for (int l = 0; l < 2; ++l) den += a.forms[j].lin[l] * dir[l];
    if (den == 0) continue;
    Rat t = -a.forms[j].eval(base) / den;
    tmax = std::max(tmax, Rat(abs(t)));
  }
  return {base[0] + (tmax + 1) * dir[0], base[1] + (tmax + 1) * dir[1]};
}

// Direction not parallel to any line of the arrangement: lin_i . u != 0 for all i.
QVec generic_direction(const Arrangement& a) {
  for (long s = 0;; ++s) {
    QVec u{Rat(1), Rat(s)};
    bool ok = true;
    for (const auto& f : a.forms)
      if (f.lin[0] * u[0] + f.lin[1] * u[1] == 0) ok = false;
    if (ok) return u;
  }
}

}  // namespace

std::vector<Face> enumerate_faces(const Arrangement& a, int j) {
  if (j < 1 || j > a.k) fail(Errc::bad_input, "face codimension out of range");
  auto violations = genericity_check(a);
  if (!violations.empty()) fail(Errc::genericity_violation, violations[0].what);
  std::vector<Face> out;
  int inf = a.infinity_index();
  if (a.k == 1) {
    for (int i = 0; i < a.m(); ++i) out.push_back({{i}, false, {root1(a.forms[i])}});
    out.push_back({{inf}, true, {Rat(1)}});
    return out;
  }
  if (j == 1) {
    for (int i = 0; i < a.m(); ++i) out.push_back({{i}, false, free_point_on_line(a, i)});
    out.push_back({{inf}, true, generic_direction(a)});
    return out;
  }
  for (int i = 0; i < a.m(); ++i)
    for (int t = i + 1; t < a.m(); ++t)
      out.push_back({{i, t}, false, *meet2(a.forms[i], a.forms[t])});
  for (int i = 0; i < a.m(); ++i) out.push_back({{i, inf}, true, direction2(a.forms[i])});
  return out;
}

std::vector<int> sign_vector(const Arrangement& a, const QVec& y) {
  std::vector<int> s;
  s.reserve(a.forms.size());
  for (const auto& f : a.forms) s.push_back(sgn(f.eval(y)));
  return s;
}

std::vector<int> sign_vector_d(const Arrangement& a, const std::vector<double>& y, double tol) {
  std::vector<int> s;
  s.reserve(a.forms.size());
  for (const auto& f : a.forms) {
    double v = f.eval_d(y);
    s.push_back(std::abs(v) <= tol ? 0 : (v > 0 ? 1 : -1));
  }
  return s;
}

namespace {

void add_chamber(const Arrangement& a, const QVec& sample, bool unbounded,
                 std::map<std::vector<int>, Chamber>& seen) {
  std::vector<int> s = sign_vector(a, sample);
  for (int v : s)
    if (v == 0) return;  // landed on a form; caller picks samples to avoid this
  auto it = seen.find(s);
  if (it == seen.end())
    seen.emplace(std::move(s), Chamber{sign_vector(a, sample), sample, unbounded});
  else if (unbounded)
    it->second.unbounded = true;
}

// Angular order on nonzero integer-direction vectors.
bool angle_less(const QVec& a, const QVec& b) {
  auto half = [](const QVec& v) { return v[1] < 0 || (v[1] == 0 && v[0] < 0) ? 1 : 0; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  Rat cross = a[0] * b[1] - a[1] * b[0];
  return cross > 0;
}

}  // namespace

std::vector<Chamber> chambers(const Arrangement& a) {
  auto violations = genericity_check(a);
  if (!violations.empty()) fail(Errc::genericity_violation, violations[0].what);
  std::vector<Chamber> out;
  if (a.k == 1) {
    std::vector<Rat> roots;
    for (const auto& f : a.forms) roots.push_back(root1(f));
    std::sort(roots.begin(), roots.end());
    std::vector<QVec> samples;
    samples.push_back({roots.front() - 1});
    for (size_t i = 0; i + 1 < roots.size(); ++i)
      samples.push_back({(roots[i] + roots[i + 1]) / 2});
    samples.push_back({roots.back() + 1});
    for (size_t i = 0; i < samples.size(); ++i) {
      Chamber c;
      c.sample = samples[i];
      c.signs = sign_vector(a, c.sample);
      c.unbounded = i == 0 || i + 1 == samples.size();
      out.push_back(std::move(c));
    }
    return out;
  }
  std::map<std::vector<int>, Chamber> seen;
  // Quadrant samples at each vertex.
  for (int i = 0; i < a.m(); ++i)
    for (int t = i + 1; t < a.m(); ++t) {
      QVec v = *meet2(a.forms[i], a.forms[t]);
      for (int sa : {1, -1})
        for (int sb : {1, -1}) {
          QMat mm(2, 2);
          mm.at(0, 0) = a.forms[i].lin[0];
          mm.at(0, 1) = a.forms[i].lin[1];
          mm.at(1, 0) = a.forms[t].lin[0];
          mm.at(1, 1) = a.forms[t].lin[1];
          auto u = solve_square(mm, {Rat(sa), Rat(sb)});
          // Scale the step to stay clear of every other line.
          Rat tmin(1);
          for (int c = 0; c < a.m(); ++c) {
            if (c == i || c == t) continue;
            Rat den = a.forms[c].lin[0] * (*u)[0] + a.forms[c].lin[1] * (*u)[1];
            if (den == 0) continue;
            Rat tc = abs(a.forms[c].eval(v) / den);
            if (tc > 0) tmin = std::min(tmin, tc);
          }
          Rat step = tmin / 2;
          add_chamber(a, {v[0] + step * (*u)[0], v[1] + step * (*u)[1]}, false, seen);
        }
    }
  // Sector samples between consecutive line directions.
  std::vector<QVec> dirs;
  for (int i = 0; i < a.m(); ++i) {
    QVec d = direction2(a.forms[i]);
    dirs.push_back(d);
    dirs.push_back({-d[0], -d[1]});
  }
  std::sort(dirs.begin(), dirs.end(), angle_less);
  for (size_t i = 0; i < dirs.size(); ++i) {
    const QVec& u = dirs[i];
    const QVec& w = dirs[(i + 1) % dirs.size()];
    QVec mid{u[0] + w[0], u[1] + w[1]};
    if (mid[0] == 0 && mid[1] == 0) mid = {-u[1], u[0]};  // opposite pair (single line)
    Rat tmax(0);
    bool parallel = false;
    for (const auto& f : a.forms) {
      Rat den = f.lin[0] * mid[0] + f.lin[1] * mid[1];
      if (den == 0) {
        parallel = true;
        break;
      }
      tmax = std::max(tmax, Rat(abs(f.c0 / den)));
    }
    if (parallel) continue;  // mid coincided with a line direction; other sectors cover it
    Rat t = tmax + 1;
    add_chamber(a, {t * mid[0], t * mid[1]}, true, seen);
  }
  for (auto& [key, c] : seen) out.push_back(std::move(c));
  return out;
}

bool recedes_along(const Arrangement& a, const Chamber& c, const QVec& u) {
  auto fits = [&](int flip) {
    for (int i = 0; i < a.m(); ++i) {
      Rat d(0);
      for (int l = 0; l < a.k; ++l) d += a.forms[i].lin[l] * u[l];
      if (flip < 0) d = -d;
      if (c.signs[i] > 0 ? d < 0 : d > 0) return false;
    }
    return true;
  };
  return fits(1) || fits(-1);
}

std::vector<int> incident_chambers(const Arrangement& a, const std::vector<Chamber>& ch,
                                   const Face& face) {
  std::vector<int> out;
  if (face.at_infinity) {
    for (size_t c = 0; c < ch.size(); ++c)
      if (recedes_along(a, ch[c], face.point)) out.push_back(static_cast<int>(c));
    return out;
  }
  std::vector<int> base = sign_vector(a, face.point);
  std::vector<bool> vanishing(a.m(), false);
  for (int i : face.members)
    if (i < a.m()) vanishing[i] = true;
  for (size_t c = 0; c < ch.size(); ++c) {
    bool ok = true;
    for (int i = 0; i < a.m() && ok; ++i) {
      if (vanishing[i]) continue;
      if (base[i] == 0 || ch[c].signs[i] != base[i]) ok = false;
    }
    if (ok) out.push_back(static_cast<int>(c));
  }
  return out;
}

}  // namespace fewnomial
