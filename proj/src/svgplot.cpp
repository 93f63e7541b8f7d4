#include "fewnomial/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "fewnomial/bounds.hpp"
#include "fewnomial/error.hpp"
#include "fewnomial/numeric.hpp"

namespace fewnomial {
namespace {

std::string fmt(double v) {
  if (!std::isfinite(v)) v = 0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void text(std::string& out, double x, double y, const std::string& body,
          const char* fill = "#333") {
  out += "  <text x=\"" + fmt(x) + "\" y=\"" + fmt(y) +
         "\" font-family=\"monospace\" font-size=\"12\" fill=\"" + fill + "\">" + body +
         "</text>\n";
}

struct Frame {
  double x0, y0, span;     // world window: [x0, x0+span] x [y0, y0+span]
  double ox, oy, scale;    // svg offset and pixels per world unit

  double X(double x) const { return ox + (x - x0) * scale; }
  double Y(double y) const { return oy - (y - y0) * scale; }  // y grows upward
};

// Ledger legend shared by both layouts: budget terms next to observed counts.
void legend(std::string& out, const SparseSolveReport& rep, double x, double y) {
  const SolutionSet& m = rep.master;
  KrLedger led = kr_ledger(m.n, m.k);
  char buf[160];

  std::snprintf(buf, sizeof buf, "n=%d k=%d, %d walls + line at infinity", m.n, m.k,
                static_cast<int>(rep.dual.forms.size()));
  text(out, x, y, buf);
  std::snprintf(buf, sizeof buf, "chain zeros %d of %s", m.gamma.count,
                led.gamma_term.get_str().c_str());
  text(out, x, y + 16, buf);
  for (size_t j = 0; j < m.flat_observed.size(); ++j) {
    std::snprintf(buf, sizeof buf, "flat arcs C%d: %d of %s", static_cast<int>(j) + 1,
                  m.flat_observed[j], rat_to_string(led.flat_terms[j]).c_str());
    text(out, x, y + 32 + 16 * static_cast<double>(j), buf);
  }
  double yy = y + 32 + 16 * static_cast<double>(m.flat_observed.size());
  std::snprintf(buf, sizeof buf, "solutions %d (%d positive), budget %s",
                static_cast<int>(rep.solutions.size()), static_cast<int>(rep.positive.size()),
                rat_to_string(led.total).c_str());
  text(out, x, yy, buf);
  if (!m.verified) text(out, x, yy + 16, "UNVERIFIED", "#b00");
  if (rep.perturbed) text(out, x, yy + (m.verified ? 16 : 32), "coefficients perturbed", "#b60");
}

std::string plot_line(const SparseSolveReport& rep) {
  const SolutionSet& m = rep.master;
  std::vector<double> walls;
  for (const auto& f : rep.dual.forms) {
    double a = f.grad_d(0);
    if (a != 0) walls.push_back(-to_double(f.c0) / a);
  }
  std::sort(walls.begin(), walls.end());

  double lo = walls.empty() ? -1 : walls.front();
  double hi = walls.empty() ? 1 : walls.back();
  for (const auto& sol : m.solutions) {
    lo = std::min(lo, sol.y[0]);
    hi = std::max(hi, sol.y[0]);
  }
  double pad = std::max(0.15 * (hi - lo), 0.5);
  lo -= pad;
  hi += pad;

  const double W = 760, H = 250, mx = 40, axis = 150;
  double scale = (W - 2 * mx) / (hi - lo);
  auto X = [&](double v) { return mx + (v - lo) * scale; };

  std::string out;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%g\" "
                "height=\"%g\" viewBox=\"0 0 %g %g\">\n",
                W, H, W, H);
  out += buf;
  out += "  <rect width=\"" + fmt(W) + "\" height=\"" + fmt(H) + "\" fill=\"#ffffff\"/>\n";

  // Alternating chamber shading between consecutive walls, window ends closed.
  std::vector<double> edges{lo};
  for (double w : walls) edges.push_back(w);
  edges.push_back(hi);
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    if (i % 2 == 0) continue;
    out += "  <rect x=\"" + fmt(X(edges[i])) + "\" y=\"" + fmt(axis - 28) + "\" width=\"" +
           fmt((edges[i + 1] - edges[i]) * scale) +
           "\" height=\"56\" fill=\"#dce9f6\"/>\n";
  }

  out += "  <line x1=\"" + fmt(mx) + "\" y1=\"" + fmt(axis) + "\" x2=\"" + fmt(W - mx) +
         "\" y2=\"" + fmt(axis) + "\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";
  for (double w : walls) {
    out += "  <line x1=\"" + fmt(X(w)) + "\" y1=\"" + fmt(axis - 34) + "\" x2=\"" + fmt(X(w)) +
           "\" y2=\"" + fmt(axis + 34) + "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    text(out, X(w) - 12, axis + 50, num(w), "#888");
  }
  for (const auto& sol : m.solutions) {
    out += "  <circle cx=\"" + fmt(X(sol.y[0])) + "\" cy=\"" + fmt(axis) +
           "\" r=\"5\" fill=\"#2a8a2a\" stroke=\"#ffffff\" stroke-width=\"1.5\"/>\n";
  }
  legend(out, rep, mx, 40);
  out += "</svg>\n";
  return out;
}

std::string plot_plane(const SparseSolveReport& rep) {
  const SolutionSet& m = rep.master;

  // Window: pairwise wall crossings plus every certified point, padded.
  std::vector<std::array<double, 2>> anchors;
  const auto& forms = rep.dual.forms;
  for (size_t i = 0; i < forms.size(); ++i)
    for (size_t j = i + 1; j < forms.size(); ++j) {
      double a1 = forms[i].grad_d(0), b1 = forms[i].grad_d(1), c1 = to_double(forms[i].c0);
      double a2 = forms[j].grad_d(0), b2 = forms[j].grad_d(1), c2 = to_double(forms[j].c0);
      double det = a1 * b2 - a2 * b1;
      if (std::abs(det) < 1e-12) continue;
      anchors.push_back({(-c1 * b2 + c2 * b1) / det, (-a1 * c2 + a2 * c1) / det});
    }
  for (const auto& p : m.gamma.points) anchors.push_back({p[0], p[1]});
  for (const auto& s : m.solutions) anchors.push_back({s.y[0], s.y[1]});
  if (anchors.empty()) anchors.push_back({0, 0});

  double cx = 0, cy = 0;
  for (const auto& p : anchors) {
    cx += p[0];
    cy += p[1];
  }
  cx /= static_cast<double>(anchors.size());
  cy /= static_cast<double>(anchors.size());
  double half = 1;
  for (const auto& p : anchors)
    half = std::max({half, std::abs(p[0] - cx), std::abs(p[1] - cy)});
  half *= 1.4;

  const double W = 760, H = 640, mx = 30, top = 30;
  const double inner = std::min(W - 2 * mx, H - top - 130);
  Frame fr{cx - half, cy - half, 2 * half, mx, top + inner, inner / (2 * half)};

  std::string out;
  char buf[220];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%g\" "
                "height=\"%g\" viewBox=\"0 0 %g %g\">\n",
                W, H, W, H);
  out += buf;
  out += "  <rect width=\"" + fmt(W) + "\" height=\"" + fmt(H) + "\" fill=\"#ffffff\"/>\n";
  out += "  <clipPath id=\"vp\"><rect x=\"" + fmt(mx) + "\" y=\"" + fmt(top) + "\" width=\"" +
         fmt(inner) + "\" height=\"" + fmt(inner) + "\"/></clipPath>\n";
  out += "  <rect x=\"" + fmt(mx) + "\" y=\"" + fmt(top) + "\" width=\"" + fmt(inner) +
         "\" height=\"" + fmt(inner) + "\" fill=\"none\" stroke=\"#ccc\"/>\n";
  out += "  <g clip-path=\"url(#vp)\">\n";

  // Walls as long chords through the window; the clip rect trims them.
  double L = 3 * half;
  for (const auto& f : forms) {
    double a = f.grad_d(0), b = f.grad_d(1), c = to_double(f.c0);
    double nn = a * a + b * b;
    if (nn == 0) continue;
    double px = cx - (a * cx + b * cy + c) / nn * a;
    double py = cy - (a * cx + b * cy + c) / nn * b;
    double dx = -b / std::sqrt(nn), dy = a / std::sqrt(nn);
    out += "  <line x1=\"" + fmt(fr.X(px - L * dx)) + "\" y1=\"" + fmt(fr.Y(py - L * dy)) +
           "\" x2=\"" + fmt(fr.X(px + L * dx)) + "\" y2=\"" + fmt(fr.Y(py + L * dy)) +
           "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  }

  // Curve arcs as subsampled polylines, colored by chain level.
  for (const auto& tr : m.traces) {
    const char* color = tr.level == 1 ? "#2b6cb8" : "#c0392b";
    for (const auto& arc : tr.arcs) {
      if (arc.samples.size() < 2) continue;
      size_t stride = std::max<size_t>(1, arc.samples.size() / 400);
      std::string pts;
      for (size_t i = 0; i < arc.samples.size(); i += stride)
        pts += fmt(fr.X(arc.samples[i][0])) + "," + fmt(fr.Y(arc.samples[i][1])) + " ";
      const auto& last = arc.samples.back();
      pts += fmt(fr.X(last[0])) + "," + fmt(fr.Y(last[1]));
      out += "  <polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"1.3\"/>\n";
    }
  }

  for (const auto& p : m.gamma.points) {
    out += "  <rect x=\"" + fmt(fr.X(p[0]) - 3.5) + "\" y=\"" + fmt(fr.Y(p[1]) - 3.5) +
           "\" width=\"7\" height=\"7\" fill=\"#7d4fb0\"/>\n";
  }
  for (const auto& s : m.solutions) {
    out += "  <circle cx=\"" + fmt(fr.X(s.y[0])) + "\" cy=\"" + fmt(fr.Y(s.y[1])) +
           "\" r=\"4.5\" fill=\"#2a8a2a\" stroke=\"#ffffff\" stroke-width=\"1.5\"/>\n";
  }
  out += "  </g>\n";

  double ly = top + inner + 24;
  legend(out, rep, mx, ly);
  text(out, W - 310, ly, "walls", "#999");
  text(out, W - 310, ly + 16, "Jacobian curve C1", "#2b6cb8");
  text(out, W - 310, ly + 32, "level set C2", "#c0392b");
  text(out, W - 310, ly + 48, "chain zeros", "#7d4fb0");
  text(out, W - 310, ly + 64, "solutions", "#2a8a2a");
  out += "</svg>\n";
  return out;
}

}  // namespace

std::string render_svg(const SparseSolveReport& rep) {
  int k = rep.master.k;
  if (k == 1) return plot_line(rep);
  if (k == 2) return plot_plane(rep);
  fail(Errc::unsupported_dimension, "plotting supports k <= 2");
}

}  // namespace fewnomial
