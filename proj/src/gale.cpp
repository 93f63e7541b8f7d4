#include "fewnomial/gale.hpp"

#include <algorithm>
#include <cmath>

#include "fewnomial/error.hpp"

namespace fewnomial {

Rat LinearForm::eval(const QVec& y) const {
  Rat acc = c0;
  for (size_t l = 0; l < lin.size(); ++l) acc += lin[l] * y[l];
  return acc;
}

double LinearForm::eval_d(const std::vector<double>& y) const {
  double acc = to_double(c0);
  for (size_t l = 0; l < lin.size(); ++l) acc += to_double(lin[l]) * y[l];
  return acc;
}

bool LinearForm::is_constant() const {
  for (const auto& v : lin)
    if (v != 0) return false;
  return true;
}

SparseSystem make_sparse_system(lattice::ExponentSupport support, QMat coeffs) {
  if (coeffs.rows != support.n || coeffs.cols != support.count())
    fail(Errc::bad_input, "coefficient matrix shape does not match the support");
  return SparseSystem{std::move(support), std::move(coeffs)};
}

QVec eval_sparse(const SparseSystem& s, const QVec& x) {
  if (static_cast<int>(x.size()) != s.n()) fail(Errc::bad_input, "point dimension mismatch");
  for (const auto& v : x)
    if (v == 0) fail(Errc::bad_input, "Laurent evaluation off the torus");
  QVec out(s.n(), Rat(0));
  for (int j = 0; j < s.support.count(); ++j) {
    Rat mono(1);
    for (int v = 0; v < s.n(); ++v)
      mono *= rat_pow(x[v], s.support.vectors[j][v].get_si());
    for (int i = 0; i < s.n(); ++i) out[i] += s.coeffs.at(i, j) * mono;
  }
  return out;
}

std::vector<double> eval_sparse_d(const SparseSystem& s, const std::vector<double>& x) {
  std::vector<double> out(s.n(), 0.0);
  for (int j = 0; j < s.support.count(); ++j) {
    double mono = 1;
    for (int v = 0; v < s.n(); ++v)
      mono *= std::pow(x[v], static_cast<double>(s.support.vectors[j][v].get_si()));
    for (int i = 0; i < s.n(); ++i) out[i] += to_double(s.coeffs.at(i, j)) * mono;
  }
  return out;
}

GaleDual build_gale_dual(const SparseSystem& s) {
  int n = s.n(), k = s.k();
  if (k < 1) fail(Errc::bad_input, "need at least one more monomial than variables plus one");
  // Unknowns z_1..z_{n+k} stand for the nonzero-exponent monomials; the constant
  // column moves to the right-hand side. Eliminate with full pivoting: largest
  // absolute entry, ties toward the lowest column, then the lowest row.
  int m = n + k;
  QMat a(n, m);
  QVec rhs(n);
  for (int i = 0; i < n; ++i) {
    rhs[i] = -s.coeffs.at(i, 0);
    for (int j = 0; j < m; ++j) a.at(i, j) = s.coeffs.at(i, j + 1);
  }
  std::vector<int> pivot_col;
  std::vector<bool> row_used(n, false), col_used(m, false);
  std::vector<int> row_of_col(m, -1);
  for (int step = 0; step < n; ++step) {
    int bi = -1, bj = -1;
    for (int j = 0; j < m; ++j) {
      if (col_used[j]) continue;
      for (int i = 0; i < n; ++i) {
        if (row_used[i] || a.at(i, j) == 0) continue;
        if (bi < 0 || abs(a.at(i, j)) > abs(a.at(bi, bj))) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi < 0) fail(Errc::degenerate_system, "coefficient rows are linearly dependent");
    row_used[bi] = true;
    col_used[bj] = true;
    row_of_col[bj] = bi;
    pivot_col.push_back(bj);
    Rat inv = 1 / a.at(bi, bj);
    for (int j = 0; j < m; ++j) a.at(bi, j) *= inv;
    rhs[bi] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == bi || a.at(i, bj) == 0) continue;
      Rat f = a.at(i, bj);
      for (int j = 0; j < m; ++j) a.at(i, j) -= f * a.at(bi, j);
      rhs[i] -= f * rhs[bi];
    }
  }
  GaleDual g;
  g.n = n;
  g.k = k;
  for (int j = 0; j < m; ++j)
    if (!col_used[j]) g.free_slots.push_back(j);
  g.forms.resize(m);
  for (int l = 0; l < k; ++l) {
    LinearForm& f = g.forms[g.free_slots[l]];
    f.c0 = 0;
    f.lin.assign(k, Rat(0));
    f.lin[l] = 1;
  }
  for (int j : pivot_col) {
    int i = row_of_col[j];
    LinearForm& f = g.forms[j];
    f.c0 = rhs[i];
    f.lin.assign(k, Rat(0));
    for (int l = 0; l < k; ++l) f.lin[l] = -a.at(i, g.free_slots[l]);
  }
  g.weights = lattice::relation_kernel(s.support);
  return g;
}

QVec push_to_torus_coords(const GaleDual& g, const QVec& y) {
  QVec z;
  z.reserve(g.forms.size());
  for (const auto& f : g.forms) z.push_back(f.eval(y));
  return z;
}

std::vector<double> push_to_torus_coords_d(const GaleDual& g, const std::vector<double>& y) {
  std::vector<double> z;
  z.reserve(g.forms.size());
  for (const auto& f : g.forms) z.push_back(f.eval_d(y));
  return z;
}

TorusLift lift_to_torus(const lattice::ExponentSupport& w, const std::vector<double>& z,
                        double log_tol) {
  TorusLift lift;
  int n = w.n, m = w.m();
  if (static_cast<int>(z.size()) != m) fail(Errc::bad_input, "monomial vector length mismatch");
  for (double v : z)
    if (v == 0 || !std::isfinite(v)) return lift;
  // Signs: x_j = (-1)^{sigma_j} |x_j| needs W sigma = sign bits of z over GF(2).
  std::vector<std::vector<std::uint8_t>> rows(m, std::vector<std::uint8_t>(n));
  std::vector<std::uint8_t> bits(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j)
      rows[i][j] = static_cast<std::uint8_t>(((w.vectors[i + 1][j] % 2) + 2) % 2 == 1);
    bits[i] = z[i] < 0;
  }
  Gf2Solution signs = solve_gf2(rows, bits);
  if (!signs.consistent) return lift;
  lift.sign_consistent = true;
  // Magnitudes: solve W u = log|z| on n independent rows, check the rest.
  ZMat e = lattice::exponent_matrix(w);
  QMat et(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) et.at(i, j) = Rat(e.at(j, i));
  // Row-select by elimination on a copy.
  std::vector<int> chosen;
  {
    QMat work = et;
    std::vector<bool> used(m, false);
    for (int col = 0; col < n; ++col) {
      int best = -1;
      for (int i = 0; i < m; ++i) {
        if (used[i] || work.at(i, col) == 0) continue;
        if (best < 0 || abs(work.at(i, col)) > abs(work.at(best, col))) best = i;
      }
      if (best < 0) return lift;  // exponents rank deficient
      used[best] = true;
      chosen.push_back(best);
      Rat inv = 1 / work.at(best, col);
      for (int i = 0; i < m; ++i) {
        if (used[i] || work.at(i, col) == 0) continue;
        Rat f = work.at(i, col) * inv;
        for (int j = col; j < n; ++j) work.at(i, j) -= f * work.at(best, j);
      }
    }
  }
  QMat sq(n, n);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < n; ++j) sq.at(r, j) = et.at(chosen[r], j);
  QMat inv = inverse(sq);
  std::vector<double> logz(m);
  for (int i = 0; i < m; ++i) logz[i] = std::log(std::abs(z[i]));
  std::vector<double> u(n, 0.0);
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < n; ++r) u[j] += to_double(inv.at(j, r)) * logz[chosen[r]];
  double worst = 0;
  for (int i = 0; i < m; ++i) {
    double acc = 0;
    for (int j = 0; j < n; ++j) acc += to_double(et.at(i, j)) * u[j];
    worst = std::max(worst, std::abs(acc - logz[i]));
  }
  lift.max_log_residual = worst;
  lift.magnitude_consistent = worst <= log_tol;
  lift.x.resize(n);
  for (int j = 0; j < n; ++j)
    lift.x[j] = (signs.x[j] ? -1.0 : 1.0) * std::exp(u[j]);
  return lift;
}

DualityReport verify_duality(const SparseSystem& s, const GaleDual& g, int samples,
                             std::uint64_t seed) {
  DualityReport rep;
  int n = s.n(), k = s.k(), m = n + k;
  // The forms solve the linear system identically: linear in y, so checking at
  // the origin and the k coordinate points proves the identity.
  for (int probe = 0; probe <= k; ++probe) {
    QVec y(k, Rat(0));
    if (probe > 0) y[probe - 1] = 1;
    QVec z = push_to_torus_coords(g, y);
    for (int i = 0; i < n; ++i) {
      Rat acc = s.coeffs.at(i, 0);
      for (int j = 0; j < m; ++j) acc += s.coeffs.at(i, j + 1) * z[j];
      if (acc != 0) {
        rep.detail = "forms do not solve the linear system";
        return rep;
      }
      ++rep.exact_checks;
    }
  }
  // Weights annihilate the exponents.
  ZMat prod = mul(lattice::exponent_matrix(s.support), g.weights.b);
  for (const auto& v : prod.a)
    if (v != 0) {
      rep.detail = "weight basis is not a relation basis";
      return rep;
    }
  ++rep.exact_checks;
  // Monomial identities on random torus points: prod_i (x^{w_i})^{b_ij} = 1.
  Rng rng(seed);
  for (int t = 0; t < samples; ++t) {
    QVec x(n);
    for (auto& v : x) v = Rat(rng.nonzero(9), 1 + rng.range(0, 3));
    for (int j = 0; j < k; ++j) {
      Rat acc(1);
      for (int i = 0; i < m; ++i) {
        long b = g.weights.b.at(i, j).get_si();
        if (b == 0) continue;
        Rat mono(1);
        for (int v = 0; v < n; ++v)
          mono *= rat_pow(x[v], s.support.vectors[i + 1][v].get_si());
        acc *= rat_pow(mono, b);
      }
      if (acc != 1) {
        rep.detail = "monomial weight relation failed on a torus sample";
        return rep;
      }
      ++rep.sample_checks;
    }
  }
  // Float path: forms evaluated in doubles stay on the linear system.
  for (int t = 0; t < samples; ++t) {
    std::vector<double> y(k);
    for (auto& v : y) v = rng.uniform01() * 4 - 2;
    std::vector<double> z = push_to_torus_coords_d(g, y);
    for (int i = 0; i < n; ++i) {
      double acc = to_double(s.coeffs.at(i, 0));
      for (int j = 0; j < m; ++j) acc += to_double(s.coeffs.at(i, j + 1)) * z[j];
      rep.max_residual = std::max(rep.max_residual, std::abs(acc));
    }
    ++rep.sample_checks;
  }
  rep.pass = rep.max_residual < 1e-9;
  if (!rep.pass) rep.detail = "float residual too large";
  return rep;
}

}  // namespace fewnomial
