#include "fewnomial/master.hpp"

#include <cmath>

#include "fewnomial/error.hpp"

namespace fewnomial {

Rat MasterSystem::infinity_weight(int j) const {
  if (!rational_weights) fail(Errc::bad_input, "infinity weight needs rational weights");
  Rat acc(0);
  for (int i = 0; i < m(); ++i) acc += b.at(i, j);
  return -acc;
}

MasterSystem make_master(const GaleDual& g) {
  MasterSystem ms;
  ms.n = g.n;
  ms.k = g.k;
  ms.forms = g.forms;
  ms.b = to_rational(g.weights.b);
  ms.rational_weights = true;
  return ms;
}

MasterSystem make_master(std::vector<LinearForm> forms, QMat b) {
  if (forms.empty() || b.rows != static_cast<int>(forms.size()) || b.cols < 1)
    fail(Errc::bad_input, "weight matrix shape mismatch");
  MasterSystem ms;
  ms.k = b.cols;
  ms.n = static_cast<int>(forms.size()) - ms.k;
  if (ms.n < 1) fail(Errc::bad_input, "need more forms than weight columns");
  for (const auto& f : forms)
    if (f.k() != ms.k) fail(Errc::bad_input, "form arity mismatch");
  ms.forms = std::move(forms);
  ms.b = std::move(b);
  ms.rational_weights = true;
  return ms;
}

MasterSystem make_master_real(std::vector<LinearForm> forms,
                              std::vector<std::vector<double>> b) {
  if (forms.empty() || b.size() != forms.size() || b[0].empty())
    fail(Errc::bad_input, "weight matrix shape mismatch");
  MasterSystem ms;
  ms.k = static_cast<int>(b[0].size());
  ms.n = static_cast<int>(forms.size()) - ms.k;
  if (ms.n < 1) fail(Errc::bad_input, "need more forms than weight columns");
  ms.forms = std::move(forms);
  ms.b_real = std::move(b);
  ms.rational_weights = false;
  return ms;
}

std::vector<double> eval_psi(const MasterSystem& ms, const std::vector<double>& y) {
  std::vector<double> out(ms.k, 0.0);
  for (int i = 0; i < ms.m(); ++i) {
    double v = std::log(std::abs(ms.forms[i].eval_d(y)));
    for (int j = 0; j < ms.k; ++j) out[j] += ms.weight_d(i, j) * v;
  }
  return out;
}

std::vector<std::vector<double>> eval_grad_psi(const MasterSystem& ms,
                                               const std::vector<double>& y) {
  std::vector<std::vector<double>> out(ms.k, std::vector<double>(ms.k, 0.0));
  for (int i = 0; i < ms.m(); ++i) {
    double v = ms.forms[i].eval_d(y);
    for (int j = 0; j < ms.k; ++j) {
      double w = ms.weight_d(i, j) / v;
      for (int l = 0; l < ms.k; ++l) out[j][l] += w * ms.forms[i].grad_d(l);
    }
  }
  return out;
}

std::vector<QVec> eval_grad_psi_exact(const MasterSystem& ms, const QVec& y) {
  if (!ms.rational_weights) fail(Errc::bad_input, "exact gradient needs rational weights");
  std::vector<QVec> out(ms.k, QVec(ms.k, Rat(0)));
  for (int i = 0; i < ms.m(); ++i) {
    Rat v = ms.forms[i].eval(y);
    if (v == 0) fail(Errc::bad_input, "gradient on the arrangement");
    for (int j = 0; j < ms.k; ++j) {
      Rat w = ms.b.at(i, j) / v;
      for (int l = 0; l < ms.k; ++l) out[j][l] += w * ms.forms[i].lin[l];
    }
  }
  return out;
}

double RationalFunctionExpr::eval_d(const MasterSystem& ms, const std::vector<double>& y) const {
  double prod = 1;
  for (const auto& f : ms.forms) prod *= f.eval_d(y);
  double den = 1;
  for (int i = 0; i < den_power; ++i) den *= prod;
  return num.eval_d(y[0], y.size() > 1 ? y[1] : 0.0) / den;
}

namespace {

Poly2Q form_to_poly(const LinearForm& f) {
  Poly2Q p;
  p.add_term(0, 0, f.c0);
  p.add_term(1, 0, f.lin[0]);
  if (f.k() > 1) p.add_term(0, 1, f.lin[1]);
  return p;
}

// Divide num by every form in turn; the quotient must stay exact.
Poly2Q clear_forms(const MasterSystem& ms, Poly2Q num, int times) {
  for (int round = 0; round < times; ++round)
    for (const auto& f : ms.forms) {
      AffineForm af{f.c0, f.lin[0], f.k() > 1 ? f.lin[1] : Rat(0)};
      auto [q, exact] = divide_affine(num, af);
      if (!exact) fail(Errc::clearing_failure, "chain numerator not divisible by a form");
      num = std::move(q);
    }
  return num;
}

// Numerator rows of grad psi_j over the common denominator prod p.
Poly2Q grad_psi_numerator(const MasterSystem& ms, int j, int var) {
  Poly2Q acc;
  for (int i = 0; i < ms.m(); ++i) {
    if (ms.b.at(i, j) == 0 || ms.forms[i].lin[var] == 0) continue;
    Poly2Q cof = Poly2Q::constant(ms.b.at(i, j) * ms.forms[i].lin[var]);
    for (int t = 0; t < ms.m(); ++t) {
      if (t == i) continue;
      cof = cof * form_to_poly(ms.forms[t]);
    }
    acc = acc + cof;
  }
  return acc;
}

}  // namespace

Poly2Q form_product(const MasterSystem& ms) {
  if (ms.k > 2) fail(Errc::bad_input, "polynomial clearing implemented for k <= 2");
  Poly2Q prod = Poly2Q::constant(Rat(1));
  for (const auto& f : ms.forms) prod = prod * form_to_poly(f);
  return prod;
}

GammaChain build_gamma_chain(const MasterSystem& ms) {
  if (!ms.rational_weights)
    fail(Errc::bad_input, "polynomial chain needs rational weights; evaluate psi directly");
  if (ms.k < 1 || ms.k > 2) fail(Errc::bad_input, "chain construction implemented for k <= 2");
  GammaChain chain;
  chain.n = ms.n;
  chain.k = ms.k;
  if (ms.k == 1) {
    // Jac(psi_1) over prod p: the numerator is already a polynomial.
    Poly2Q f0 = grad_psi_numerator(ms, 0, 0);
    if (f0.is_zero()) fail(Errc::degenerate_system, "chain polynomial vanished");
    chain.f.push_back(std::move(f0));
  } else {
    // Jac(psi_1, psi_2) has denominator (prod p)^2; one product divides out.
    Poly2Q n11 = grad_psi_numerator(ms, 0, 0), n12 = grad_psi_numerator(ms, 0, 1);
    Poly2Q n21 = grad_psi_numerator(ms, 1, 0), n22 = grad_psi_numerator(ms, 1, 1);
    Poly2Q det2 = n11 * n22 - n12 * n21;
    if (det2.is_zero()) fail(Errc::degenerate_system, "top chain polynomial vanished");
    Poly2Q f0 = clear_forms(ms, std::move(det2), 1);
    // Jac(psi_1, Gamma_2) with Gamma_2 = F_0 / prod p; denominator (prod p)^3,
    // numerator divisible once more by the product.
    Poly2Q prod = form_product(ms);
    Poly2Q r2x = f0.partial(0) * prod - f0 * prod.partial(0);
    Poly2Q r2y = f0.partial(1) * prod - f0 * prod.partial(1);
    Poly2Q det1 = n11 * r2y - n12 * r2x;
    if (det1.is_zero()) fail(Errc::degenerate_system, "second chain polynomial vanished");
    Poly2Q f1 = clear_forms(ms, std::move(det1), 1);
    chain.f.push_back(std::move(f0));
    chain.f.push_back(std::move(f1));
  }
  chain.within_bounds = true;
  for (size_t i = 0; i < chain.f.size(); ++i) {
    chain.degree_bound.push_back((1 << i) * ms.n);
    chain.degree.push_back(chain.f[i].total_degree());
    if (chain.degree.back() > chain.degree_bound.back()) chain.within_bounds = false;
  }
  return chain;
}

}  // namespace fewnomial
