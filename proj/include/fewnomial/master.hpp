#pragma once

#include <optional>
#include <vector>

#include "fewnomial/bpoly.hpp"
#include "fewnomial/gale.hpp"
#include "fewnomial/linalg.hpp"

namespace fewnomial {

/// Logarithmic system psi_j(y) = sum_i b_ij log|p_i(y)| on the complement of the
/// hyperplane arrangement of the forms. Zeros of all psi_j are the master points.
struct MasterSystem {
  int n = 0, k = 0;
  std::vector<LinearForm> forms;  // n+k degree-1 forms
  QMat b;                         // (n+k) x k weights, used when integer_weights
  std::vector<std::vector<double>> b_real;  // set instead for irrational weights
  bool rational_weights = true;

  int m() const { return static_cast<int>(forms.size()); }
  double weight_d(int i, int j) const {
    return rational_weights ? to_double(b.at(i, j)) : b_real[i][j];
  }
  /// Weight of the hyperplane at infinity, column j: minus the column sum.
  Rat infinity_weight(int j) const;
};

MasterSystem make_master(const GaleDual& g);
MasterSystem make_master(std::vector<LinearForm> forms, QMat b);
MasterSystem make_master_real(std::vector<LinearForm> forms,
                              std::vector<std::vector<double>> b);

/// psi values; -inf on the arrangement itself.
std::vector<double> eval_psi(const MasterSystem& ms, const std::vector<double>& y);
/// Row j holds grad psi_j.
std::vector<std::vector<double>> eval_grad_psi(const MasterSystem& ms,
                                               const std::vector<double>& y);
/// Exact gradient at a rational point off the arrangement (rational weights only).
std::vector<QVec> eval_grad_psi_exact(const MasterSystem& ms, const QVec& y);

/// Quotient num / (prod_i p_i)^den_power.
struct RationalFunctionExpr {
  Poly2Q num;
  int den_power = 0;

  double eval_d(const MasterSystem& ms, const std::vector<double>& y) const;
};

/// Cleared Jacobian chain: f[i] is the polynomial carrying the i-th Jacobian
/// surface, of degree at most 2^i * n. Built for k <= 2 with rational weights.
struct GammaChain {
  int n = 0, k = 0;
  std::vector<Poly2Q> f;
  std::vector<int> degree_bound;
  std::vector<int> degree;
  bool within_bounds = false;

  /// The chain surface as a rational function over the form product.
  RationalFunctionExpr gamma_expr(int i) const {
    return {f[static_cast<size_t>(i)], 1 << i};
  }
};

GammaChain build_gamma_chain(const MasterSystem& ms);

/// prod_i p_i(y) as a polynomial (k <= 2).
Poly2Q form_product(const MasterSystem& ms);

}  // namespace fewnomial
