#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fewnomial/lattice.hpp"
#include "fewnomial/linalg.hpp"
#include "fewnomial/numeric.hpp"

namespace fewnomial {

/// Degree-1 form c0 + sum_l lin[l] * y_l on R^k.
struct LinearForm {
  Rat c0;
  QVec lin;

  int k() const { return static_cast<int>(lin.size()); }
  Rat eval(const QVec& y) const;
  double eval_d(const std::vector<double>& y) const;
  /// Gradient is constant; entry l as double.
  double grad_d(int l) const { return to_double(lin[l]); }
  bool is_constant() const;
};

/// n Laurent polynomial equations in n variables sharing a support of n+k+1
/// monomials; coeffs(i, j) multiplies monomial j in equation i.
struct SparseSystem {
  lattice::ExponentSupport support;
  QMat coeffs;

  int n() const { return support.n; }
  int k() const { return support.k(); }
};

SparseSystem make_sparse_system(lattice::ExponentSupport support, QMat coeffs);

/// Evaluate all equations at a torus point (coordinates must be nonzero).
QVec eval_sparse(const SparseSystem& s, const QVec& x);
std::vector<double> eval_sparse_d(const SparseSystem& s, const std::vector<double>& x);

/// Gale dual data: degree-1 forms p_i standing in for the monomials x^{w_i},
/// and the weight basis tying them back through p^B = 1.
struct GaleDual {
  int n = 0, k = 0;
  std::vector<LinearForm> forms;  // n+k, slot i stands for x^{w_{i+1}}
  lattice::WeightBasis weights;   // (n+k) x k
  std::vector<int> free_slots;    // slots that became coordinates y_1..y_k, in order
};

/// Eliminate the monomial unknowns from the linear system; full pivoting on the
/// largest entry, ties broken toward the lowest column index.
GaleDual build_gale_dual(const SparseSystem& s);

/// The monomial values (p_1(y), ..., p_{n+k}(y)).
QVec push_to_torus_coords(const GaleDual& g, const QVec& y);
std::vector<double> push_to_torus_coords_d(const GaleDual& g, const std::vector<double>& y);

/// Recover x with x^{w_i} = z_i for all i, if a real solution exists.
struct TorusLift {
  bool sign_consistent = false;
  bool magnitude_consistent = false;
  std::vector<double> x;
  double max_log_residual = 0;
};
TorusLift lift_to_torus(const lattice::ExponentSupport& w, const std::vector<double>& z,
                        double log_tol = 1e-6);

/// Wiring checks for a constructed dual: the forms solve the linear system
/// identically, the weights annihilate the exponents, and the monomial map
/// satisfies the weight relations on random torus samples.
struct DualityReport {
  bool pass = false;
  int exact_checks = 0;
  int sample_checks = 0;
  double max_residual = 0;
  std::string detail;
};
DualityReport verify_duality(const SparseSystem& s, const GaleDual& g, int samples,
                             std::uint64_t seed);

}  // namespace fewnomial
