#include "fewnomial/bounds.hpp"

#include <algorithm>

#include "fewnomial/error.hpp"

namespace fewnomial {

namespace {

Rat digits_over(const char* digits, int exp10) {
  Rat r(Int(digits), int_pow(Int(10), static_cast<unsigned>(exp10)));
  r.canonicalize();
  return r;
}

}  // namespace

// 30 significant digits; adjacent grid points bracketing the true value.
const Rat& e2_lower() {
  static const Rat v = digits_over("738905609893065022723042746057", 29);
  return v;
}
const Rat& e2_upper() {
  static const Rat v = digits_over("738905609893065022723042746058", 29);
  return v;
}
const Rat& e4_lower() {
  static const Rat v = digits_over("545981500331442390781102612028", 28);
  return v;
}
const Rat& e4_upper() {
  static const Rat v = digits_over("545981500331442390781102612029", 28);
  return v;
}

namespace {

unsigned choose2(int k) { return static_cast<unsigned>(k) * (k - 1) / 2; }

// 2^C(k,2) * n^k, the common scale of both solution bounds.
Int bound_scale(int n, int k) {
  Int s = int_pow(Int(2), choose2(k)) * int_pow(Int(n), static_cast<unsigned>(k));
  return s;
}

// (c + 3)/4 * scale for c enclosed by [clo, chi]; the enclosure certifies the
// strict integer cap because the true value is irrational.
BoundValue enclosed_bound(const Rat& clo, const Rat& chi, int n, int k) {
  if (n < 1 || k < 0) fail(Errc::bad_input, "bound needs n >= 1, k >= 0");
  Rat scale(bound_scale(n, k));
  BoundValue b;
  b.lower = (clo + 3) / 4 * scale;
  b.upper = (chi + 3) / 4 * scale;
  b.strict_int = floor_rat(b.lower);
  if (b.strict_int != floor_rat(b.upper))
    fail(Errc::bad_input, "bound enclosure straddles an integer; constants need more digits");
  Rat mid = (b.lower + b.upper) / 2;
  b.value = to_double(mid);
  return b;
}

}  // namespace

BoundValue solution_bound(int n, int k) { return enclosed_bound(e4_lower(), e4_upper(), n, k); }

BoundValue positive_solution_bound(int n, int k) {
  return enclosed_bound(e2_lower(), e2_upper(), n, k);
}

Int khovanskii_bound(int n, int k) {
  if (n < 1 || k < 0) fail(Errc::bad_input, "bound needs n >= 1, k >= 0");
  Int r = int_pow(Int(2), choose2(n + k)) * int_pow(Int(n + 1), static_cast<unsigned>(n + k));
  return r;
}

SharpSmallBounds sharp_small_bounds(int n) {
  if (n < 1) fail(Errc::bad_input, "bound needs n >= 1");
  return {Int(2 * n + 1), Int(n + 1)};
}

KrLedger kr_ledger(int n, int k) {
  if (n < 1 || k < 1) fail(Errc::bad_input, "ledger needs n >= 1, k >= 1");
  KrLedger led;
  led.gamma_term = bound_scale(n, k);
  led.total = Rat(led.gamma_term);
  Rat series(0);
  for (int j = 1; j <= k; ++j) {
    Rat first = flat_face_bound(n, k, j);
    // Series route: the same cap folded toward the exponential majorant.
    Int pow4 = int_pow(Int(2), static_cast<unsigned>(2 * j - 1));
    Int fact2 = 2 * factorial(static_cast<unsigned>(j));
    Rat second = Rat(led.gamma_term * pow4, fact2);
    second.canonicalize();
    led.flat_terms.push_back(std::min(first, second));
    led.total += led.flat_terms.back();
    Rat term(int_pow(Int(4), static_cast<unsigned>(j)), factorial(static_cast<unsigned>(j)));
    term.canonicalize();
    series += term;
  }
  led.series_bound = Rat(led.gamma_term) * (1 + series / 4);
  // total <= gamma*(1 + sum/4) < gamma*(e^4+3)/4, both provable in exact arithmetic.
  if (led.total > led.series_bound) fail(Errc::bad_input, "ledger exceeds its series majorant");
  Rat cap = (e4_lower() + 3) / 4 * Rat(led.gamma_term);
  if (!(led.series_bound < cap)) fail(Errc::bad_input, "series majorant reaches the closed form");
  return led;
}

Rat flat_face_bound(int n, int k, int j) {
  if (n < 1 || k < 1 || j < 1 || j > k) fail(Errc::bad_input, "flat bound needs 1 <= j <= k");
  // Half of (codim-j faces) * (incident chambers) * (curve degree factor).
  Int faces = binomial(static_cast<unsigned>(n + k + 1), static_cast<unsigned>(j));
  Int combinatorial = bound_scale(n, k - j) * faces * int_pow(Int(2), static_cast<unsigned>(j));
  return Rat(combinatorial) / 2;
}

BoundReport bound_report(int n, int k) {
  if (n < 1 || k < 1) fail(Errc::bad_input, "report needs n >= 1, k >= 1");
  BoundReport r;
  r.n = n;
  r.k = k;
  r.solution = solution_bound(n, k);
  r.positive = positive_solution_bound(n, k);
  r.khovanskii = khovanskii_bound(n, k);
  r.ledger = kr_ledger(n, k);
  return r;
}

BoundReport bound_report(const lattice::ExponentSupport& support) {
  BoundReport r = bound_report(support.n, support.k());
  if (support.n <= 3) r.kouchnirenko = lattice::kouchnirenko_bound(support);
  return r;
}

}  // namespace fewnomial
