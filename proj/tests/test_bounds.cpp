#include <doctest.h>

#include <vector>

#include "fewnomial/bounds.hpp"
#include "fewnomial/error.hpp"

using namespace fewnomial;

TEST_CASE("constant enclosures are tight and mutually consistent") {
  Rat ulp2 = e2_upper() - e2_lower();
  Rat ulp4 = e4_upper() - e4_lower();
  CHECK(ulp2 == Rat(Int(1), int_pow(Int(10), 29)));
  CHECK(ulp4 == Rat(Int(1), int_pow(Int(10), 28)));
  CHECK(to_double(e2_lower()) == doctest::Approx(7.389056098930650).epsilon(1e-15));
  CHECK(to_double(e4_lower()) == doctest::Approx(54.598150033144236).epsilon(1e-15));
  // Squaring one enclosure must land inside a slight widening of the other;
  // a single wrong digit in either constant breaks these by many orders.
  CHECK(e2_lower() * e2_lower() < e4_upper());
  CHECK(e2_upper() * e2_upper() > e4_lower());
}

TEST_CASE("solution bound values at small sizes") {
  BoundValue b11 = solution_bound(1, 1);
  CHECK(b11.strict_int == 14);
  CHECK(b11.value == doctest::Approx(14.3995375082860597695).epsilon(1e-12));
  CHECK(b11.lower < b11.upper);

  BoundValue b21 = solution_bound(2, 1);
  CHECK(b21.strict_int == 28);
  CHECK(b21.value == doctest::Approx(28.7990750165721195).epsilon(1e-12));

  // k = 0 collapses the scale to 1 whatever n is.
  CHECK(solution_bound(7, 0).strict_int == 14);
  CHECK(solution_bound(7, 0).value == doctest::Approx(b11.value));

  BoundValue p11 = positive_solution_bound(1, 1);
  CHECK(p11.strict_int == 2);
  CHECK(p11.value == doctest::Approx(2.59726402473266255681).epsilon(1e-12));
  CHECK(positive_solution_bound(2, 1).strict_int == 5);

  CHECK_THROWS_AS(solution_bound(0, 1), Error);
  CHECK_THROWS_AS(positive_solution_bound(1, -1), Error);
}

TEST_CASE("nonzero-to-positive ratio is a fixed constant") {
  const double ratio = 5.54411772202027478746220286369;
  for (int n : {1, 2, 3, 5, 10})
    for (int k : {1, 2, 3, 7}) {
      double r = solution_bound(n, k).value / positive_solution_bound(n, k).value;
      CHECK(r == doctest::Approx(ratio).epsilon(1e-12));
    }
}

TEST_CASE("classical bound values") {
  CHECK(khovanskii_bound(1, 1) == 8);
  CHECK(khovanskii_bound(2, 1) == 216);
  CHECK(khovanskii_bound(1, 0) == 2);
  CHECK(khovanskii_bound(3, 2) == Int("1048576"));
  // Arbitrary precision matters: n = k = 10 is 2^190 * 11^20, about 1.06e78.
  Int big = khovanskii_bound(10, 10);
  CHECK(big > int_pow(Int(10), 78));
  CHECK(big < int_pow(Int(10), 79));
}

TEST_CASE("sharp caps for the minimal excess case") {
  CHECK(sharp_small_bounds(1).nonzero == 3);
  CHECK(sharp_small_bounds(1).positive == 2);
  CHECK(sharp_small_bounds(2).nonzero == 5);
  CHECK(sharp_small_bounds(2).positive == 3);
  CHECK(sharp_small_bounds(10).nonzero == 21);
  CHECK(sharp_small_bounds(10).positive == 11);
  CHECK_THROWS_AS(sharp_small_bounds(0), Error);
}

TEST_CASE("tracing ledger at frozen sizes") {
  KrLedger l11 = kr_ledger(1, 1);
  CHECK(l11.gamma_term == 1);
  REQUIRE(l11.flat_terms.size() == 1);
  CHECK(l11.flat_terms[0] == 1);
  CHECK(l11.total == 2);

  KrLedger l21 = kr_ledger(2, 1);
  CHECK(l21.gamma_term == 2);
  CHECK(l21.flat_terms[0] == 2);
  CHECK(l21.total == 4);

  KrLedger l12 = kr_ledger(1, 2);
  CHECK(l12.gamma_term == 2);
  REQUIRE(l12.flat_terms.size() == 2);
  CHECK(l12.flat_terms[0] == 2);
  CHECK(l12.flat_terms[1] == 4);
  CHECK(l12.total == 8);

  KrLedger l22 = kr_ledger(2, 2);
  CHECK(l22.gamma_term == 8);
  CHECK(l22.flat_terms[0] == 8);
  CHECK(l22.flat_terms[1] == 16);
  CHECK(l22.total == 32);

  CHECK_THROWS_AS(kr_ledger(1, 0), Error);
}

TEST_CASE("ledger chain and monotonicity across the grid") {
  Rat prev_total(0);
  for (int n = 1; n <= 10; ++n)
    for (int k = 1; k <= 10; ++k) {
      KrLedger led = kr_ledger(n, k);
      BoundValue nb = solution_bound(n, k);
      // Exact chain: itemized total <= series majorant < closed-form bound.
      CHECK(led.total <= led.series_bound);
      CHECK(led.series_bound < nb.lower);
      // Caps never shrink when the problem grows.
      if (n > 1) {
        CHECK(solution_bound(n - 1, k).upper <= nb.lower);
        CHECK(khovanskii_bound(n - 1, k) <= khovanskii_bound(n, k));
        CHECK(kr_ledger(n - 1, k).total <= led.total);
      }
      if (k > 1) {
        CHECK(solution_bound(n, k - 1).upper <= nb.lower);
        CHECK(khovanskii_bound(n, k - 1) <= khovanskii_bound(n, k));
        CHECK(kr_ledger(n, k - 1).total <= led.total);
      }
      // The improvement over the classical cap holds beyond the smallest case.
      if (n + k > 2) CHECK(nb.upper < Rat(khovanskii_bound(n, k)));
    }
  // The lone exception: at n = k = 1 the classical cap (8) is the smaller one.
  CHECK(solution_bound(1, 1).lower > Rat(khovanskii_bound(1, 1)));
}

TEST_CASE("reports bundle the caps and volume data") {
  BoundReport r = bound_report(2, 1);
  CHECK(r.solution.strict_int == 28);
  CHECK(r.positive.strict_int == 5);
  CHECK(r.khovanskii == 216);
  CHECK_FALSE(r.kouchnirenko.has_value());
  CHECK(r.ledger.total == 4);

  // Univariate trinomial support 1, x^2, x^5: volume bound is the degree span.
  lattice::ExponentSupport s = lattice::normalize_support(1, {{0}, {2}, {5}});
  BoundReport rs = bound_report(s);
  CHECK(rs.n == 1);
  CHECK(rs.k == 1);
  REQUIRE(rs.kouchnirenko.has_value());
  CHECK(*rs.kouchnirenko == 5);
  CHECK(*rs.kouchnirenko == lattice::kouchnirenko_bound(s));
}
