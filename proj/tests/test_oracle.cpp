#include <doctest.h>

#include <cmath>

#include "fewnomial/error.hpp"
#include "fewnomial/oracle.hpp"

using namespace fewnomial;
using namespace fewnomial::oracle;
using fewnomial::lattice::normalize_support;

namespace {

SparseSystem system_from(int n, std::initializer_list<std::initializer_list<long>> exps,
                         std::initializer_list<long> coeffs) {
  std::vector<std::vector<Int>> vv;
  for (const auto& v : exps) {
    std::vector<Int> row;
    for (long x : v) row.emplace_back(x);
    vv.push_back(std::move(row));
  }
  auto support = normalize_support(n, std::move(vv));
  QMat c(n, support.count());
  auto it = coeffs.begin();
  for (auto& v : c.a) v = Rat(*it++);
  return make_sparse_system(std::move(support), std::move(c));
}

UPoly upoly(std::vector<Rat> c) { return UPoly(std::move(c)); }

}  // namespace

TEST_CASE("univariate census splits simple and repeated roots") {
  // (x - 1)^2 (x + 2) = x^3 - 3x + 2: one simple nonzero root, one double.
  UnivariateCount uc = count_real_univariate(upoly({2, -3, 0, 1}));
  CHECK(uc.nondegenerate == 1);
  CHECK(uc.degenerate == 1);
  REQUIRE(uc.roots.size() == 1);
  CHECK(uc.roots[0].hi < 0);
  CHECK(to_double(uc.roots[0].mid) == doctest::Approx(-2.0).epsilon(1e-6));

  // x^4 - 5x^2 + 4 = (x^2-1)(x^2-4): four simple nonzero roots.
  UnivariateCount quartic = count_real_univariate(upoly({4, 0, -5, 0, 1}));
  CHECK(quartic.nondegenerate == 4);
  CHECK(quartic.degenerate == 0);
  REQUIRE(quartic.roots.size() == 4);
  double expect[] = {-2, -1, 1, 2};
  for (int i = 0; i < 4; ++i) {
    CHECK(to_double(quartic.roots[i].mid) == doctest::Approx(expect[i]).epsilon(1e-6));
    CHECK(!QIv(quartic.roots[i].lo, quartic.roots[i].hi).contains_zero());
  }

  CHECK(count_real_univariate(upoly({1, 0, 1})).nondegenerate == 0);  // x^2 + 1
  // Roots at the origin are artifacts, never counted: x^3 + x^2 = x^2 (x + 1).
  UnivariateCount shifted = count_real_univariate(upoly({0, 0, 1, 1}));
  CHECK(shifted.nondegenerate == 1);
  CHECK(shifted.degenerate == 0);

  // Perturbed double root splits into three simple roots.
  UnivariateCount witness = count_real_univariate(upoly({Rat(199, 100), -3, 0, 1}));
  CHECK(witness.nondegenerate == 3);
  CHECK(witness.degenerate == 0);

  CHECK_THROWS_AS(count_real_univariate(UPoly()), Error);
}

TEST_CASE("counts are precision independent") {
  // Close root pair at 1 +- 1e-4: counting never depends on isolation widths.
  Rat a = Rat(1) - Rat(1, 10000), b = Rat(1) + Rat(1, 10000);
  UPoly f = upoly({a * b, -(a + b), 1});
  UnivariateCount uc = count_real_univariate(f);
  CHECK(uc.nondegenerate == 2);
  CHECK(uc.roots[0].hi < uc.roots[1].lo);
}

TEST_CASE("laurent clearing shifts supports to polynomials") {
  // x^-1 + 2 + x clears to 1 + 2x + x^2.
  SparseSystem s = system_from(1, {{0}, {-1}, {1}}, {2, 1, 1});
  UPoly cleared = laurent_to_upoly(s);
  CHECK(cleared == upoly({1, 2, 1}));

  // Already-polynomial input is unchanged.
  SparseSystem p = system_from(1, {{0}, {2}, {3}}, {5, -1, 2});
  CHECK(laurent_to_upoly(p) == upoly({5, 0, -1, 2}));

  // y/x + x picks up the factor x: y + x^2 (shared support, two equations).
  SparseSystem q = system_from(2, {{0, 0}, {-1, 1}, {1, 0}}, {0, 1, 1, 1, 1, 0});
  auto [f, g] = laurent_to_bivariate(q);
  CHECK(f.coeff(0, 1) == 1);  // y
  CHECK(f.coeff(2, 0) == 1);  // x^2
  CHECK(f.coeff(1, 0) == 0);
  CHECK(g.coeff(1, 0) == 1);  // x * 1
  CHECK(g.coeff(0, 1) == 1);  // x * (y/x)
}

TEST_CASE("bivariate census certifies isolated common zeros") {
  Poly2Q circle;  // x^2 + y^2 - 1
  circle.add_term(2, 0, 1);
  circle.add_term(0, 2, 1);
  circle.add_term(0, 0, -1);
  Poly2Q diag;  // x - y
  diag.add_term(1, 0, 1);
  diag.add_term(0, 1, -1);
  BivariateCount bc = count_real_bivariate(circle, diag);
  CHECK(bc.nondegenerate == 2);
  CHECK(bc.degenerate_suspects == 0);
  for (const auto& box : bc.boxes) {
    CHECK(!box.x.contains_zero());
    CHECK(intersects(box.x, box.y));  // solutions lie on x = y
  }

  Poly2Q fx;  // x - 1
  fx.add_term(1, 0, 1);
  fx.add_term(0, 0, -1);
  Poly2Q gy;  // y - 2
  gy.add_term(0, 1, 1);
  gy.add_term(0, 0, -2);
  BivariateCount point = count_real_bivariate(fx, gy);
  CHECK(point.nondegenerate == 1);
  CHECK(point.boxes[0].x.contains(Rat(1)));
  CHECK(point.boxes[0].y.contains(Rat(2)));

  Poly2Q hyper;  // xy - 1
  hyper.add_term(1, 1, 1);
  hyper.add_term(0, 0, -1);
  BivariateCount two = count_real_bivariate(hyper, diag);
  CHECK(two.nondegenerate == 2);

  // Axis solutions are excluded: circle meets x = 0 at (0, +-1) only.
  Poly2Q axis = Poly2Q::variable(0);
  CHECK(count_real_bivariate(circle, axis).nondegenerate == 0);

  // Tangency is flagged, not counted: x^2 + y^2 = 2 touching x + y = 2 at (1,1).
  Poly2Q circle2;
  circle2.add_term(2, 0, 1);
  circle2.add_term(0, 2, 1);
  circle2.add_term(0, 0, -2);
  Poly2Q line2;
  line2.add_term(1, 0, 1);
  line2.add_term(0, 1, 1);
  line2.add_term(0, 0, -2);
  BivariateCount tangent = count_real_bivariate(circle2, line2);
  CHECK(tangent.nondegenerate == 0);
  CHECK(tangent.degenerate_suspects == 1);

  // A shared factor makes the zero set positive-dimensional.
  CHECK_THROWS_AS(count_real_bivariate(line2, line2), Error);
}

TEST_CASE("sparse census with caps") {
  // Trinomial 2 - 3x + x^3: support {0,1,3} has odd span index.
  SparseSystem tri = system_from(1, {{0}, {1}, {3}}, {2, -3, 1});
  OracleReport rep = oracle_count(tri);
  CHECK(rep.count == 1);
  CHECK(rep.degenerate_suspects == 1);
  CHECK(rep.positive_count == 0);
  REQUIRE(rep.volume_cap.has_value());
  CHECK(*rep.volume_cap == 3);
  CHECK(rep.within_volume_cap);
  REQUIRE(rep.parity_cap.has_value());
  CHECK(*rep.parity_cap == 14);  // n = 1, k = 1 strict cap
  CHECK(rep.within_parity_cap);

  // Even-index support {0,2,4}: the parity cap does not apply, count may hit 4.
  SparseSystem even = system_from(1, {{0}, {2}, {4}}, {4, -5, 1});
  OracleReport erep = oracle_count(even);
  CHECK(erep.count == 4);
  CHECK_FALSE(erep.parity_cap.has_value());
  CHECK(erep.within_volume_cap);

  // Two positive roots: (x-1)(x-2) = 2 - 3x + x^2.
  SparseSystem pos = system_from(1, {{0}, {1}, {2}}, {2, -3, 1});
  OracleReport prep = oracle_count(pos);
  CHECK(prep.count == 2);
  CHECK(prep.positive_count == 2);

  // n = 2 point system x = 1, y = 2.
  SparseSystem pt = system_from(2, {{0, 0}, {1, 0}, {0, 1}}, {-1, 1, 0, -2, 0, 1});
  OracleReport ptrep = oracle_count(pt);
  CHECK(ptrep.count == 1);
  CHECK(ptrep.positive_count == 1);
  CHECK(ptrep.within_volume_cap);
  REQUIRE(ptrep.approx.size() == 1);
  CHECK(to_double(ptrep.approx[0][0]) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(to_double(ptrep.approx[0][1]) == doctest::Approx(2.0).epsilon(1e-6));
}
