#include <doctest.h>

#include "fewnomial/error.hpp"
#include "fewnomial/upoly.hpp"

using namespace fewnomial;

namespace {

UPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.emplace_back(v);
  return UPoly(std::move(c));
}

}  // namespace

TEST_CASE("arithmetic and evaluation") {
  UPoly f = poly({1, 0, -3, 1});  // 1 - 3y^2 + y^3
  CHECK(f.degree() == 3);
  CHECK(f.eval(Rat(2)) == Rat(-3));
  CHECK(f.eval_d(2.0) == doctest::Approx(-3.0));
  UPoly g = poly({-1, 1});  // y - 1
  CHECK((f * g).eval(Rat(3)) == f.eval(Rat(3)) * g.eval(Rat(3)));
  CHECK((f + g).eval(Rat(5)) == f.eval(Rat(5)) + g.eval(Rat(5)));
  CHECK((f - f).is_zero());
  CHECK(f.derivative() == poly({0, -6, 3}));
}

TEST_CASE("division") {
  UPoly f = poly({-1, 0, 0, 1});  // y^3 - 1
  UPoly g = poly({-1, 1});        // y - 1
  auto [q, r] = divmod(f, g);
  CHECK(r.is_zero());
  CHECK(q == poly({1, 1, 1}));
  auto [q2, r2] = divmod(poly({1, 1}), poly({0, 0, 1}));
  CHECK(q2.is_zero());
  CHECK(r2 == poly({1, 1}));
}

TEST_CASE("gcd and squarefree part") {
  UPoly a = poly({-1, 1});
  UPoly b = poly({2, 1});
  UPoly f = a * a * b;  // (y-1)^2 (y+2)
  CHECK(poly_gcd(f, f.derivative()) == a);
  CHECK(squarefree_part(f) == a * b);
  CHECK(poly_gcd(poly({2, 4}), poly({3, 6})) == poly({1, 2}));
}

TEST_CASE("valuation stripping") {
  auto [v, g] = strip_valuation(poly({0, 0, 5, 5}));
  CHECK(v == 2);
  CHECK(g == poly({5, 5}));
  auto [v2, g2] = strip_valuation(poly({3, 1}));
  CHECK(v2 == 0);
}

TEST_CASE("Sturm counting") {
  // y^3 - 3y + 199/100: three real roots
  UPoly f = poly({0, -3, 0, 1}) + UPoly::constant(Rat(199, 100));
  SturmChain chain = sturm_chain(f);
  CHECK(chain.count_all() == 3);
  CHECK(chain.count(Rat(0), Rat(2)) == 2);
  CHECK(chain.count(Rat(-3), Rat(0)) == 1);

  // y^3 - 3y + 201/100: one real root
  UPoly g = poly({0, -3, 0, 1}) + UPoly::constant(Rat(201, 100));
  CHECK(sturm_chain(g).count_all() == 1);

  // Repeated roots count once
  UPoly a = poly({-1, 1});
  CHECK(sturm_chain(a * a * poly({2, 1})).count_all() == 2);

  // x^4 - 5x^2 + 4 = (x^2-1)(x^2-4)
  UPoly h = poly({4, 0, -5, 0, 1});
  CHECK(sturm_chain(h).count_all() == 4);
}

TEST_CASE("root isolation separates and brackets") {
  UPoly f = poly({4, 0, -5, 0, 1});  // roots -2, -1, 1, 2
  auto ivs = isolate_real_roots(f);
  REQUIRE(ivs.size() == 4);
  double expect[4] = {-2, -1, 1, 2};
  for (size_t i = 0; i < 4; ++i) {
    CHECK(f.eval(ivs[i].first) != 0);
    CHECK(f.eval(ivs[i].second) != 0);
    CHECK_FALSE((ivs[i].first < 0 && 0 < ivs[i].second));
    auto [lo, hi] = refine_root(f, ivs[i].first, ivs[i].second, Rat(1, 1000000));
    double mid = (to_double(lo) + to_double(hi)) / 2;
    CHECK(mid == doctest::Approx(expect[i]).epsilon(1e-5));
  }
}

TEST_CASE("isolation avoids the origin and exact rational roots stay inside") {
  // y^2 - y/6 - 1/6 = (y - 1/2)(y + 1/3): roots on both sides of the origin
  UPoly f(std::vector<Rat>{Rat(-1, 6), Rat(-1, 6), Rat(1)});
  auto ivs = isolate_real_roots(f);
  REQUIRE(ivs.size() == 2);
  for (const auto& [lo, hi] : ivs) CHECK_FALSE((lo < 0 && 0 < hi));
  CHECK(ivs[0].first < Rat(-1, 3));
  CHECK(Rat(-1, 3) < ivs[0].second);
  CHECK(ivs[1].first < Rat(1, 2));
  CHECK(Rat(1, 2) < ivs[1].second);
  CHECK_THROWS_AS(isolate_real_roots(poly({0, 1})), Error);
}

TEST_CASE("dense root clusters get separated") {
  // (y-1)(y-10001/10000)(y+5) has two roots 1e-4 apart
  UPoly f = poly({-1, 1}) * UPoly(std::vector<Rat>{Rat(-10001, 10000), Rat(1)}) * poly({5, 1});
  auto ivs = isolate_real_roots(f);
  REQUIRE(ivs.size() == 3);
  for (size_t i = 0; i + 1 < ivs.size(); ++i) CHECK(ivs[i].second <= ivs[i + 1].first);
}
