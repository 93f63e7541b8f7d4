#include <doctest.h>

#include "fewnomial/error.hpp"
#include "fewnomial/gale.hpp"

using namespace fewnomial;
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

}  // namespace

TEST_CASE("dual of a univariate trinomial") {
  // 2 - 3x + x^3
  SparseSystem s = system_from(1, {{0}, {1}, {3}}, {2, -3, 1});
  GaleDual g = build_gale_dual(s);
  REQUIRE(g.forms.size() == 2);
  REQUIRE(g.free_slots == std::vector<int>{1});
  // Pivot lands on the largest coefficient: slot for x becomes (2 + y)/3.
  CHECK(g.forms[0].c0 == Rat(2, 3));
  CHECK(g.forms[0].lin[0] == Rat(1, 3));
  CHECK(g.forms[1].c0 == 0);
  CHECK(g.forms[1].lin[0] == 1);
  CHECK(g.weights.b.at(0, 0) == 3);
  CHECK(g.weights.b.at(1, 0) == -1);

  // x = 1 and x = -2 are roots; their monomial vectors sit on the forms.
  for (long x : {1L, -2L}) {
    QVec mono{Rat(x), rat_pow(Rat(x), 3)};
    QVec y{mono[1]};  // free slot carries x^3
    QVec z = push_to_torus_coords(g, y);
    CHECK(z[0] == mono[0]);
    CHECK(z[1] == mono[1]);
  }
}

TEST_CASE("duality wiring holds for a bivariate system") {
  // Two equations, supports {0, e1, e2, (1,1)}
  SparseSystem s = system_from(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}},
                               {1, 2, -1, 3, -2, 1, 1, -1});
  GaleDual g = build_gale_dual(s);
  CHECK(g.k == 1);
  DualityReport rep = verify_duality(s, g, 25, 42);
  CHECK(rep.pass);
  CHECK(rep.max_residual < 1e-12);
  CHECK(rep.detail.empty());
}

TEST_CASE("duality wiring holds for k=2") {
  SparseSystem s = system_from(2, {{0, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 2}},
                               {1, 2, -1, 3, 1, -2, 1, 1, -1, 2});
  GaleDual g = build_gale_dual(s);
  CHECK(g.k == 2);
  CHECK(g.free_slots.size() == 2);
  DualityReport rep = verify_duality(s, g, 25, 7);
  CHECK(rep.pass);
}

TEST_CASE("degenerate coefficient rows are rejected") {
  SparseSystem s = system_from(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}},
                               {1, 2, -1, 3, 2, 4, -2, 6});
  CHECK_THROWS_AS(build_gale_dual(s), Error);
}

TEST_CASE("torus lift recovers signs and magnitudes") {
  auto w = normalize_support(1, {{Int(0)}, {Int(1)}, {Int(3)}});
  TorusLift lift = lift_to_torus(w, {-2.0, -8.0});
  REQUIRE(lift.sign_consistent);
  REQUIRE(lift.magnitude_consistent);
  CHECK(lift.x[0] == doctest::Approx(-2.0));

  TorusLift bad_sign = lift_to_torus(normalize_support(1, {{Int(0)}, {Int(2)}}), {-1.0});
  CHECK_FALSE(bad_sign.sign_consistent);

  TorusLift bad_mag = lift_to_torus(w, {2.0, 9.0});
  CHECK(bad_mag.sign_consistent);
  CHECK_FALSE(bad_mag.magnitude_consistent);

  // Two variables: z = (x1, x2, x1*x2^2) at x = (3, -1/2)
  auto w2 = normalize_support(2, {{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(0), Int(1)},
                                  {Int(1), Int(2)}});
  TorusLift l2 = lift_to_torus(w2, {3.0, -0.5, 0.75});
  REQUIRE(l2.sign_consistent);
  REQUIRE(l2.magnitude_consistent);
  CHECK(l2.x[0] == doctest::Approx(3.0));
  CHECK(l2.x[1] == doctest::Approx(-0.5));
}

TEST_CASE("sparse evaluation matches by hand") {
  SparseSystem s = system_from(1, {{0}, {1}, {3}}, {2, -3, 1});
  CHECK(eval_sparse(s, {Rat(1)})[0] == 0);
  CHECK(eval_sparse(s, {Rat(-2)})[0] == 0);
  CHECK(eval_sparse(s, {Rat(2)})[0] == Rat(4));
  CHECK_THROWS_AS(eval_sparse(s, {Rat(0)}), Error);
  auto r = eval_sparse_d(s, {1.0});
  CHECK(r[0] == doctest::Approx(0.0));
}

TEST_CASE("negative exponents evaluate as Laurent terms") {
  SparseSystem s = system_from(1, {{-2}, {0}, {1}}, {1, -2, 1});
  // Support normalizes to {0, 2, 3}; the original Laurent roots survive scaling.
  QVec at2 = eval_sparse(s, {Rat(2)});
  CHECK(at2[0] == Rat(1) - Rat(2) * 4 + 8);
}
