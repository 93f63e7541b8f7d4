#include <doctest.h>

#include <cmath>

#include "fewnomial/error.hpp"
#include "fewnomial/master.hpp"

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

TEST_CASE("univariate trinomial master system") {
  SparseSystem s = system_from(1, {{0}, {1}, {3}}, {2, -3, 1});
  MasterSystem ms = make_master(build_gale_dual(s));
  CHECK(ms.n == 1);
  CHECK(ms.k == 1);
  CHECK(ms.infinity_weight(0) == Rat(-2));

  // psi(1) = 3 log 1 - log 1 = 0: the image of the root x = 1.
  CHECK(eval_psi(ms, {1.0})[0] == doctest::Approx(0.0));
  // psi(2) = 3 log(4/3) - log 2
  CHECK(eval_psi(ms, {2.0})[0] == doctest::Approx(3 * std::log(4.0 / 3.0) - std::log(2.0)));
  CHECK(eval_grad_psi(ms, {2.0})[0][0] == doctest::Approx(0.25));
  auto exact = eval_grad_psi_exact(ms, {Rat(2)});
  CHECK(exact[0][0] == Rat(1, 4));

  GammaChain chain = build_gamma_chain(ms);
  REQUIRE(chain.f.size() == 1);
  // F_0 = (2y - 2)/3: single chain root at y = 1.
  CHECK(chain.f[0].coeff(0, 0) == Rat(-2, 3));
  CHECK(chain.f[0].coeff(1, 0) == Rat(2, 3));
  CHECK(chain.degree == std::vector<int>{1});
  CHECK(chain.degree_bound == std::vector<int>{1});
  CHECK(chain.within_bounds);
}

TEST_CASE("chain surfaces agree with log-derivative determinants") {
  SparseSystem s = system_from(2, {{0, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 2}},
                               {1, 2, -1, 3, 1, -2, 1, 1, -1, 2});
  MasterSystem ms = make_master(build_gale_dual(s));
  REQUIRE(ms.k == 2);
  GammaChain chain = build_gamma_chain(ms);
  REQUIRE(chain.f.size() == 2);
  CHECK(chain.degree_bound == std::vector<int>{2, 4});
  CHECK(chain.within_bounds);

  Poly2Q prod = form_product(ms);
  QVec samples[] = {{Rat(1, 3), Rat(2)}, {Rat(-5, 7), Rat(1, 2)}, {Rat(4), Rat(-3, 5)}};
  for (const auto& y : samples) {
    bool on_arrangement = false;
    for (const auto& f : ms.forms)
      if (f.eval(y) == 0) on_arrangement = true;
    REQUIRE_FALSE(on_arrangement);

    Rat py = prod.eval(y[0], y[1]);
    auto g = eval_grad_psi_exact(ms, y);
    Rat top = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    // Gamma_2 = F_0 / prod p
    CHECK(chain.f[0].eval(y[0], y[1]) == top * py);

    // grad Gamma_2 = (F0' * prod - F0 * prod') / prod^2
    Rat f0v = chain.f[0].eval(y[0], y[1]);
    Rat gx = (chain.f[0].partial(0).eval(y[0], y[1]) * py -
              f0v * prod.partial(0).eval(y[0], y[1])) / (py * py);
    Rat gy = (chain.f[0].partial(1).eval(y[0], y[1]) * py -
              f0v * prod.partial(1).eval(y[0], y[1])) / (py * py);
    // Gamma_1 = det(grad psi_1; grad Gamma_2) = F_1 / prod^2
    Rat gamma1 = g[0][0] * gy - g[0][1] * gx;
    CHECK(chain.f[1].eval(y[0], y[1]) == gamma1 * py * py);
  }
}

TEST_CASE("rational function shells evaluate consistently") {
  SparseSystem s = system_from(2, {{0, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 2}},
                               {1, 2, -1, 3, 1, -2, 1, 1, -1, 2});
  MasterSystem ms = make_master(build_gale_dual(s));
  GammaChain chain = build_gamma_chain(ms);
  std::vector<double> y{0.37, -1.21};
  auto g = eval_grad_psi(ms, y);
  double det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  CHECK(chain.gamma_expr(0).eval_d(ms, y) == doctest::Approx(det).epsilon(1e-9));
}

TEST_CASE("hand-built master systems validate shapes") {
  LinearForm p1{Rat(1), {Rat(1)}};
  LinearForm p2{Rat(-1), {Rat(1)}};
  QMat b(2, 1);
  b.at(0, 0) = Rat(1);
  b.at(1, 0) = Rat(-2);
  MasterSystem ms = make_master({p1, p2}, b);
  CHECK(ms.n == 1);
  CHECK(ms.infinity_weight(0) == Rat(1));
  // psi = log|1+y| - 2 log|y-1|; zero when |1+y| = (y-1)^2
  double v = eval_psi(ms, {3.0})[0];
  CHECK(v == doctest::Approx(std::log(4.0) - 2 * std::log(2.0)));

  QMat bad(1, 1);
  CHECK_THROWS_AS(make_master({p1}, bad), Error);
}

TEST_CASE("real weights evaluate but refuse polynomial clearing") {
  LinearForm p1{Rat(1), {Rat(1)}};
  LinearForm p2{Rat(-1), {Rat(1)}};
  MasterSystem ms = make_master_real({p1, p2}, {{1.5}, {-0.75}});
  CHECK_FALSE(ms.rational_weights);
  double v = eval_psi(ms, {2.0})[0];
  CHECK(v == doctest::Approx(1.5 * std::log(3.0) - 0.75 * std::log(1.0)));
  CHECK_THROWS_AS(build_gamma_chain(ms), Error);
  CHECK_THROWS_AS(ms.infinity_weight(0), Error);
}
