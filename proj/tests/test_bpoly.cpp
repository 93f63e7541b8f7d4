#include <doctest.h>

#include "fewnomial/bpoly.hpp"
#include "fewnomial/error.hpp"

using namespace fewnomial;

namespace {

Poly2Q make(std::initializer_list<std::tuple<int, int, long>> terms) {
  Poly2Q p;
  for (const auto& [i, j, c] : terms) p.add_term(i, j, Rat(c));
  return p;
}

}  // namespace

TEST_CASE("term bookkeeping and evaluation") {
  Poly2Q f = make({{0, 0, 1}, {1, 0, -3}, {0, 1, 2}, {2, 1, 5}});
  CHECK(f.deg_x() == 2);
  CHECK(f.deg_y() == 1);
  CHECK(f.total_degree() == 3);
  CHECK(f.eval(Rat(1), Rat(2)) == Rat(1 - 3 + 4 + 10));
  CHECK(f.eval_d(1.0, 2.0) == doctest::Approx(12.0));
  f.add_term(2, 1, Rat(-5));
  CHECK(f.deg_x() == 1);

  Poly2Q g = make({{1, 0, 1}, {0, 1, 1}});
  CHECK((g * g) == make({{2, 0, 1}, {1, 1, 2}, {0, 2, 1}}));
  CHECK(g.partial(0) == Poly2Q::constant(Rat(1)));
  CHECK(make({{3, 2, 7}}).partial(1) == make({{3, 1, 14}}));
}

TEST_CASE("univariate bridges") {
  Poly2Q f = make({{0, 0, 2}, {3, 0, -1}});
  UPoly u = as_univariate(f, 0);
  CHECK(u.degree() == 3);
  CHECK(u.eval(Rat(2)) == Rat(2 - 8));
  CHECK(from_univariate(u, 0) == f);
  CHECK_THROWS_AS(as_univariate(make({{1, 1, 1}}), 0), Error);
}

TEST_CASE("affine division is exact when it should be") {
  AffineForm p{Rat(1), Rat(2), Rat(-1)};  // 1 + 2x - y
  Poly2Q pf = make({{0, 0, 1}, {1, 0, 2}, {0, 1, -1}});
  Poly2Q q = make({{0, 0, 3}, {1, 1, 4}, {0, 2, -2}});
  auto [quot, exact] = divide_affine(pf * q, p);
  REQUIRE(exact);
  CHECK(quot == q);

  auto [quot2, exact2] = divide_affine(pf * q + Poly2Q::constant(Rat(1)), p);
  CHECK_FALSE(exact2);

  // Divisor with no y term divides along x.
  AffineForm px{Rat(-1), Rat(1), Rat(0)};
  Poly2Q pfx = make({{0, 0, -1}, {1, 0, 1}});
  auto [quot3, exact3] = divide_affine(pfx * q, px);
  REQUIRE(exact3);
  CHECK(quot3 == q);
}

TEST_CASE("interpolation reproduces polynomials") {
  std::vector<Rat> xs{Rat(0), Rat(1), Rat(-1), Rat(2)};
  // y = 2x^3 - x + 5
  std::vector<Rat> ys;
  for (const auto& x : xs) ys.push_back(2 * x * x * x - x + 5);
  UPoly p = interpolate(xs, ys);
  CHECK(p.degree() == 3);
  CHECK(p.eval(Rat(3)) == Rat(2 * 27 - 3 + 5));
}

TEST_CASE("resultant finds common roots") {
  // f = x^2 + y^2 - 5, g = x*y - 2: solutions (1,2),(2,1),(-1,-2),(-2,-1)
  Poly2Q f = make({{2, 0, 1}, {0, 2, 1}, {0, 0, -5}});
  Poly2Q g = make({{1, 1, 1}, {0, 0, -2}});
  UPoly rx = resultant(f, g, 1);  // eliminate y: roots are solution x-coordinates
  CHECK(rx.eval(Rat(1)) == 0);
  CHECK(rx.eval(Rat(2)) == 0);
  CHECK(rx.eval(Rat(-1)) == 0);
  CHECK(rx.eval(Rat(-2)) == 0);
  CHECK(rx.eval(Rat(3)) != 0);

  UPoly ry = resultant(f, g, 0);
  CHECK(ry.eval(Rat(2)) == 0);
  CHECK(ry.eval(Rat(-1)) == 0);
  CHECK(ry.eval(Rat(5)) != 0);
}

TEST_CASE("resultant of coprime curves is a nonzero constant in the good case") {
  // Parallel lines never meet: resultant has no roots.
  Poly2Q f = make({{1, 0, 1}, {0, 1, 1}});           // x + y
  Poly2Q g = make({{1, 0, 1}, {0, 1, 1}, {0, 0, 1}});  // x + y + 1
  UPoly r = resultant(f, g, 1);
  CHECK(sturm_chain(r).count_all() == 0);
}

TEST_CASE("resultant handles inputs missing the eliminated variable") {
  Poly2Q f = make({{2, 0, 1}, {0, 0, -4}});  // x^2 - 4, no y at all
  Poly2Q g = make({{1, 0, 1}, {0, 1, 1}});   // x + y
  UPoly r = resultant(f, g, 1);              // = f(x)^1 up to sign
  CHECK(r.eval(Rat(2)) == 0);
  CHECK(r.eval(Rat(-2)) == 0);
  CHECK(r.eval(Rat(0)) != 0);
}

TEST_CASE("line restriction") {
  Poly2Q f = make({{2, 0, 1}, {0, 2, 1}, {0, 0, -2}});  // x^2 + y^2 - 2
  UPoly u = restrict_to_line(f, {Rat(0), Rat(0)}, {Rat(1), Rat(1)});
  CHECK(u == UPoly(std::vector<Rat>{Rat(-2), Rat(0), Rat(2)}));
}

TEST_CASE("double mirror") {
  Poly2Q f = make({{1, 2, 3}, {0, 0, -1}});
  Poly2D d = to_double(f);
  CHECK(d.eval(2.0, 3.0) == doctest::Approx(3 * 2 * 9 - 1));
  CHECK(d.partial(0).eval(2.0, 3.0) == doctest::Approx(27.0));
  CHECK(d.partial(1).eval(2.0, 3.0) == doctest::Approx(36.0));
}
