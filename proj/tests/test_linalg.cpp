#include <doctest.h>

#include "fewnomial/error.hpp"
#include "fewnomial/linalg.hpp"
#include "fewnomial/numeric.hpp"

using namespace fewnomial;

namespace {

ZMat zmat(int r, int c, std::initializer_list<long> vals) {
  ZMat m(r, c);
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Int(*it++);
  return m;
}

}  // namespace

TEST_CASE("rational parsing round trips") {
  CHECK(rat_from_string("3/4") == Rat(3, 4));
  CHECK(rat_from_string("-6/8") == Rat(-3, 4));
  CHECK(rat_from_string("12") == Rat(12));
  CHECK(rat_to_string(Rat(-3, 4)) == "-3/4");
  CHECK(rat_to_string(Rat(5)) == "5");
  CHECK_THROWS_AS(rat_from_string("1.5"), Error);
  CHECK_THROWS_AS(rat_from_string("1/0"), Error);
  CHECK_THROWS_AS(rat_from_string(""), Error);
}

TEST_CASE("rational powers handle negative exponents") {
  CHECK(rat_pow(Rat(2, 3), 3) == Rat(8, 27));
  CHECK(rat_pow(Rat(2, 3), -2) == Rat(9, 4));
  CHECK(rat_pow(Rat(-2), 3) == Rat(-8));
  CHECK(rat_pow(Rat(7), 0) == Rat(1));
  CHECK_THROWS_AS(rat_pow(Rat(0), -1), Error);
}

TEST_CASE("rank and determinant") {
  QMat m(3, 3);
  long vals[9] = {2, 1, 0, 1, 3, 1, 0, 1, 2};
  for (int i = 0; i < 9; ++i) m.a[i] = Rat(vals[i]);
  CHECK(rank(m) == 3);
  CHECK(det(m) == Rat(8));

  QMat s(2, 3);
  s.at(0, 0) = 1;
  s.at(0, 1) = 2;
  s.at(0, 2) = 3;
  s.at(1, 0) = 2;
  s.at(1, 1) = 4;
  s.at(1, 2) = 6;
  CHECK(rank(s) == 1);
}

TEST_CASE("solve and inverse agree") {
  QMat m(2, 2);
  m.at(0, 0) = Rat(1, 2);
  m.at(0, 1) = Rat(1, 3);
  m.at(1, 0) = Rat(2);
  m.at(1, 1) = Rat(-1);
  QVec rhs{Rat(1), Rat(4)};
  auto x = solve_square(m, rhs);
  REQUIRE(x.has_value());
  CHECK(mul(m, *x) == rhs);
  QMat inv = inverse(m);
  CHECK(mul(inv, rhs) == *x);

  QMat sing(2, 2);
  sing.at(0, 0) = 1;
  sing.at(0, 1) = 2;
  sing.at(1, 0) = 2;
  sing.at(1, 1) = 4;
  CHECK_FALSE(solve_square(sing, rhs).has_value());
  CHECK_THROWS_AS(inverse(sing), Error);
}

TEST_CASE("rational kernel") {
  QMat m(1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  auto basis = kernel(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] * 1 + basis[0][1] * 2 == 0);
}

TEST_CASE("Bareiss matches rational determinant") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int n = static_cast<int>(rng.range(1, 5));
    ZMat m(n, n);
    for (auto& v : m.a) v = Int(rng.range(-9, 9));
    CHECK(det_bareiss(m) == det(to_rational(m)).get_num());
  }
}

TEST_CASE("Smith form invariants") {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int r = static_cast<int>(rng.range(1, 4));
    int c = static_cast<int>(rng.range(1, 5));
    ZMat m(r, c);
    for (auto& v : m.a) v = Int(rng.range(-6, 6));
    SmithForm s = smith_normal_form(m);
    CHECK(mul(mul(s.u, m), s.v).a == s.d.a);
    Int du = det_bareiss(s.u);
    Int dv = det_bareiss(s.v);
    CHECK(abs(du) == 1);
    CHECK(abs(dv) == 1);
    for (size_t i = 0; i + 1 < s.divisors.size(); ++i) {
      CHECK(s.divisors[i] > 0);
      CHECK(s.divisors[i + 1] % s.divisors[i] == 0);
    }
    CHECK(s.rank == rank(to_rational(m)));
  }
}

TEST_CASE("integer kernel spans the relations") {
  ZMat m = zmat(1, 2, {1, 2});
  ZMat k = integer_kernel(m);
  REQUIRE(k.cols == 1);
  CHECK(k.at(0, 0) == 2);
  CHECK(k.at(1, 0) == -1);

  ZMat m2 = zmat(2, 3, {1, 0, 1, 0, 1, 1});
  ZMat k2 = integer_kernel(m2);
  REQUIRE(k2.cols == 1);
  CHECK(k2.at(0, 0) == 1);
  CHECK(k2.at(1, 0) == 1);
  CHECK(k2.at(2, 0) == -1);

  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int r = static_cast<int>(rng.range(1, 3));
    int c = static_cast<int>(rng.range(r + 1, 5));
    ZMat a(r, c);
    for (auto& v : a.a) v = Int(rng.range(-5, 5));
    ZMat ker = integer_kernel(a);
    ZMat prod = mul(a, ker);
    for (const auto& v : prod.a) CHECK(v == 0);
    CHECK(ker.cols == c - rank(to_rational(a)));
  }
}

TEST_CASE("GF(2) solving") {
  // x0 + x1 = 1, x1 = 1  ->  x = (0, 1)
  auto sol = solve_gf2({{1, 1}, {0, 1}}, {1, 1});
  REQUIRE(sol.consistent);
  CHECK(sol.x == std::vector<std::uint8_t>{0, 1});
  CHECK(sol.free_vars == 0);

  // x0 + x1 = 0, x0 + x1 = 1 is inconsistent
  CHECK_FALSE(solve_gf2({{1, 1}, {1, 1}}, {0, 1}).consistent);

  // Underdetermined: one free variable
  auto under = solve_gf2({{1, 1, 0}}, {1});
  REQUIRE(under.consistent);
  CHECK(under.free_vars == 2);
  CHECK(static_cast<int>(under.x[0] ^ under.x[1]) == 1);
}
