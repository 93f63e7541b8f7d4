#include <doctest.h>

#include "fewnomial/error.hpp"
#include "fewnomial/lattice.hpp"

using namespace fewnomial;
using namespace fewnomial::lattice;

namespace {

ExponentSupport support1(int n, std::initializer_list<std::initializer_list<long>> vecs) {
  std::vector<std::vector<Int>> vv;
  for (const auto& v : vecs) {
    std::vector<Int> row;
    for (long x : v) row.emplace_back(x);
    vv.push_back(std::move(row));
  }
  return normalize_support(n, std::move(vv));
}

}  // namespace

TEST_CASE("support normalization translates and validates") {
  auto w = support1(1, {{3}, {4}, {6}});
  CHECK(w.vectors[0][0] == 0);
  CHECK(w.vectors[1][0] == 1);
  CHECK(w.vectors[2][0] == 3);
  CHECK(w.k() == 1);
  CHECK(w.m() == 2);
  CHECK_THROWS_AS(support1(1, {{0}, {2}, {2}}), Error);
  CHECK_THROWS_AS(support1(2, {{0, 0}, {1, 0}}), Error);
}

TEST_CASE("span index parity") {
  auto odd1 = span_index_parity(support1(1, {{0}, {1}}));
  CHECK(odd1.kind == SpanKind::odd);
  CHECK(odd1.index == 1);

  auto even = span_index_parity(support1(1, {{0}, {2}, {4}}));
  CHECK(even.kind == SpanKind::even);
  CHECK(even.index == 2);

  auto odd2 = span_index_parity(support1(2, {{0, 0}, {2, 0}, {0, 3}, {1, 1}}));
  CHECK(odd2.kind == SpanKind::odd);
  CHECK(odd2.index == 1);

  // Exponents stuck on a line in Z^2
  auto def = span_index_parity(support1(2, {{0, 0}, {1, 1}, {2, 2}}));
  CHECK(def.kind == SpanKind::rank_deficient);
}

TEST_CASE("relation kernel frozen examples") {
  auto b1 = relation_kernel(support1(1, {{0}, {1}, {2}})).b;
  REQUIRE(b1.cols == 1);
  CHECK(b1.at(0, 0) == 2);
  CHECK(b1.at(1, 0) == -1);

  auto b2 = relation_kernel(support1(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})).b;
  REQUIRE(b2.cols == 1);
  CHECK(b2.at(0, 0) == 1);
  CHECK(b2.at(1, 0) == 1);
  CHECK(b2.at(2, 0) == -1);

  auto b3 = relation_kernel(support1(1, {{0}, {1}, {3}})).b;
  REQUIRE(b3.cols == 1);
  CHECK(b3.at(0, 0) == 3);
  CHECK(b3.at(1, 0) == -1);
}

TEST_CASE("relation kernel columns kill the exponents") {
  auto w = support1(2, {{0, 0}, {2, 1}, {1, 3}, {4, 0}, {0, 5}});
  CHECK(w.k() == 2);
  auto wb = relation_kernel(w);
  ZMat e = exponent_matrix(w);
  ZMat prod = mul(e, wb.b);
  for (const auto& v : prod.a) CHECK(v == 0);
  for (int j = 0; j < wb.b.cols; ++j) {
    Int g(0);
    for (int i = 0; i < wb.b.rows; ++i) g = gcd(g, wb.b.at(i, j));
    CHECK(abs(g) == 1);
    for (int i = 0; i < wb.b.rows; ++i) {
      if (wb.b.at(i, j) == 0) continue;
      CHECK(wb.b.at(i, j) > 0);
      break;
    }
  }
}

TEST_CASE("normalized volume in one variable") {
  CHECK(kouchnirenko_bound(support1(1, {{0}, {1}, {2}})) == 2);
  CHECK(kouchnirenko_bound(support1(1, {{0}, {1}, {7}})) == 7);
  CHECK(kouchnirenko_bound(support1(1, {{-3}, {0}, {4}})) == 7);
}

TEST_CASE("normalized volume in two variables") {
  CHECK(kouchnirenko_bound(support1(2, {{0, 0}, {1, 0}, {0, 1}})) == 1);
  CHECK(kouchnirenko_bound(support1(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})) == 2);
  CHECK(kouchnirenko_bound(support1(2, {{0, 0}, {2, 0}, {0, 3}, {1, 1}})) == 6);
  // Interior points do not change the hull
  CHECK(kouchnirenko_bound(support1(2, {{0, 0}, {3, 0}, {0, 3}, {1, 1}})) == 9);
}

TEST_CASE("normalized volume in three variables") {
  CHECK(kouchnirenko_bound(support1(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 1);
  // Unit cube: 3! * 1 = 6 from its eight vertices
  CHECK(kouchnirenko_bound(support1(3, {{0, 0, 0},
                                        {1, 0, 0},
                                        {0, 1, 0},
                                        {0, 0, 1},
                                        {1, 1, 0},
                                        {1, 0, 1},
                                        {0, 1, 1},
                                        {1, 1, 1}})) == 6);
  // Scaled simplex
  CHECK(kouchnirenko_bound(support1(3, {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}})) == 8);
  // Planar point set has no volume
  CHECK(kouchnirenko_bound(support1(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}})) == 0);
  CHECK_THROWS_AS(
      kouchnirenko_bound(support1(4, {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})),
      Error);
}

TEST_CASE("rank deficient relation space is rejected") {
  // Three collinear exponents in Z^2 leave a 2-dimensional relation space for k=1 shape
  auto w = support1(2, {{0, 0}, {1, 1}, {2, 2}});
  CHECK_THROWS_AS(relation_kernel(w), Error);
}
