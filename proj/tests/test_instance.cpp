#include <doctest.h>

#include "fewnomial/error.hpp"
#include "fewnomial/instance.hpp"
#include "fewnomial/lattice.hpp"
#include "fewnomial/oracle.hpp"

using namespace fewnomial;

namespace {

Instance trinomial() {
  auto support = lattice::normalize_support(1, {{Int(0)}, {Int(1)}, {Int(3)}});
  QMat c(1, 3);
  c.at(0, 0) = Rat(199, 100);
  c.at(0, 1) = Rat(-3);
  c.at(0, 2) = Rat(1);
  Instance inst;
  inst.system = make_sparse_system(std::move(support), std::move(c));
  inst.comment = "shifted trinomial";
  return inst;
}

}  // namespace

TEST_CASE("instances round-trip byte-identically") {
  Instance a = trinomial();
  std::string text = write_instance(a);
  Instance b = parse_instance(text);
  CHECK(write_instance(b) == text);
  CHECK(b.system.n() == 1);
  CHECK(b.system.k() == 1);
  CHECK(b.system.coeffs.at(0, 0) == Rat(199, 100));
  CHECK(b.comment == "shifted trinomial");
}

TEST_CASE("rational strings parse exactly") {
  std::string text = R"({
    "n": 1,
    "exponents": [[0], [2], [5]],
    "coefficients": [["-7/3", "1", "2/4"]]
  })";
  Instance inst = parse_instance(text);
  CHECK(inst.system.coeffs.at(0, 0) == Rat(-7, 3));
  CHECK(inst.system.coeffs.at(0, 2) == Rat(1, 2));  // canonicalized
  CHECK(!inst.seed.has_value());
}

TEST_CASE("malformed instances are rejected with reasons") {
  CHECK_THROWS_AS(parse_instance("not json"), Error);
  CHECK_THROWS_AS(parse_instance(R"({"n": 1, "exponents": [[0],[1],[2]]})"), Error);
  // row length mismatch
  CHECK_THROWS_AS(parse_instance(R"({
    "n": 1, "exponents": [[0],[1],[3]], "coefficients": [["1","2"]]
  })"),
                  Error);
  // declared k contradicts the support
  CHECK_THROWS_AS(parse_instance(R"({
    "n": 1, "k": 2, "exponents": [[0],[1],[3]], "coefficients": [["1","2","3"]]
  })"),
                  Error);
  // duplicate exponent vectors
  CHECK_THROWS_AS(parse_instance(R"({
    "n": 1, "exponents": [[0],[1],[1]], "coefficients": [["1","2","3"]]
  })"),
                  Error);
}

TEST_CASE("random instances are deterministic per seed") {
  RandomSpec spec;
  spec.n = 1;
  spec.k = 1;
  spec.exp_range = 20;
  Instance a = random_instance(spec, 7);
  Instance b = random_instance(spec, 7);
  CHECK(write_instance(a) == write_instance(b));
  CHECK(a.system.support.count() == 3);
  CHECK(a.seed == 7);
  Instance c = random_instance(spec, 8);
  CHECK(write_instance(c) != write_instance(a));
}

TEST_CASE("random supports respect the odd-index requirement") {
  RandomSpec spec;
  spec.n = 2;
  spec.k = 2;
  spec.exp_range = 4;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Instance inst = random_instance(spec, seed);
    CHECK(inst.system.support.count() == 5);
    auto parity = lattice::span_index_parity(inst.system.support);
    CHECK(parity.kind == lattice::SpanKind::odd);
    for (int i = 0; i < 2; ++i)
      for (int q = 0; q < 5; ++q) CHECK(inst.system.coeffs.at(i, q) != 0);
  }
}

TEST_CASE("impossible sampling constraints exhaust") {
  RandomSpec spec;
  spec.n = 1;
  spec.k = 2;        // needs four distinct vectors
  spec.exp_range = 1;  // but only {0} and {1} exist
  CHECK_THROWS_AS(random_instance(spec, 1), Error);
  try {
    random_instance(spec, 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::sampling_exhausted);
  }
}

TEST_CASE("report serializers are deterministic and complete") {
  BoundReport br = bound_report(2, 1);
  auto parity = lattice::span_index_parity(trinomial().system.support);
  std::string bj = bound_report_json(br, parity);
  CHECK(bj == bound_report_json(br, parity));
  CHECK(bj.find("\"solution_bound\"") != std::string::npos);
  CHECK(bj.find("\"strict_int\": \"28\"") != std::string::npos);
  CHECK(bj.find("\"parity\": \"odd\"") != std::string::npos);
  CHECK(bj.find("\"sharp\"") != std::string::npos);

  Instance inst = trinomial();
  SparseSolveReport rep = solve_sparse(inst.system);
  std::string sj = solve_report_json(rep);
  CHECK(sj == solve_report_json(solve_sparse(inst.system)));
  CHECK(sj.find("\"count\": 3") != std::string::npos);
  CHECK(sj.find("\"verified\": true") != std::string::npos);

  auto orep = oracle::oracle_count(inst.system);
  std::string oj = oracle_report_json(orep);
  CHECK(oj.find("\"count\": 3") != std::string::npos);
  CHECK(oj.find("\"within_volume_cap\": true") != std::string::npos);

  std::string gj = gale_dual_json(build_gale_dual(inst.system));
  CHECK(gj.find("\"weights\"") != std::string::npos);
}

TEST_CASE("instance files save and load through the filesystem") {
  Instance a = trinomial();
  std::string path = "instance_roundtrip_test.json";
  save_instance(a, path);
  Instance b = load_instance(path);
  CHECK(write_instance(b) == write_instance(a));
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_instance("does_not_exist.json"), Error);
}
