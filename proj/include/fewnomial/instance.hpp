#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fewnomial/bounds.hpp"
#include "fewnomial/gale.hpp"
#include "fewnomial/oracle.hpp"
#include "fewnomial/solver.hpp"

namespace fewnomial {

/// A sparse system as it lives on disk: the support, exact "p/q" coefficient
/// strings, and optional provenance. Files written here are canonical: the
/// support is normalized and reparsing the written text reproduces it exactly.
struct Instance {
  SparseSystem system;
  std::optional<std::uint64_t> seed;  // generator seed when randomly drawn
  std::string comment;                // free-form provenance note
};

std::string write_instance(const Instance& inst);
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

/// Rejection sampling of instances: distinct exponents in [0, exp_range]^n
/// with the first at the origin, full rank, odd lattice index when required,
/// nonzero integer coefficients in [-coef_range, coef_range]. Deterministic
/// per seed; fails with sampling_exhausted after 10^4 draws.
struct RandomSpec {
  int n = 1;
  int k = 1;
  int exp_range = 6;
  int coef_range = 9;
  bool require_odd = true;
};

Instance random_instance(const RandomSpec& spec, std::uint64_t seed);

/// JSON renderings of the report types, deterministic field order, exact
/// rationals as "p/q" strings alongside double conveniences.
std::string bound_report_json(const BoundReport& r,
                              const std::optional<lattice::SpanIndex>& parity = {});
std::string gale_dual_json(const GaleDual& g);
std::string solve_report_json(const SparseSolveReport& rep);
std::string oracle_report_json(const oracle::OracleReport& rep);

}  // namespace fewnomial
