#include "fewnomial/instance.hpp"

#include <json.hpp>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "fewnomial/error.hpp"
#include "fewnomial/lattice.hpp"

namespace fewnomial {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json rat_json(const Rat& q) { return rat_to_string(q); }

Rat rat_from_json(const ordered_json& v) {
  if (v.is_string()) return rat_from_string(v.get<std::string>());
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<std::int64_t>()));
  fail(Errc::bad_input, "coefficient entries must be \"p/q\" strings");
}

}  // namespace

std::string write_instance(const Instance& inst) {
  const SparseSystem& s = inst.system;
  ordered_json j;
  j["n"] = s.n();
  j["k"] = s.k();
  ordered_json exps = ordered_json::array();
  for (const auto& v : s.support.vectors) {
    ordered_json row = ordered_json::array();
    for (const Int& e : v) row.push_back(e.get_si());
    exps.push_back(row);
  }
  j["exponents"] = exps;
  ordered_json coeffs = ordered_json::array();
  for (int i = 0; i < s.n(); ++i) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < s.support.count(); ++c) row.push_back(rat_json(s.coeffs.at(i, c)));
    coeffs.push_back(row);
  }
  j["coefficients"] = coeffs;
  if (inst.seed) j["seed"] = *inst.seed;
  if (!inst.comment.empty()) j["comment"] = inst.comment;
  return j.dump(2) + "\n";
}

Instance parse_instance(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::io_error, std::string("instance is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("exponents") ||
      !j.contains("coefficients"))
    fail(Errc::bad_input, "instance needs n, exponents, and coefficients");
  int n = j["n"].get<int>();
  if (n < 1) fail(Errc::bad_input, "n must be positive");
  std::vector<std::vector<Int>> vectors;
  for (const auto& row : j["exponents"]) {
    std::vector<Int> v;
    for (const auto& e : row) v.emplace_back(static_cast<long>(e.get<std::int64_t>()));
    if (static_cast<int>(v.size()) != n) fail(Errc::bad_input, "exponent vector length != n");
    vectors.push_back(std::move(v));
  }
  auto support = lattice::normalize_support(n, std::move(vectors));
  if (j.contains("k") && j["k"].get<int>() != support.k())
    fail(Errc::bad_input, "declared k disagrees with the exponent count");
  const auto& coeffs = j["coefficients"];
  if (static_cast<int>(coeffs.size()) != n) fail(Errc::bad_input, "need one coefficient row per equation");
  QMat c(n, support.count());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(coeffs[static_cast<size_t>(i)].size()) != support.count())
      fail(Errc::bad_input, "coefficient row length != monomial count");
    for (int q = 0; q < support.count(); ++q)
      c.at(i, q) = rat_from_json(coeffs[static_cast<size_t>(i)][static_cast<size_t>(q)]);
  }
  Instance inst;
  inst.system = make_sparse_system(std::move(support), std::move(c));
  if (j.contains("seed")) inst.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("comment")) inst.comment = j["comment"].get<std::string>();
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::io_error, "cannot write " + path);
  out << write_instance(inst);
  if (!out) fail(Errc::io_error, "short write to " + path);
}

Instance random_instance(const RandomSpec& spec, std::uint64_t seed) {
  if (spec.n < 1 || spec.k < 1 || spec.exp_range < 1 || spec.coef_range < 1)
    fail(Errc::bad_input, "random spec ranges must be positive");
  std::mt19937_64 rng(seed);
  // Hand-rolled draws keep files byte-identical across standard libraries.
  auto draw = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  int count = spec.n + spec.k + 1;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::set<std::vector<long>> seen;
    std::vector<std::vector<Int>> vectors;
    vectors.emplace_back(static_cast<size_t>(spec.n), Int(0));
    seen.insert(std::vector<long>(static_cast<size_t>(spec.n), 0));
    bool distinct = true;
    for (int i = 1; i < count && distinct; ++i) {
      std::vector<long> v(static_cast<size_t>(spec.n));
      for (long& e : v) e = draw(0, spec.exp_range);
      distinct = seen.insert(v).second;
      std::vector<Int> vi;
      for (long e : v) vi.emplace_back(e);
      vectors.push_back(std::move(vi));
    }
    if (!distinct) continue;
    auto support = lattice::normalize_support(spec.n, std::move(vectors));
    auto parity = lattice::span_index_parity(support);
    if (parity.kind == lattice::SpanKind::rank_deficient) continue;
    if (spec.require_odd && parity.kind != lattice::SpanKind::odd) continue;
    QMat c(spec.n, count);
    for (int i = 0; i < spec.n; ++i)
      for (int q = 0; q < count; ++q) {
        int v = 0;
        while (v == 0) v = draw(-spec.coef_range, spec.coef_range);
        c.at(i, q) = Rat(v);
      }
    Instance inst;
    inst.system = make_sparse_system(std::move(support), std::move(c));
    inst.seed = seed;
    return inst;
  }
  fail(Errc::sampling_exhausted, "no admissible support after 10000 draws");
}

namespace {

ordered_json bound_value_json(const BoundValue& v) {
  ordered_json j;
  j["lower"] = rat_json(v.lower);
  j["upper"] = rat_json(v.upper);
  j["approx"] = to_double(v.upper);
  j["strict_int"] = v.strict_int.get_str();
  return j;
}

}  // namespace

std::string bound_report_json(const BoundReport& r,
                              const std::optional<lattice::SpanIndex>& parity) {
  ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["solution_bound"] = bound_value_json(r.solution);
  j["positive_bound"] = bound_value_json(r.positive);
  j["khovanskii"] = r.khovanskii.get_str();
  if (r.kouchnirenko) j["kouchnirenko"] = r.kouchnirenko->get_str();
  ordered_json ledger;
  ledger["gamma_term"] = r.ledger.gamma_term.get_str();
  ordered_json flats = ordered_json::array();
  for (const Rat& f : r.ledger.flat_terms) flats.push_back(rat_json(f));
  ledger["flat_terms"] = flats;
  ledger["total"] = rat_json(r.ledger.total);
  ledger["series_bound"] = rat_json(r.ledger.series_bound);
  j["ledger"] = ledger;
  if (r.k == 1) {
    auto sharp = sharp_small_bounds(r.n);
    j["sharp"] = {{"nonzero", sharp.nonzero.get_str()}, {"positive", sharp.positive.get_str()}};
  }
  if (parity) {
    const char* kind = parity->kind == lattice::SpanKind::odd       ? "odd"
                       : parity->kind == lattice::SpanKind::even    ? "even"
                                                                    : "rank_deficient";
    j["parity"] = kind;
    if (parity->kind != lattice::SpanKind::rank_deficient) j["index"] = parity->index.get_str();
    j["applicable"] = parity->kind == lattice::SpanKind::odd;
  }
  return j.dump(2) + "\n";
}

std::string gale_dual_json(const GaleDual& g) {
  ordered_json j;
  j["n"] = g.n;
  j["k"] = g.k;
  j["free_slots"] = g.free_slots;
  ordered_json forms = ordered_json::array();
  for (const LinearForm& f : g.forms) {
    ordered_json fj;
    fj["c0"] = rat_json(f.c0);
    ordered_json lin = ordered_json::array();
    for (const Rat& l : f.lin) lin.push_back(rat_json(l));
    fj["lin"] = lin;
    forms.push_back(fj);
  }
  j["forms"] = forms;
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < g.weights.b.rows; ++i) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < g.weights.b.cols; ++c) row.push_back(g.weights.b.at(i, c).get_str());
    rows.push_back(row);
  }
  j["weights"] = rows;
  return j.dump(2) + "\n";
}

std::string solve_report_json(const SparseSolveReport& rep) {
  ordered_json j;
  j["verified"] = rep.verified;
  j["perturbed"] = rep.perturbed;
  j["count"] = rep.solutions.size();
  j["positive_count"] = rep.positive.size();
  ordered_json sols = ordered_json::array();
  for (const SparseSolution& s : rep.solutions) {
    ordered_json sj;
    sj["x"] = s.x;
    sj["residual"] = s.residual;
    sols.push_back(sj);
  }
  j["solutions"] = sols;
  const SolutionSet& m = rep.master;
  ordered_json mj;
  mj["gamma_count"] = m.gamma.count;
  mj["gamma_suspects"] = m.gamma.suspects;
  mj["flat_observed"] = m.flat_observed;
  mj["budget"] = m.observed_budget();
  ordered_json my = ordered_json::array();
  for (const MasterSolution& s : m.solutions) {
    ordered_json sj;
    sj["y"] = s.y;
    sj["residual"] = s.residual;
    sj["signs"] = s.signs;
    my.push_back(sj);
  }
  mj["solutions"] = my;
  mj["notes"] = m.notes;
  j["master"] = mj;
  return j.dump(2) + "\n";
}

std::string oracle_report_json(const oracle::OracleReport& rep) {
  ordered_json j;
  j["count"] = rep.count;
  j["positive_count"] = rep.positive_count;
  j["degenerate_suspects"] = rep.degenerate_suspects;
  ordered_json pts = ordered_json::array();
  for (const QVec& p : rep.approx) {
    ordered_json row = ordered_json::array();
    for (const Rat& c : p) row.push_back(rat_json(c));
    pts.push_back(row);
  }
  j["approx"] = pts;
  if (rep.volume_cap) j["kouchnirenko"] = rep.volume_cap->get_str();
  j["within_volume_cap"] = rep.within_volume_cap;
  if (rep.parity_cap) j["parity_cap"] = rep.parity_cap->get_str();
  j["within_parity_cap"] = rep.within_parity_cap;
  return j.dump(2) + "\n";
}

}  // namespace fewnomial
