#include "fewnomial/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <thread>
#include <vector>

#include <json.hpp>

#include "fewnomial/arrangement.hpp"
#include "fewnomial/bounds.hpp"
#include "fewnomial/error.hpp"
#include "fewnomial/gale.hpp"
#include "fewnomial/instance.hpp"
#include "fewnomial/master.hpp"
#include "fewnomial/oracle.hpp"
#include "fewnomial/solver.hpp"

namespace fewnomial {
namespace {

using ordered_json = nlohmann::ordered_json;

struct ShapeSpec {
  int n, k, exp_range;
};

// Exponent windows sized so odd-index rejection sampling stays cheap while the
// coefficient space is still rich enough to hit the sharp counts.
constexpr ShapeSpec kShapes[] = {{1, 1, 9}, {2, 1, 4}, {1, 2, 7}, {2, 2, 2}};
constexpr int kShapeCount = 4;
constexpr int kRedraws = 20;

// splitmix64 finalizer; derived streams never reuse the raw campaign seed.
std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 0x632be59bd9b4e019ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

enum class Outcome { match, mismatch, unverified, skipped };

struct TaskResult {
  Outcome outcome = Outcome::skipped;
  int count = 0;
  bool saturated = false;
  bool ledger_bad = false;
  bool volume_bad = false;
};

// One campaign instance: draw until the oracle certifies a nondegenerate
// truth, solve, and compare. Counts are compared against the system the
// solver actually answered for, which differs from the draw when a
// genericity repair perturbed the coefficients.
TaskResult run_one(const ShapeSpec& sh, std::uint64_t task_seed) {
  TaskResult res;
  RandomSpec spec;
  spec.n = sh.n;
  spec.k = sh.k;
  spec.exp_range = sh.exp_range;
  for (int round = 0; round < kRedraws; ++round) {
    Instance inst;
    try {
      inst = random_instance(spec, mix(task_seed, static_cast<std::uint64_t>(round)));
    } catch (const Error&) {
      return res;  // no admissible support in this window
    }
    oracle::OracleReport truth = oracle::oracle_count(inst.system);
    if (truth.degenerate_suspects > 0) continue;  // outside the nondegeneracy hypothesis

    SparseSolveReport rep;
    try {
      rep = solve_sparse(inst.system);
    } catch (const Error&) {
      res.outcome = Outcome::unverified;  // surrendered on an admissible draw
      return res;
    }
    if (rep.perturbed) {
      truth = oracle::oracle_count(rep.solved);
      if (truth.degenerate_suspects > 0) {
        res.outcome = Outcome::unverified;  // repair landed near a degeneracy
        return res;
      }
    }
    if (!rep.verified) {
      res.outcome = Outcome::unverified;
      return res;
    }

    res.count = static_cast<int>(rep.solutions.size());
    bool equal = res.count == truth.count &&
                 static_cast<int>(rep.positive.size()) == truth.positive_count;
    res.outcome = equal ? Outcome::match : Outcome::mismatch;
    res.saturated = sh.k == 1 && res.count == 2 * sh.n + 1;

    // Runtime ledger: the census must sit inside its own itemized budget, and
    // the certified truth inside the volume and odd-index caps.
    const SolutionSet& m = rep.master;
    KrLedger led = kr_ledger(sh.n, sh.k);
    bool bad = static_cast<int>(m.solutions.size()) > m.observed_budget();
    bad = bad || Int(m.gamma.count) > led.gamma_term;
    for (size_t j = 0; j < m.flat_observed.size(); ++j)
      bad = bad || Rat(m.flat_observed[j]) > flat_face_bound(sh.n, sh.k, static_cast<int>(j) + 1);
    res.ledger_bad = bad || !truth.within_parity_cap;
    res.volume_bad = !truth.within_volume_cap;
    return res;
  }
  return res;  // every redraw met a degenerate truth
}

// Degree certificate: the cleared chain of a random admissible system stays
// inside deg F_i <= 2^i * n, checked on the polynomials themselves.
void degree_suite(std::uint64_t seed, CampaignSummary& s) {
  for (int r = 0; r < 100; ++r) {
    RandomSpec spec;
    spec.n = 1 + (r % 2);
    spec.k = 2;
    spec.exp_range = 3;
    for (int round = 0; round < 10; ++round) {
      Instance inst;
      try {
        inst = random_instance(spec, mix(seed, 0xD0000ull + 31ull * static_cast<std::uint64_t>(r) +
                                                   static_cast<std::uint64_t>(round)));
      } catch (const Error&) {
        continue;
      }
      ++s.degree_checks;
      try {
        GammaChain chain = build_gamma_chain(make_master(build_gale_dual(inst.system)));
        bool bad = chain.f.size() != 2;
        for (size_t i = 0; i < chain.f.size(); ++i)
          bad = bad || chain.f[i].total_degree() > (1 << i) * spec.n;
        if (bad) ++s.degree_violations;
      } catch (const Error&) {
        ++s.degree_violations;  // an unbuildable chain fails the certificate
      }
      break;
    }
  }
}

// Arrangement censuses on generic duals with m = 3..8 lines: chamber count
// 1 + m + m(m-1)/2, projective face counts C(m+1, j), and 2^j chambers
// incident to every codimension-j face.
void face_suite(std::uint64_t seed, CampaignSummary& s) {
  for (int m = 3; m <= 8; ++m) {
    RandomSpec spec;
    spec.n = m - 2;
    spec.k = 2;
    spec.exp_range = 3;
    for (int round = 0; round < 30; ++round) {
      Instance inst;
      try {
        inst = random_instance(spec, mix(seed, 0xF0000ull + 101ull * static_cast<std::uint64_t>(m) +
                                                   static_cast<std::uint64_t>(round)));
      } catch (const Error&) {
        continue;
      }
      Arrangement arr = make_arrangement(make_master(build_gale_dual(inst.system)));
      if (!genericity_check(arr).empty()) continue;

      ++s.face_checks;
      bool bad = false;
      auto ch = chambers(arr);
      bad = bad || static_cast<int>(ch.size()) != 1 + m + m * (m - 1) / 2;
      for (int j = 1; j <= 2; ++j) {
        auto faces = enumerate_faces(arr, j);
        int expected = j == 1 ? m + 1 : (m + 1) * m / 2;
        bad = bad || static_cast<int>(faces.size()) != expected;
        bad = bad || Int(static_cast<long>(faces.size())) != face_count(spec.n, 2, j);
        for (const auto& face : faces)
          bad = bad || static_cast<int>(incident_chambers(arr, ch, face).size()) != (1 << j);
      }
      if (bad) ++s.face_violations;
      break;
    }
  }
}

}  // namespace

bool CampaignSummary::ok() const {
  return instances > 0 && mismatches == 0 && ledger_violations == 0 &&
         kouchnirenko_violations == 0 && degree_violations == 0 && face_violations == 0 &&
         20 * unverified < instances;
}

CampaignSummary run_campaign(bool full, std::uint64_t seed, int threads, int quota) {
  CampaignSummary s;
  s.full = full;
  s.seed = seed;
  if (quota <= 0) quota = full ? 100 : 50;

  struct Task {
    int shape;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (int si = 0; si < kShapeCount; ++si)
    for (int i = 0; i < quota; ++i)
      tasks.push_back({si, mix(seed, static_cast<std::uint64_t>(si) * 1000003ull +
                                         static_cast<std::uint64_t>(i))});

  // Each task is a pure function of its derived seed and results merge in
  // task order, so the summary is identical for every thread count.
  std::vector<TaskResult> results(tasks.size());
  int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  nthreads = std::clamp(nthreads, 1, 8);
  nthreads = std::min(nthreads, static_cast<int>(tasks.size()));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      results[i] = run_one(kShapes[tasks[i].shape], tasks[i].seed);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  s.rows.resize(kShapeCount);
  for (int si = 0; si < kShapeCount; ++si) {
    s.rows[static_cast<size_t>(si)].n = kShapes[si].n;
    s.rows[static_cast<size_t>(si)].k = kShapes[si].k;
  }
  for (size_t i = 0; i < tasks.size(); ++i) {
    CampaignRow& row = s.rows[static_cast<size_t>(tasks[i].shape)];
    const TaskResult& r = results[i];
    ++row.instances;
    switch (r.outcome) {
      case Outcome::match: ++row.matches; break;
      case Outcome::mismatch: ++row.mismatches; break;
      case Outcome::unverified: ++row.unverified; break;
      case Outcome::skipped: ++s.skipped; break;
    }
    if (r.outcome == Outcome::match || r.outcome == Outcome::mismatch) {
      row.max_count = std::max(row.max_count, r.count);
      if (r.saturated) ++row.saturations;
      if (r.ledger_bad) ++s.ledger_violations;
      if (r.volume_bad) ++s.kouchnirenko_violations;
    }
  }
  for (const auto& row : s.rows) {
    s.instances += row.instances;
    s.matches += row.matches;
    s.mismatches += row.mismatches;
    s.unverified += row.unverified;
  }

  if (full) {
    degree_suite(seed, s);
    face_suite(seed, s);
  }
  return s;
}

std::string campaign_table(const CampaignSummary& s) {
  char line[160];
  std::string out;
  std::snprintf(line, sizeof line, "verification campaign  seed %llu  mode %s\n",
                static_cast<unsigned long long>(s.seed), s.full ? "full" : "small");
  out += line;
  out += " n k   inst  match   mism  unver    max  sharp\n";
  for (const auto& r : s.rows) {
    std::snprintf(line, sizeof line, " %d %d %6d %6d %6d %6d %6d %6d\n", r.n, r.k, r.instances,
                  r.matches, r.mismatches, r.unverified, r.max_count, r.saturations);
    out += line;
  }
  std::snprintf(line, sizeof line,
                "totals %d instances: %d match, %d mismatch, %d unverified, %d skipped\n",
                s.instances, s.matches, s.mismatches, s.unverified, s.skipped);
  out += line;
  std::snprintf(line, sizeof line, "ledger violations %d, volume-cap violations %d\n",
                s.ledger_violations, s.kouchnirenko_violations);
  out += line;
  if (s.full) {
    std::snprintf(line, sizeof line, "degree checks %d (%d bad), face checks %d (%d bad)\n",
                  s.degree_checks, s.degree_violations, s.face_checks, s.face_violations);
    out += line;
  }
  out += s.ok() ? "status OK\n" : "status FAIL\n";
  return out;
}

std::string campaign_json(const CampaignSummary& s) {
  ordered_json j;
  j["mode"] = s.full ? "full" : "small";
  j["seed"] = s.seed;
  j["rows"] = ordered_json::array();
  for (const auto& r : s.rows) {
    ordered_json row;
    row["n"] = r.n;
    row["k"] = r.k;
    row["instances"] = r.instances;
    row["matches"] = r.matches;
    row["mismatches"] = r.mismatches;
    row["unverified"] = r.unverified;
    row["max_count"] = r.max_count;
    row["saturations"] = r.saturations;
    j["rows"].push_back(row);
  }
  ordered_json totals;
  totals["instances"] = s.instances;
  totals["matches"] = s.matches;
  totals["mismatches"] = s.mismatches;
  totals["unverified"] = s.unverified;
  totals["skipped"] = s.skipped;
  j["totals"] = totals;
  ordered_json checks;
  checks["ledger_violations"] = s.ledger_violations;
  checks["kouchnirenko_violations"] = s.kouchnirenko_violations;
  if (s.full) {
    checks["degree"] = {{"checks", s.degree_checks}, {"violations", s.degree_violations}};
    checks["faces"] = {{"checks", s.face_checks}, {"violations", s.face_violations}};
  }
  j["checks"] = checks;
  j["ok"] = s.ok();
  return j.dump(2) + "\n";
}

}  // namespace fewnomial
