#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fewnomial {

/// One (n, k) block of a verification campaign.
struct CampaignRow {
  int n = 0, k = 0;
  int instances = 0;
  int matches = 0;      // verified and equal to the oracle, count and positives
  int mismatches = 0;   // verified yet unequal: must stay zero
  int unverified = 0;   // solver could not certify (includes surrenders)
  int max_count = 0;    // largest verified solution count observed
  int saturations = 0;  // verified counts attaining the sharp k = 1 cap 2n+1
};

/// Whole-campaign tallies. A campaign is sound when nothing mismatches, no
/// runtime ledger or volume-cap inequality fails, and the unverified rate
/// stays under five percent.
struct CampaignSummary {
  bool full = false;
  std::uint64_t seed = 0;
  std::vector<CampaignRow> rows;
  int instances = 0, matches = 0, mismatches = 0, unverified = 0, skipped = 0;
  int ledger_violations = 0;        // budget/flat/gamma inequalities on verified runs
  int kouchnirenko_violations = 0;  // oracle count above n! vol(conv W)
  int degree_checks = 0, degree_violations = 0;  // full only: deg F_i <= 2^i n
  int face_checks = 0, face_violations = 0;      // full only: chamber/face censuses

  bool ok() const;
};

/// Seeded, reproducible sweep comparing the continuation count against the
/// oracle on random odd-index instances; `full` doubles the quotas and adds
/// the degree-certificate and arrangement-combinatorics property suites.
/// Instances run in parallel (threads <= 0 picks a default); results are
/// merged in instance order, so the summary is independent of scheduling.
/// quota > 0 overrides the per-shape instance count of the chosen preset.
CampaignSummary run_campaign(bool full, std::uint64_t seed, int threads = 0, int quota = 0);

std::string campaign_table(const CampaignSummary& s);
std::string campaign_json(const CampaignSummary& s);

}  // namespace fewnomial
