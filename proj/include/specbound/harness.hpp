#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "specbound/generators.hpp"
#include "specbound/verify.hpp"

namespace specbound {

struct Tally {
  std::uint64_t holds = 0, equality = 0, vacuous = 0, violated = 0;
  // Tightest non-vacuous, non-violated outcome; ties go to the smaller graph6.
  std::optional<double> min_slack;
  std::string min_slack_graph6;

  std::uint64_t total() const { return holds + equality + vacuous + violated; }
};

// Non-asserting predicates: slack distribution only.
struct ExploratoryStats {
  std::uint64_t evaluated = 0;  // non-vacuous outcomes
  std::uint64_t vacuous = 0;
  std::uint64_t negative = 0;   // outcomes below -tolerance
  std::optional<double> min_slack;
  std::string min_slack_graph6;
  double slack_sum = 0;

  std::optional<double> mean_slack() const {
    return evaluated ? std::optional<double>(slack_sum / static_cast<double>(evaluated))
                     : std::nullopt;
  }
};

struct Violation {
  std::string graph6;
  std::string predicate;
  std::optional<double> slack;
  std::string detail;

  auto operator<=>(const Violation& o) const {
    if (auto c = graph6 <=> o.graph6; c != 0) return c;
    return predicate <=> o.predicate;
  }
  bool operator==(const Violation& o) const {
    return graph6 == o.graph6 && predicate == o.predicate;
  }
};

struct PredicateSummary {
  std::string name;
  Tally tally;
};

struct ExploratorySummary {
  std::string name;
  ExploratoryStats stats;
};

struct ScanReport {
  std::string scope;
  std::uint64_t graphs_examined = 0;
  std::vector<PredicateSummary> predicates;   // asserting predicates, in request order
  std::vector<ExploratorySummary> exploratory;
  std::vector<Violation> violations;          // sorted by graph6, then predicate
  double wall_time_seconds = 0;

  const Tally* tally(std::string_view name) const;
  const ExploratoryStats* exploration(std::string_view name) const;
};

struct ScanOptions {
  VerifyOptions verify;
  int jobs = 1;
  bool allow_order_8 = false;
};

// Every labeled graph of order n under the selected predicates.
ScanReport scan_exhaustive(int n, const std::vector<PredicateId>& predicates,
                           const ScanOptions& opt = {});

// Sample i is gnp(n, p, sample_seed(seed, i)), so results never depend on the
// worker schedule.
ScanReport scan_random(int n, std::uint64_t samples, double p, std::uint64_t seed,
                       const std::vector<PredicateId>& predicates, const ScanOptions& opt = {});

ScanReport scan_families(const std::vector<FamilySpec>& specs,
                         const std::vector<PredicateId>& predicates, const ScanOptions& opt = {});

ScanReport scan_graphs(std::string scope, const std::vector<Graph>& graphs,
                       const std::vector<PredicateId>& predicates, const ScanOptions& opt = {});

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

struct VeclSampleReport {
  std::uint64_t samples = 0;
  std::uint64_t rejected_draws = 0;  // infeasible draws discarded by rejection
  std::uint64_t holds = 0, equality = 0, violated = 0;
  std::optional<double> min_slack;
  std::vector<CheckOutcome> violations;
};

// Draws feasible (a, b, xs, p) by rejection: k uniform in 3..8, p in (2, 6],
// a in (0, 1], b in [0, a], each x_i uniform in [0, a], kept when
// sum x_i^2 <= a^2 + b^2. Uniforms come from mt19937_64 as (draw >> 11) * 2^-53.
VeclSampleReport vecl_sample(std::uint64_t samples, std::uint64_t seed);

nlohmann::json to_json(const VeclSampleReport& r);

nlohmann::json to_json(const ScanReport& r, bool include_timing = false);
std::string to_csv(const ScanReport& r);
std::string to_text(const ScanReport& r);

}  // namespace specbound
