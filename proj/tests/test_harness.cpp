#include <doctest.h>

#include <algorithm>

#include "specbound/error.hpp"
#include "specbound/harness.hpp"

using namespace specbound;

namespace {

std::vector<PredicateId> all_ids() {
  std::vector<PredicateId> ids;
  for (const auto& p : all_predicates()) ids.push_back(p.id);
  return ids;
}

void check_tallies(const ScanReport& r) {
  std::uint64_t violated = 0;
  for (const auto& p : r.predicates) {
    REQUIRE(p.tally.total() == r.graphs_examined);
    violated += p.tally.violated;
  }
  for (const auto& e : r.exploratory) REQUIRE(e.stats.evaluated + e.stats.vacuous == r.graphs_examined);
  REQUIRE(r.violations.size() == violated);
  REQUIRE(std::is_sorted(r.violations.begin(), r.violations.end()));
}

}  // namespace

TEST_CASE("exhaustive scan examples") {
  const auto r4 = scan_exhaustive(4, all_ids());
  CHECK(r4.graphs_examined == 64);
  CHECK(r4.violations.empty());
  CHECK(r4.predicates.size() == 15);
  REQUIRE(r4.exploration("conj2_r3") != nullptr);
  check_tallies(r4);

  const auto r3 = scan_exhaustive(3, {PredicateId::Th2});
  CHECK(r3.graphs_examined == 8);
  REQUIRE(r3.tally("th2") != nullptr);
  CHECK(r3.tally("th2")->equality >= 1);
  check_tallies(r3);

  const auto r1 = scan_exhaustive(1, all_ids());
  CHECK(r1.graphs_examined == 1);
  for (const auto& p : r1.predicates) CHECK(p.tally.violated == 0);

  try {
    scan_exhaustive(8, {PredicateId::Th2});
    FAIL("expected OrderTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderTooLarge);
  }
}

TEST_CASE("exhaustive n = 6 with the tightness sanity bound") {
  const auto r = scan_exhaustive(6, all_ids(), ScanOptions{{}, 4, false});
  CHECK(r.graphs_examined == 32768);
  CHECK(r.violations.empty());
  check_tallies(r);
  REQUIRE(r.tally("mt")->min_slack.has_value());
  CHECK(*r.tally("mt")->min_slack > 0);
  CHECK(r.tally("mt")->equality == 0);
}

TEST_CASE("reports do not depend on the worker count") {
  const auto ids = all_ids();
  const auto a = to_json(scan_exhaustive(5, ids, ScanOptions{{}, 1, false})).dump();
  const auto b = to_json(scan_exhaustive(5, ids, ScanOptions{{}, 3, false})).dump();
  const auto c = to_json(scan_exhaustive(5, ids, ScanOptions{{}, 8, false})).dump();
  CHECK(a == b);
  CHECK(a == c);

  const auto ra = to_json(scan_random(14, 5000, 0.4, 9, ids, ScanOptions{{}, 1, false})).dump();
  const auto rb = to_json(scan_random(14, 5000, 0.4, 9, ids, ScanOptions{{}, 5, false})).dump();
  CHECK(ra == rb);
}

TEST_CASE("random scan examples") {
  const auto ids = all_ids();
  const auto r = scan_random(10, 10000, 0.5, 42, ids, ScanOptions{{}, 4, false});
  CHECK(r.graphs_examined == 10000);
  CHECK(r.violations.empty());
  check_tallies(r);

  const auto again = scan_random(10, 10000, 0.5, 42, ids, ScanOptions{{}, 2, false});
  CHECK(to_json(r).dump() == to_json(again).dump());
  CHECK(to_json(r).dump() != to_json(scan_random(10, 10000, 0.5, 43, ids)).dump());

  const auto k10 = scan_random(10, 50, 1.0, 7, ids);
  for (const auto& p : k10.predicates) {
    const auto& t = p.tally;
    CHECK((t.holds == 50 || t.equality == 50 || t.vacuous == 50));
  }

  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Overflow;
  };
  CHECK(code([&] { scan_random(10, 0, 0.5, 42, ids); }) == ErrorCode::InvalidParams);
  CHECK(code([&] { scan_random(41, 10, 0.5, 42, ids); }) == ErrorCode::OrderTooLarge);
  CHECK(sample_seed(42, 0) != sample_seed(42, 1));
  CHECK(sample_seed(42, 5) == sample_seed(42, 5));
}

TEST_CASE("family scans") {
  std::vector<FamilySpec> blowups;
  for (PatternId id : kAllPatterns) {
    const Graph base = pattern_graph(id);
    const int paths = base.order() - 1;
    for (int mask = 0; mask < (1 << 3); ++mask) {
      std::vector<int> sizes;
      for (int i = 0; i < paths; ++i) sizes.push_back(1 + ((mask >> (i % 3)) & 1));
      sizes.push_back(1 + ((mask >> 2) & 1));
      blowups.push_back(BlowupSpec{base, sizes});
    }
  }
  const auto r = scan_families(blowups, {PredicateId::Th2});
  CHECK(r.graphs_examined == blowups.size());
  CHECK(r.tally("th2")->equality == blowups.size());

  std::vector<FamilySpec> kab;
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) kab.push_back(GeneratorSpec{family::CompleteBipartite{a, b}});
  const auto rk = scan_families(kab, {PredicateId::Mt});
  CHECK(rk.tally("mt")->holds == 36);
  CHECK_FALSE(rk.tally("mt")->min_slack.has_value());

  std::vector<FamilySpec> free4;
  for (std::uint64_t s = 0; s < 200; ++s) free4.push_back(GeneratorSpec{family::Gnp{9, 0.45, s}});
  const auto rc = scan_families(free4, {PredicateId::Conjecture2});
  const auto* ex = rc.exploration("conj2_r3");
  REQUIRE(ex != nullptr);
  CHECK(ex->evaluated >= 1);
  CHECK(*ex->min_slack > -1e-8);
  CHECK(ex->mean_slack().has_value());
  CHECK(rc.violations.empty());

  CHECK_THROWS_AS(scan_families({BlowupSpec{pattern_graph(PatternId::P4K1), {1, 2}}}, {PredicateId::Th2}),
                  Error);
}

TEST_CASE("report serialization") {
  const auto r = scan_exhaustive(3, all_ids());
  const auto j = to_json(r);
  CHECK(j.contains("scope"));
  CHECK(j["graphs_examined"] == 8);
  CHECK_FALSE(j.contains("wall_time_seconds"));
  CHECK(to_json(r, true).contains("wall_time_seconds"));
  CHECK(nlohmann::json::parse(j.dump()) == j);
  const std::string csv = to_csv(r);
  CHECK(csv.substr(0, csv.find('\n')).find("graph6") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1);
  CHECK_FALSE(to_text(r).empty());
}

TEST_CASE("vecl sampling") {
  const auto r = vecl_sample(20000, 1);
  CHECK(r.samples == 20000);
  CHECK(r.violated == 0);
  CHECK(r.holds + r.equality == r.samples);
  CHECK(to_json(r) == to_json(vecl_sample(20000, 1)));
}
