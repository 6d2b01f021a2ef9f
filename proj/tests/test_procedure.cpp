#include <doctest.h>

#include <cmath>

#include "specbound/enumerate.hpp"
#include "specbound/error.hpp"
#include "specbound/generators.hpp"
#include "specbound/graph6.hpp"
#include "specbound/procedure.hpp"

using namespace specbound;

namespace {

Graph k4() { return generate({family::Complete{4}}); }
Graph k4_plus_k2() { return disjoint_union(k4(), generate({family::Path{2}})); }

const CheckOutcome& find(const std::vector<CheckOutcome>& v, std::string_view id) {
  for (const auto& o : v)
    if (o.predicate_id == id) return o;
  FAIL("missing outcome ", id);
  return v.front();
}

ErrorCode malformed_code(const ProcedureTrace& tr) {
  try {
    audit_trace(tr);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidParams;
}

}  // namespace

TEST_CASE("procedure examples") {
  const auto a = run_edge_deletion(k4());
  CHECK(a.k == 0);
  CHECK(a.stop_reason == StopReason::ThresholdMet);
  CHECK(a.steps.empty());
  CHECK(a.premise_lambda_sq_ge_m);

  const auto b = run_edge_deletion(k4_plus_k2());
  REQUIRE(b.k == 1);
  CHECK(b.stop_reason == StopReason::ThresholdMet);
  CHECK(b.steps[0].removed_edge == Edge{4, 5});
  CHECK(b.steps[0].product == 0);
  CHECK(std::abs(b.steps[0].threshold - 1 / (8 * std::sqrt(7.0))) < 1e-15);
  CHECK(std::abs(b.steps[0].rho_before - 3) < 1e-10);
  CHECK(std::abs(b.steps[0].rho_after - 3) < 1e-10);
  CHECK(b.final_graph == disjoint_union(k4(), Graph(2)));

  const auto c = run_edge_deletion(generate({family::CompleteBipartite{3, 3}}));
  CHECK(c.k == 0);
  CHECK(c.stop_reason == StopReason::ThresholdMet);

  const auto p2 = run_edge_deletion(generate({family::Path{2}}));
  CHECK(p2.k == 0);
  CHECK(p2.stop_reason == StopReason::ThresholdMet);

  try {
    run_edge_deletion(Graph(3));
    FAIL("expected EmptyGraph");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyGraph);
  }
}

TEST_CASE("audit examples") {
  const auto a = audit_trace(run_edge_deletion(k4()));
  const auto& elb = find(a, "elb");
  CHECK(elb.verdict == Verdict::Holds);
  CHECK(std::abs(*elb.lhs - 1 / (8 * std::sqrt(6.0))) < 1e-15);
  CHECK(std::abs(*elb.rhs - 0.25) < 1e-10);
  CHECK(find(a, "connected_remainder").verdict == Verdict::Vacuous);

  const auto b = audit_trace(run_edge_deletion(k4_plus_k2()));
  const auto& rin = find(b, "rin");
  CHECK(rin.verdict == Verdict::Holds);
  CHECK(std::abs(*rin.lhs - (3 - 1 / (4 * std::sqrt(7.0)))) < 1e-9);
  CHECK(std::abs(*rin.rhs - 3) < 1e-9);
  CHECK(find(b, "connected_remainder").verdict == Verdict::HoldsWithEquality);
  CHECK(find(b, "nonbipartite_remainder").verdict == Verdict::HoldsWithEquality);
}

TEST_CASE("half-edge cap stop") {
  bool saw_cap = false;
  for (int n = 2; n <= 6 && !saw_cap; ++n) {
    for (const Graph& g : enumerate_labeled(n)) {
      if (g.size() == 0) continue;
      const auto tr = run_edge_deletion(g);
      if (tr.stop_reason != StopReason::HalfEdgesRemoved) continue;
      saw_cap = true;
      CHECK(tr.k == (g.size() + 1) / 2);
      CHECK(find(audit_trace(tr), "half_cap").verdict == Verdict::HoldsWithEquality);
      break;
    }
  }
  CHECK(saw_cap);
}

TEST_CASE("trace invariants and audit over all graphs with n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : enumerate_labeled(n)) {
      if (g.size() == 0) continue;
      const auto tr = run_edge_deletion(g);
      INFO(to_graph6(g));
      REQUIRE(tr.k <= (g.size() + 1) / 2);
      REQUIRE(tr.final_graph.size() == g.size() - tr.k);
      Graph cur = g;
      for (const auto& s : tr.steps) {
        REQUIRE(s.product < s.threshold);
        REQUIRE(cur.size() == g.size() - s.l);
        cur = remove_edge(cur, s.removed_edge.first, s.removed_edge.second);
      }
      for (const auto& o : audit_trace(tr)) REQUIRE(o.verdict != Verdict::Violated);
    }
  }
}

TEST_CASE("procedure is deterministic") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gnp(12, 0.3, seed);
    if (g.size() == 0) continue;
    CHECK(to_json(run_edge_deletion(g)) == to_json(run_edge_deletion(g)));
  }
}

TEST_CASE("trace JSON") {
  const auto j = to_json(run_edge_deletion(k4_plus_k2()));
  CHECK(j["initial_graph6"] == "E~?G");
  CHECK(j["m"] == 7);
  CHECK(j["k"] == 1);
  CHECK(j["stop_reason"] == "ThresholdMet");
  CHECK(j["steps"].size() == 1);
  CHECK(j["steps"][0]["removed_edge"] == nlohmann::json::array({4, 5}));
  CHECK(j["final_graph6"] == "E~??");
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("malformed traces are rejected") {
  const auto good = run_edge_deletion(k4_plus_k2());

  auto t = good;
  t.k = 2;
  CHECK(malformed_code(t) == ErrorCode::MalformedTrace);

  t = good;
  t.steps[0].removed_edge = {0, 1};
  CHECK(malformed_code(t) == ErrorCode::MalformedTrace);

  t = good;
  t.steps[0].product = 1;
  CHECK(malformed_code(t) == ErrorCode::MalformedTrace);

  t = good;
  t.final_graph = k4_plus_k2();
  CHECK(malformed_code(t) == ErrorCode::MalformedTrace);

  t = good;
  t.m = 6;
  CHECK(malformed_code(t) == ErrorCode::MalformedTrace);
}
