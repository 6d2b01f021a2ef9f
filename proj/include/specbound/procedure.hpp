#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "specbound/check_outcome.hpp"
#include "specbound/graph.hpp"
#include "specbound/spectral.hpp"

namespace specbound {

enum class StopReason { HalfEdgesRemoved, ThresholdMet };

std::string_view to_string(StopReason r);

struct ProcedureStep {
  int l = 0;             // index of the graph the edge was removed from
  Edge removed_edge{};
  double product = 0;    // x_i x_j under the Perron vector of G_l
  double threshold = 0;  // 1 / (8 sqrt(m - l))
  double rho_before = 0;
  double rho_after = 0;
  int perron_component = -1;  // lowest vertex of the component carrying x_l
};

struct ProcedureTrace {
  Graph initial;
  std::int64_t m = 0;
  bool premise_lambda_sq_ge_m = false;  // recorded, not required
  std::vector<ProcedureStep> steps;
  StopReason stop_reason = StopReason::ThresholdMet;
  int k = 0;
  Graph final_graph;
  double final_rho = 0;
  int final_perron_component = -1;
};

// Repeatedly deletes the lexicographically least edge whose Perron-vector
// product falls strictly below 1/(8 sqrt(m - l)), stopping after ceil(m/2)
// deletions or when no edge qualifies.
ProcedureTrace run_edge_deletion(const Graph& g, const PowerIterationOptions& opt = {});

// Replays the trace against independently computed spectra and rechecks every
// per-step and terminal guarantee. Throws MalformedTrace if the trace does not
// describe a valid run.
std::vector<CheckOutcome> audit_trace(const ProcedureTrace& tr, double tol = 1e-8);

nlohmann::json to_json(const ProcedureTrace& tr);

}  // namespace specbound
