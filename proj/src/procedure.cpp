#include "specbound/procedure.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "specbound/error.hpp"
#include "specbound/graph6.hpp"
#include "specbound/report.hpp"

namespace specbound {

std::string_view to_string(StopReason r) {
  return r == StopReason::HalfEdgesRemoved ? "HalfEdgesRemoved" : "ThresholdMet";
}

namespace {

std::int64_t half_up(std::int64_t m) { return (m + 1) / 2; }

double threshold_at(std::int64_t edges) { return 1.0 / (8.0 * std::sqrt(static_cast<double>(edges))); }

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedTrace, what);
}

}  // namespace

ProcedureTrace run_edge_deletion(const Graph& g, const PowerIterationOptions& opt) {
  const std::int64_t m = g.size();
  if (m == 0) throw Error(ErrorCode::EmptyGraph, "edge deletion needs m >= 1");
  ProcedureTrace tr;
  tr.initial = g;
  tr.m = m;
  tr.premise_lambda_sq_ge_m = [&] {
    const double l1 = spectrum<double>(g).lambda1();
    return l1 * l1 >= static_cast<double>(m) - 1e-8 * static_cast<double>(m);
  }();

  Graph current = g;
  PerronData<double> pd = perron<double>(current, opt);
  int l = 0;
  while (true) {
    if (l == half_up(m)) {
      tr.stop_reason = StopReason::HalfEdgesRemoved;
      break;
    }
    const double threshold = threshold_at(m - l);
    std::optional<Edge> pick;
    double product = 0;
    for (const auto& [i, j] : current.edges()) {
      const double x = pd.vector(i) * pd.vector(j);
      if (x < threshold) {
        pick = Edge{i, j};
        product = x;
        break;
      }
    }
    if (!pick) {
      tr.stop_reason = StopReason::ThresholdMet;
      break;
    }
    ProcedureStep step;
    step.l = l;
    step.removed_edge = *pick;
    step.product = product;
    step.threshold = threshold;
    step.rho_before = pd.rho;
    step.perron_component = pd.component_root;
    current = remove_edge(current, pick->first, pick->second);
    pd = perron<double>(current, opt);
    step.rho_after = pd.rho;
    tr.steps.push_back(step);
    ++l;
  }
  tr.k = l;
  tr.final_graph = std::move(current);
  tr.final_rho = pd.rho;
  tr.final_perron_component = pd.component_root;
  return tr;
}

std::vector<CheckOutcome> audit_trace(const ProcedureTrace& tr, double tol) {
  const std::int64_t m = tr.m;
  if (m != tr.initial.size() || m < 1) malformed("edge count does not match the initial graph");
  if (tr.k != static_cast<int>(tr.steps.size())) malformed("k differs from the number of steps");
  if (tr.k > half_up(m)) malformed("more than ceil(m/2) deletions");
  if (tr.final_graph.size() != m - tr.k) malformed("final graph has the wrong edge count");

  std::vector<CheckOutcome> out;
  Graph replay = tr.initial;
  double rho_prev = spectrum<double>(replay).lambda1();
  const double rho0 = rho_prev;
  double chain_bound = rho0;
  for (std::size_t s = 0; s < tr.steps.size(); ++s) {
    const ProcedureStep& st = tr.steps[s];
    if (st.l != static_cast<int>(s)) malformed("step indices are not consecutive");
    if (!(st.product < st.threshold)) malformed("recorded product is not below its threshold");
    if (std::abs(st.threshold - threshold_at(m - st.l)) > 1e-15) malformed("wrong threshold");
    if (replay.size() != m - st.l) malformed("edge bookkeeping broken");
    replay = remove_edge(replay, st.removed_edge.first, st.removed_edge.second);

    // rho(G_s) > rho(G_{s-1}) - 1/(4 sqrt(m - s + 1)), s = l + 1.
    const double rho_now = spectrum<double>(replay).lambda1();
    const double drop = 1.0 / (4.0 * std::sqrt(static_cast<double>(m - st.l)));
    CheckOutcome rin = compare("rin", rho_prev - drop, rho_now, tol, Comparison::NonStrict);
    rin.witness = Witness{"edge", {st.removed_edge.first, st.removed_edge.second},
                          "step " + std::to_string(st.l + 1)};
    out.push_back(std::move(rin));
    chain_bound -= drop;
    rho_prev = rho_now;
  }
  if (!(replay == tr.final_graph)) malformed("replayed deletions do not reach the final graph");

  const double rho_k = rho_prev;
  out.push_back(compare("chain", chain_bound, rho_k, tol, Comparison::NonStrict));

  const double k = tr.k;
  const double md = static_cast<double>(m);
  const double rest = md - k;
  if (rho0 * rho0 >= md - tol * md) {
    // rho(G_k) >= sqrt(m - k) + k (2 - sqrt 2) / (4 sqrt m) under rho(G) >= sqrt(m).
    out.push_back(compare("terminal_bound",
                          std::sqrt(rest) + k * (2.0 - std::sqrt(2.0)) / (4.0 * std::sqrt(md)),
                          rho_k, tol, Comparison::NonStrict));
  } else {
    out.push_back(vacuous("terminal_bound", "lambda1^2 >= m", tol));
  }

  if (tr.stop_reason == StopReason::HalfEdgesRemoved) {
    out.push_back(compare("half_cap", static_cast<double>(half_up(m)), k, 0, Comparison::Identity));
    return out;
  }

  // ThresholdMet: every remaining edge satisfies the product bound under an
  // independently recomputed Perron vector.
  const PerronData<double> pd = perron<double>(tr.final_graph);
  const double threshold = threshold_at(m - tr.k);
  double worst = std::numeric_limits<double>::infinity();
  Edge worst_edge{};
  for (const auto& [i, j] : tr.final_graph.edges()) {
    const double x = pd.vector(i) * pd.vector(j);
    if (x < worst) {
      worst = x;
      worst_edge = {i, j};
    }
  }
  CheckOutcome elb = compare("elb", threshold, worst, 0, Comparison::NonStrict);
  elb.witness = Witness{"edge", {worst_edge.first, worst_edge.second}, "smallest product"};
  const bool elb_ok = elb.verdict != Verdict::Violated;
  out.push_back(std::move(elb));

  const StrippedGraph stripped = strip_isolated(tr.final_graph);
  const Structure st = structure(stripped.graph);
  if (tr.k >= 1 && elb_ok) {
    CheckOutcome conn = compare("connected_remainder", 1.0,
                                st.connected() && stripped.graph.order() > 0 ? 1.0 : 0.0, 0,
                                Comparison::Identity);
    out.push_back(std::move(conn));
  } else {
    out.push_back(vacuous("connected_remainder", "k >= 1 and elb", 0));
  }
  if (rho_k > std::sqrt(rest) + tol) {
    CheckOutcome nb = compare("nonbipartite_remainder", 1.0, st.is_bipartite() ? 0.0 : 1.0, 0,
                              Comparison::Identity);
    if (auto cyc = st.odd_cycle_witness()) {
      std::vector<int> original;
      for (int v : *cyc) original.push_back(stripped.kept[static_cast<std::size_t>(v)]);
      nb.witness = Witness{"cycle", std::move(original), "odd cycle"};
    }
    out.push_back(std::move(nb));
  } else {
    out.push_back(vacuous("nonbipartite_remainder", "rho(G_k) > sqrt(m - k)", tol));
  }
  return out;
}

nlohmann::json to_json(const ProcedureTrace& tr) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : tr.steps) {
    steps.push_back({{"l", s.l},
                     {"removed_edge", {s.removed_edge.first, s.removed_edge.second}},
                     {"product", round15(s.product)},
                     {"threshold", round15(s.threshold)},
                     {"rho_before", round15(s.rho_before)},
                     {"rho_after", round15(s.rho_after)},
                     {"perron_component", s.perron_component}});
  }
  return {{"initial_graph6", to_graph6(tr.initial)},
          {"m", tr.m},
          {"premise_lambda1_sq_ge_m", tr.premise_lambda_sq_ge_m},
          {"steps", std::move(steps)},
          {"stop_reason", std::string(to_string(tr.stop_reason))},
          {"k", tr.k},
          {"final_graph6", to_graph6(tr.final_graph)},
          {"final_rho", round15(tr.final_rho)},
          {"final_perron_component", tr.final_perron_component}};
}

}  // namespace specbound
