#include "specbound/walks.hpp"

#include <cmath>
#include <functional>

namespace specbound {

namespace {

void require_connected_nonbipartite(const Graph& g) {
  const Structure st = structure(g);
  if (g.order() < 1 || !st.connected() || st.is_bipartite()) {
    throw Error(ErrorCode::NotConnectedNonbipartite,
                "limit estimators need a connected nonbipartite graph");
  }
}

// Runs the walk recursion and feeds successive values of `ratio` to the
// convergence test. Returns at the first k where the last kConfirmSteps
// differences are all within tol.
LimitEstimate converge(const Graph& g, double tol, int kcap, int first_k,
                       const std::function<double(const std::vector<BigInt>&, const BigInt&,
                                                  const BigInt&)>& ratio) {
  std::vector<BigInt> level(static_cast<std::size_t>(g.order()), BigInt(1));
  BigInt prev_total = 0;
  BigInt total = detail::total(level);
  double prev = 0;
  int streak = 0;
  for (int k = 1; k <= kcap; ++k) {
    if (k > 1) {
      level = detail::next_walks(g, level);
      prev_total = total;
      total = detail::total(level);
    }
    if (k < first_k) continue;
    const double r = ratio(level, total, prev_total);
    if (k > first_k) {
      streak = std::abs(r - prev) <= tol ? streak + 1 : 0;
      if (streak >= kConfirmSteps) return {r, k};
    }
    prev = r;
  }
  throw Error(ErrorCode::KcapExceeded,
              "ratio did not settle within kcap = " + std::to_string(kcap));
}

}  // namespace

LimitEstimate wei_ratio(const Graph& g, int u, double tol, int kcap) {
  require_connected_nonbipartite(g);
  if (u < 0 || u >= g.order()) throw Error(ErrorCode::InvalidParams, "vertex out of range");
  return converge(g, tol, kcap, 1,
                  [u](const std::vector<BigInt>& level, const BigInt& total, const BigInt&) {
                    return detail::big_ratio(level[static_cast<std::size_t>(u)], total);
                  });
}

LimitEstimate walk_ratio_rho(const Graph& g, double tol, int kcap) {
  require_connected_nonbipartite(g);
  return converge(g, tol, kcap, 2,
                  [](const std::vector<BigInt>&, const BigInt& total, const BigInt& prev_total) {
                    return detail::big_ratio(total, prev_total);
                  });
}

}  // namespace specbound
