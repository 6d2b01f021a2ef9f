#include "specbound/enumerate.hpp"

#include <string>

#include "specbound/error.hpp"

namespace specbound {

LabeledGraphs::LabeledGraphs(int n, bool allow_order_8) : n_(n), pairs_(n * (n - 1) / 2) {
  const int cap = allow_order_8 ? kOverrideEnumerationOrder : kMaxEnumerationOrder;
  if (n < 1 || n > cap) {
    throw Error(ErrorCode::OrderTooLarge,
                "enumeration order " + std::to_string(n) + " outside [1, " +
                    std::to_string(cap) + "]");
  }
}

Graph LabeledGraphs::at(std::uint64_t index) const {
  Graph g(n_);
  int k = 0;
  for (int j = 1; j < n_; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((index >> k) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace specbound
