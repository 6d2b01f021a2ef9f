#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <string>
#include <type_traits>
#include <vector>

#include "specbound/error.hpp"
#include "specbound/graph.hpp"

namespace specbound {

using BigInt = boost::multiprecision::cpp_int;

// Walk counts indexed from k = 1: totals[k-1] = w_k(G), per_vertex[k-1][u] = w_k(u).
template <typename Int>
struct WalkCounts {
  std::vector<Int> totals;
  std::vector<std::vector<Int>> per_vertex;
};

namespace detail {

template <typename Int>
void checked_add(Int& acc, const Int& term) {
  if constexpr (std::is_integral_v<Int>) {
    if (__builtin_add_overflow(acc, term, &acc)) {
      throw Error(ErrorCode::Overflow, "walk count overflow; reduce kmax");
    }
  } else {
    acc += term;
  }
}

template <typename Int>
std::vector<Int> next_walks(const Graph& g, const std::vector<Int>& current) {
  std::vector<Int> next(current.size(), Int(0));
  for (int u = 0; u < g.order(); ++u) {
    Mask nb = g.neighbors(u);
    while (nb) {
      const int v = std::countr_zero(nb);
      nb &= nb - 1;
      checked_add(next[static_cast<std::size_t>(u)], current[static_cast<std::size_t>(v)]);
    }
  }
  return next;
}

template <typename Int>
Int total(const std::vector<Int>& per_vertex) {
  Int s(0);
  for (const Int& x : per_vertex) checked_add(s, x);
  return s;
}

// num / den as a double without converting either operand directly, so the
// quotient stays accurate when both exceed the double range.
inline double big_ratio(const BigInt& num, const BigInt& den) {
  const auto top = std::max(num == 0 ? 0u : boost::multiprecision::msb(num),
                            boost::multiprecision::msb(den));
  const unsigned shift = top > 60 ? top - 60 : 0;
  return static_cast<double>(num >> shift) / static_cast<double>(den >> shift);
}

}  // namespace detail

// Exact counts of k-walks (walks on k vertices) for k = 1..kmax. Fixed-width
// integer types throw Overflow instead of wrapping.
template <typename Int = std::uint64_t>
WalkCounts<Int> walk_counts(const Graph& g, int kmax) {
  if (kmax < 1) throw Error(ErrorCode::InvalidParams, "walk_counts needs kmax >= 1");
  WalkCounts<Int> out;
  std::vector<Int> level(static_cast<std::size_t>(g.order()), Int(1));
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) level = detail::next_walks(g, level);
    out.totals.push_back(detail::total(level));
    out.per_vertex.push_back(level);
  }
  return out;
}

struct LimitEstimate {
  double estimate = 0;
  int k_used = 0;
};

// Consecutive-ratio convergence must persist this many steps before a limit is
// accepted; a single small difference can be a coincidence at small k (for
// instance any vertex of average degree has w_1(u)/w_1 = w_2(u)/w_2).
inline constexpr int kConfirmSteps = 3;

// lim w_k(u)/w_k(G) for connected nonbipartite g.
LimitEstimate wei_ratio(const Graph& g, int u, double tol, int kcap);

// lim w_k(G)/w_{k-1}(G) for connected nonbipartite g.
LimitEstimate walk_ratio_rho(const Graph& g, double tol, int kcap);

}  // namespace specbound
