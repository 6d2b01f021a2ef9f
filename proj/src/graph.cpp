#include "specbound/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "specbound/error.hpp"

namespace specbound {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder) {
    throw Error(ErrorCode::OrderTooLarge,
                "order " + std::to_string(n) + " outside [0, 64]");
  }
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::int64_t Graph::size() const noexcept {
  std::int64_t total = 0;
  for (Mask row : rows_) total += popcount(row);
  return total / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    Mask higher = neighbors(u) & ~((bit(u) << 1) - 1);
    while (higher) {
      int v = std::countr_zero(higher);
      out.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int u = 0; u < n_; ++u) out[static_cast<std::size_t>(u)] = degree(u);
  return out;
}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= n_) {
    throw Error(ErrorCode::InvalidParams,
                "vertex " + std::to_string(u) + " out of range for order " +
                    std::to_string(n_));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorCode::InvalidParams, "self-loop rejected");
  rows_[static_cast<std::size_t>(u)] |= bit(v);
  rows_[static_cast<std::size_t>(v)] |= bit(u);
}

void Graph::erase_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[static_cast<std::size_t>(u)] &= ~bit(v);
  rows_[static_cast<std::size_t>(v)] &= ~bit(u);
}

Graph remove_edge(const Graph& g, int i, int j) {
  if (i < 0 || j < 0 || i >= g.order() || j >= g.order() || !g.has_edge(i, j)) {
    throw Error(ErrorCode::NoSuchEdge, "edge {" + std::to_string(i) + "," +
                                           std::to_string(j) + "} not present");
  }
  Graph out = g;
  out.erase_edge(i, j);
  return out;
}

StrippedGraph strip_isolated(const Graph& g) {
  StrippedGraph out;
  for (int u = 0; u < g.order(); ++u) {
    (g.degree(u) == 0 ? out.removed : out.kept).push_back(u);
  }
  out.graph = induced_subgraph(g, out.kept);
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  Graph out(static_cast<int>(vertices.size()));
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (g.has_edge(vertices[a], vertices[b])) {
        out.add_edge(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int shift = a.order();
  if (shift + b.order() > Graph::kMaxOrder) {
    throw Error(ErrorCode::OrderTooLarge, "disjoint union exceeds 64 vertices");
  }
  Graph out(shift + b.order());
  for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : b.edges()) out.add_edge(u + shift, v + shift);
  return out;
}

bool Structure::is_bipartite() const {
  return std::all_of(bipartite.begin(), bipartite.end(), [](bool b) { return b; });
}

std::optional<std::vector<int>> Structure::odd_cycle_witness() const {
  for (const auto& c : odd_cycle) {
    if (c) return c;
  }
  return std::nullopt;
}

Structure structure(const Graph& g) {
  const int n = g.order();
  Structure s;
  s.component_of.assign(static_cast<std::size_t>(n), -1);
  s.color.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> level(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);

  for (int root = 0; root < n; ++root) {
    if (s.component_of[static_cast<std::size_t>(root)] != -1) continue;
    const int id = static_cast<int>(s.components.size());
    std::vector<int> members;
    std::deque<int> queue{root};
    s.component_of[static_cast<std::size_t>(root)] = id;
    level[static_cast<std::size_t>(root)] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      members.push_back(u);
      Mask nb = g.neighbors(u);
      while (nb) {
        int v = std::countr_zero(nb);
        nb &= nb - 1;
        if (s.component_of[static_cast<std::size_t>(v)] == -1) {
          s.component_of[static_cast<std::size_t>(v)] = id;
          level[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          queue.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());

    // A BFS tree edge joins consecutive levels; an edge inside one level closes
    // an odd cycle through the lowest common ancestor.
    std::optional<std::vector<int>> cycle;
    for (int u : members) {
      Mask nb = g.neighbors(u) & ~((bit(u) << 1) - 1);
      while (nb && !cycle) {
        int v = std::countr_zero(nb);
        nb &= nb - 1;
        if (level[static_cast<std::size_t>(u)] != level[static_cast<std::size_t>(v)]) continue;
        std::vector<int> left{u}, right{v};
        int a = u, b = v;
        while (parent[static_cast<std::size_t>(a)] != parent[static_cast<std::size_t>(b)]) {
          a = parent[static_cast<std::size_t>(a)];
          b = parent[static_cast<std::size_t>(b)];
          left.push_back(a);
          right.push_back(b);
        }
        left.push_back(parent[static_cast<std::size_t>(a)]);
        left.insert(left.end(), right.rbegin(), right.rend());
        cycle = std::move(left);
      }
      if (cycle) break;
    }
    const bool bip = !cycle.has_value();
    if (bip) {
      for (int u : members) {
        s.color[static_cast<std::size_t>(u)] = level[static_cast<std::size_t>(u)] % 2;
      }
    }
    s.components.push_back(std::move(members));
    s.bipartite.push_back(bip);
    s.odd_cycle.push_back(std::move(cycle));
  }
  return s;
}

}  // namespace specbound
