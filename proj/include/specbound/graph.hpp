#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace specbound {

using Edge = std::pair<int, int>;  // always stored with first < second
using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }
constexpr int popcount(Mask m) { return std::popcount(m); }

// Simple undirected graph on vertices 0..n-1. Row u of the adjacency has bit v
// set iff {u,v} is an edge; rows stay symmetric and loop-free.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  std::int64_t size() const noexcept;  // edge count m

  Mask neighbors(int u) const { return rows_[static_cast<std::size_t>(u)]; }
  Mask vertex_mask() const noexcept {
    return n_ == 64 ? ~Mask{0} : bit(n_) - 1;
  }
  int degree(int u) const { return popcount(neighbors(u)); }
  bool has_edge(int u, int v) const { return (neighbors(u) >> v) & 1U; }

  // Edges in lexicographic order of (i, j) with i < j.
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;

  // Mutators for construction. Graphs are treated as values once built.
  void add_edge(int u, int v);
  void erase_edge(int u, int v);

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int u) const;

  int n_ = 0;
  std::vector<Mask> rows_;
};

// Contract-checked removal: throws NoSuchEdge if {i,j} is absent.
Graph remove_edge(const Graph& g, int i, int j);

struct StrippedGraph {
  Graph graph;
  std::vector<int> removed;  // original labels of the dropped vertices
  std::vector<int> kept;     // kept[new_label] = original label
};

StrippedGraph strip_isolated(const Graph& g);

// Induced subgraph on the given vertices, relabelled 0..k-1 in listed order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

Graph disjoint_union(const Graph& a, const Graph& b);

struct Structure {
  std::vector<std::vector<int>> components;  // sorted, ordered by lowest vertex
  std::vector<int> component_of;             // vertex -> component index
  std::vector<bool> bipartite;               // per component
  std::vector<int> color;                    // 0/1 on bipartite components, -1 elsewhere
  // Per component: a simple odd cycle (vertex sequence, closing edge implied)
  // for nonbipartite components.
  std::vector<std::optional<std::vector<int>>> odd_cycle;

  bool connected() const { return components.size() <= 1; }
  bool is_bipartite() const;
  // First odd cycle over all components, if any.
  std::optional<std::vector<int>> odd_cycle_witness() const;
};

Structure structure(const Graph& g);

}  // namespace specbound
