#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "specbound/check_outcome.hpp"
#include "specbound/graph.hpp"

namespace specbound {

using Count = std::int64_t;

struct TriangleProfile {
  Count t = 0;
  std::vector<Count> per_vertex;  // t(u)
};

struct Booksize {
  Count bk = 0;
  std::optional<Edge> witness;  // lexicographically least edge attaining bk
};

struct OneEdgeTriples {
  Count tpp = 0;                  // induced 3-sets with exactly one edge
  std::vector<Count> per_vertex;  // t''(u): edges {v,w} with u adjacent to neither
};

// Induced 4-sets containing a triangle, by how many triangle vertices the
// fourth vertex sees (0, 1, 2), and 4-cliques.
struct K4Profile {
  Count k4_0 = 0, k4_1 = 0, k4_2 = 0, k4 = 0;
  bool operator==(const K4Profile&) const = default;
};

struct InvariantProfile {
  Count n = 0;
  Count m = 0;
  TriangleProfile triangles;
  Booksize book;
  OneEdgeTriples tpp;
  K4Profile k4;
  std::vector<int> degrees;
};

// |N(u) ∩ N(v)|
inline Count common_neighbors(const Graph& g, int u, int v) {
  return popcount(g.neighbors(u) & g.neighbors(v));
}

// |N̄(u) ∩ N̄(v)| for an edge {u,v}: vertices adjacent to neither endpoint.
inline Count common_nonneighbors(const Graph& g, int u, int v) {
  return g.order() - g.degree(u) - g.degree(v) + common_neighbors(g, u, v);
}

TriangleProfile triangle_profile(const Graph& g);
Booksize booksize(const Graph& g);
OneEdgeTriples one_edge_triples(const Graph& g);
K4Profile k4_profile(const Graph& g);
InvariantProfile invariant_profile(const Graph& g);

// Edge sums behind the counting relations.
struct EdgeSums {
  Count common = 0;                // sum |N∩N|
  Count common_pairs = 0;          // sum |N∩N|(|N∩N| - 1)
  Count common_times_non = 0;      // sum |N∩N| |N̄∩N̄|
  Count non = 0;                   // sum |N̄∩N̄|
};

EdgeSums edge_sums(const Graph& g);

// The five counting relations, in order: in1, in2, in2_bound, in3, in3_bound.
// Identities compare exact integers; the two bounds are exact inequalities.
std::array<CheckOutcome, 5> k4_relations_check(const Graph& g);
std::array<CheckOutcome, 5> k4_relations_check(const Graph& g, const InvariantProfile& p);

}  // namespace specbound
