#include "specbound/invariants.hpp"

namespace specbound {

TriangleProfile triangle_profile(const Graph& g) {
  TriangleProfile out;
  out.per_vertex.assign(static_cast<std::size_t>(g.order()), 0);
  Count sum = 0;
  for (int u = 0; u < g.order(); ++u) {
    const Mask nu = g.neighbors(u);
    Mask rest = nu;
    Count inside = 0;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      inside += popcount(g.neighbors(v) & nu);
    }
    out.per_vertex[static_cast<std::size_t>(u)] = inside / 2;
    sum += inside / 2;
  }
  out.t = sum / 3;
  return out;
}

Booksize booksize(const Graph& g) {
  Booksize out;
  for (const auto& [u, v] : g.edges()) {
    const Count c = common_neighbors(g, u, v);
    if (!out.witness || c > out.bk) {
      out.bk = c;
      out.witness = Edge{u, v};
    }
  }
  return out;
}

OneEdgeTriples one_edge_triples(const Graph& g) {
  OneEdgeTriples out;
  out.per_vertex.assign(static_cast<std::size_t>(g.order()), 0);
  for (const auto& [v, w] : g.edges()) out.tpp += common_nonneighbors(g, v, w);
  for (int u = 0; u < g.order(); ++u) {
    const Mask far = g.vertex_mask() & ~g.neighbors(u) & ~bit(u);
    Mask rest = far;
    Count twice = 0;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      twice += popcount(g.neighbors(v) & far);
    }
    out.per_vertex[static_cast<std::size_t>(u)] = twice / 2;
  }
  return out;
}

K4Profile k4_profile(const Graph& g) {
  K4Profile out;
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        const bool abc = g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c);
        for (int d = c + 1; d < n; ++d) {
          const Mask quad = bit(a) | bit(b) | bit(c) | bit(d);
          const int edges = (popcount(g.neighbors(a) & quad) + popcount(g.neighbors(b) & quad) +
                             popcount(g.neighbors(c) & quad) + popcount(g.neighbors(d) & quad)) /
                            2;
          switch (edges) {
            case 6: ++out.k4; break;
            case 5: ++out.k4_2; break;
            case 4:
            case 3: {
              // Triangle present iff one of the four triples is complete.
              const bool tri = abc ||
                               (g.has_edge(a, b) && g.has_edge(a, d) && g.has_edge(b, d)) ||
                               (g.has_edge(a, c) && g.has_edge(a, d) && g.has_edge(c, d)) ||
                               (g.has_edge(b, c) && g.has_edge(b, d) && g.has_edge(c, d));
              if (tri) ++(edges == 4 ? out.k4_1 : out.k4_0);
              break;
            }
            default: break;
          }
        }
      }
    }
  }
  return out;
}

InvariantProfile invariant_profile(const Graph& g) {
  InvariantProfile p;
  p.n = g.order();
  p.m = g.size();
  p.triangles = triangle_profile(g);
  p.book = booksize(g);
  p.tpp = one_edge_triples(g);
  p.k4 = k4_profile(g);
  p.degrees = g.degrees();
  return p;
}

EdgeSums edge_sums(const Graph& g) {
  EdgeSums s;
  for (const auto& [u, v] : g.edges()) {
    const Count c = common_neighbors(g, u, v);
    const Count nn = common_nonneighbors(g, u, v);
    s.common += c;
    s.common_pairs += c * (c - 1);
    s.common_times_non += c * nn;
    s.non += nn;
  }
  return s;
}

std::array<CheckOutcome, 5> k4_relations_check(const Graph& g) {
  return k4_relations_check(g, invariant_profile(g));
}

std::array<CheckOutcome, 5> k4_relations_check(const Graph& g, const InvariantProfile& p) {
  const EdgeSums s = edge_sums(g);
  const Count t = p.triangles.t;
  const Count beta = p.book.bk;
  const K4Profile& k = p.k4;
  auto d = [](Count x) { return static_cast<double>(x); };
  return {
      compare("in1", d((p.n - 3) * t), d(k.k4_0 + k.k4_1 + 2 * k.k4_2 + 4 * k.k4), 0,
              Comparison::Identity),
      compare("in2", d(s.common_pairs), d(2 * k.k4_2 + 12 * k.k4), 0, Comparison::Identity),
      compare("in2_bound", d(s.common_pairs), d(3 * (beta - 1) * t), 0, Comparison::NonStrict),
      compare("in3", d(s.common_times_non), d(k.k4_1 + 3 * k.k4_0), 0, Comparison::Identity),
      compare("in3_bound", d(s.common_times_non), d(beta * p.tpp.tpp), 0, Comparison::NonStrict),
  };
}

}  // namespace specbound
