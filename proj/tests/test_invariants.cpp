#include <doctest.h>

#include "specbound/enumerate.hpp"
#include "specbound/generators.hpp"
#include "specbound/invariants.hpp"
#include "specbound/spectral.hpp"

using namespace specbound;

namespace {

Graph g_of(const GeneratorSpec& s) { return generate(s); }

Graph paw() {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {2, 3}};
  return Graph::from_edges(4, e);
}

// Naive oracles working from has_edge only.
struct Naive {
  Count t = 0, tpp = 0, bk = 0;
  K4Profile k4;
  std::vector<Count> tu, tppu;
};

Naive naive(const Graph& g) {
  const int n = g.order();
  Naive r;
  r.tu.assign(static_cast<std::size_t>(n), 0);
  r.tppu.assign(static_cast<std::size_t>(n), 0);
  auto e = [&](int a, int b) { return g.has_edge(a, b) ? 1 : 0; };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const int edges = e(a, b) + e(a, c) + e(b, c);
        if (edges == 3) {
          ++r.t;
          ++r.tu[static_cast<std::size_t>(a)];
          ++r.tu[static_cast<std::size_t>(b)];
          ++r.tu[static_cast<std::size_t>(c)];
        }
        if (edges == 1) {
          ++r.tpp;
          const int lone = e(a, b) ? c : e(a, c) ? b : a;
          ++r.tppu[static_cast<std::size_t>(lone)];
        }
      }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!e(a, b)) continue;
      Count common = 0;
      for (int c = 0; c < n; ++c) common += e(a, c) && e(b, c);
      r.bk = std::max(r.bk, common);
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const int q[4] = {a, b, c, d};
          int edges = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) edges += e(q[i], q[j]);
          if (edges == 6) {
            ++r.k4.k4;
            continue;
          }
          // Find a triangle in the quadruple; the fourth vertex's degree into it.
          for (int out = 0; out < 4; ++out) {
            int tri[3], k = 0;
            for (int i = 0; i < 4; ++i)
              if (i != out) tri[k++] = q[i];
            if (e(tri[0], tri[1]) && e(tri[0], tri[2]) && e(tri[1], tri[2])) {
              const int deg = e(q[out], tri[0]) + e(q[out], tri[1]) + e(q[out], tri[2]);
              if (deg == 0) ++r.k4.k4_0;
              if (deg == 1) ++r.k4.k4_1;
              if (deg == 2) ++r.k4.k4_2;
              break;
            }
          }
        }
  return r;
}

}  // namespace

TEST_CASE("triangle profile examples") {
  const auto k4 = triangle_profile(g_of({family::Complete{4}}));
  CHECK(k4.t == 4);
  CHECK(k4.per_vertex == std::vector<Count>{3, 3, 3, 3});
  CHECK(triangle_profile(g_of({family::Cycle{5}})).t == 0);
  CHECK(triangle_profile(g_of({family::Complete{5}})).t == 10);
}

TEST_CASE("booksize examples") {
  CHECK(booksize(g_of({family::Book{5}})).bk == 5);
  const auto k4 = booksize(g_of({family::Complete{4}}));
  CHECK(k4.bk == 2);
  CHECK(k4.witness == std::optional<Edge>(Edge{0, 1}));
  CHECK(booksize(g_of({family::Petersen{}})).bk == 0);
  CHECK(booksize(Graph(4)).bk == 0);
  CHECK_FALSE(booksize(Graph(4)).witness.has_value());
  // Only the edge {2,3} of this graph lies in two triangles.
  const std::vector<Edge> e{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}};
  const auto b = booksize(Graph::from_edges(5, e));
  CHECK(b.bk == 2);
  CHECK(b.witness == std::optional<Edge>(Edge{2, 3}));
}

TEST_CASE("one-edge triples examples") {
  CHECK(one_edge_triples(disjoint_union(g_of({family::Path{2}}), Graph(1))).tpp == 1);
  const auto c5 = one_edge_triples(g_of({family::Cycle{5}}));
  CHECK(c5.tpp == 5);
  CHECK(c5.per_vertex == std::vector<Count>{1, 1, 1, 1, 1});
  CHECK(one_edge_triples(g_of({family::Complete{4}})).tpp == 0);
}

TEST_CASE("k4 profile examples") {
  CHECK(k4_profile(g_of({family::Complete{4}})) == K4Profile{0, 0, 0, 1});
  CHECK(k4_profile(paw()) == K4Profile{0, 1, 0, 0});
  CHECK(k4_profile(g_of({family::Book{2}})) == K4Profile{0, 0, 1, 0});
  CHECK(k4_profile(disjoint_union(g_of({family::Complete{3}}), Graph(1))) == K4Profile{1, 0, 0, 0});
}

TEST_CASE("counting relations examples") {
  const auto k5 = k4_relations_check(g_of({family::Complete{5}}));
  CHECK(k5[0].lhs == 20.0);
  CHECK(k5[0].rhs == 20.0);
  CHECK(k5[0].verdict == Verdict::HoldsWithEquality);
  CHECK(k5[2].lhs == 60.0);
  CHECK(k5[2].rhs == 60.0);
  CHECK(k5[2].verdict == Verdict::HoldsWithEquality);
  CHECK(k5[4].lhs == 0.0);
  CHECK(k5[4].rhs == 0.0);

  const auto k4 = k4_relations_check(g_of({family::Complete{4}}));
  CHECK(k4[0].lhs == 4.0);
  CHECK(k4[0].rhs == 4.0);

  for (const auto& o : k4_relations_check(g_of({family::Cycle{5}}))) {
    CHECK(o.lhs == 0.0);
    CHECK(o.rhs == 0.0);
    CHECK(o.verdict != Verdict::Violated);
  }
  CHECK(k5[0].predicate_id == "in1");
  CHECK(k5[4].predicate_id == "in3_bound");
}

TEST_CASE("bitset kernels agree with naive enumeration for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_labeled(n)) {
      const auto p = invariant_profile(g);
      const Naive r = naive(g);
      REQUIRE(p.triangles.t == r.t);
      REQUIRE(p.triangles.per_vertex == r.tu);
      REQUIRE(p.tpp.tpp == r.tpp);
      REQUIRE(p.tpp.per_vertex == r.tppu);
      REQUIRE(p.book.bk == r.bk);
      REQUIRE(p.k4 == r.k4);
    }
  }
}

TEST_CASE("profile identities, the colem inequality and relations for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_labeled(n)) {
      const auto p = invariant_profile(g);
      Count sum_t = 0, sum_tpp = 0;
      for (Count x : p.triangles.per_vertex) sum_t += x;
      for (Count x : p.tpp.per_vertex) sum_tpp += x;
      REQUIRE(sum_t == 3 * p.triangles.t);
      REQUIRE(sum_tpp == p.tpp.tpp);
      const EdgeSums s = edge_sums(g);
      REQUIRE(s.common == 3 * p.triangles.t);
      REQUIRE(s.non == p.tpp.tpp);
      for (const auto& [u, v] : g.edges()) REQUIRE(common_neighbors(g, u, v) <= p.book.bk);
      REQUIRE((n - 3 * p.book.bk) * p.triangles.t <= p.book.bk * p.tpp.tpp);
      for (const auto& o : k4_relations_check(g, p)) REQUIRE(o.verdict != Verdict::Violated);
    }
  }
}

TEST_CASE("six t equals the cubic power sum on random graphs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = gnp(4 + static_cast<int>(seed % 20), 0.45, seed);
    const double six_t = 6.0 * static_cast<double>(triangle_profile(g).t);
    REQUIRE(std::abs(spectrum(g).power_sum(3) - six_t) <= 1e-8 * std::max(1.0, six_t));
  }
}
