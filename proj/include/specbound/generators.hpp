#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "specbound/graph.hpp"

namespace specbound {

struct GeneratorSpec;

namespace family {

struct CompleteBipartite { int a = 1, b = 1; };
struct Path { int k = 1; };
struct Cycle { int k = 3; };
struct Book { int q = 0; };  // hubs 0 and 1, pages 2..q+1
struct Complete { int r = 1; };
struct Petersen {};
struct Gnp {
  int n = 1;
  double p = 0.5;
  std::uint64_t seed = 0;
};
struct DisjointUnion { std::vector<GeneratorSpec> parts; };

}  // namespace family

struct GeneratorSpec {
  std::variant<family::CompleteBipartite, family::Path, family::Cycle, family::Book,
               family::Complete, family::Petersen, family::Gnp, family::DisjointUnion>
      family;
};

struct BlowupSpec {
  Graph pattern;
  std::vector<int> sizes;  // one class size per pattern vertex, zero allowed
};

// Base patterns of the triangle-free equality family. Path vertices come first,
// the isolated K1 vertex is always last.
enum class PatternId { P2K1, TwoP2K1, P4K1, P5K1 };
inline constexpr std::array<PatternId, 4> kAllPatterns{
    PatternId::P2K1, PatternId::TwoP2K1, PatternId::P4K1, PatternId::P5K1};

std::string_view to_string(PatternId id);
Graph pattern_graph(PatternId id);

Graph generate(const GeneratorSpec& spec);

// Class B_v of pattern vertex v occupies a contiguous label range, classes laid
// out in pattern vertex order.
Graph blow_up(const BlowupSpec& spec);

// Edge test for G(n,p): one mt19937_64 draw per vertex pair, pairs in
// lexicographic (i,j) order, edge iff (draw >> 11) * 2^-53 < p.
Graph gnp(int n, double p, std::uint64_t seed);

using FamilySpec = std::variant<GeneratorSpec, BlowupSpec>;

Graph build(const FamilySpec& spec);

// Text form used by the CLI, e.g. "complete_bipartite(3,4)", "book(2)",
// "union(complete(4),path(2))", "gnp(10,0.5,42)", "petersen",
// "blowup(P5K1;1,2,1,1,1,2)", "blowup(path(4);2,1,1,2)", "g6:C~".
FamilySpec parse_family(std::string_view text);

}  // namespace specbound
