#include "specbound/generators.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <random>

#include "specbound/error.hpp"
#include "specbound/graph6.hpp"

namespace specbound {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidParams, what);
}

Graph path_graph(int k) {
  Graph g(k);
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  return g;
}

struct Generate {
  Graph operator()(const family::CompleteBipartite& s) const {
    require(s.a >= 1 && s.b >= 1, "complete_bipartite needs a,b >= 1");
    require(s.a + s.b <= Graph::kMaxOrder, "complete_bipartite too large");
    Graph g(s.a + s.b);
    for (int i = 0; i < s.a; ++i) {
      for (int j = 0; j < s.b; ++j) g.add_edge(i, s.a + j);
    }
    return g;
  }
  Graph operator()(const family::Path& s) const {
    require(s.k >= 1 && s.k <= Graph::kMaxOrder, "path needs 1 <= k <= 64");
    return path_graph(s.k);
  }
  Graph operator()(const family::Cycle& s) const {
    require(s.k >= 3 && s.k <= Graph::kMaxOrder, "cycle needs 3 <= k <= 64");
    Graph g = path_graph(s.k);
    g.add_edge(0, s.k - 1);
    return g;
  }
  Graph operator()(const family::Book& s) const {
    require(s.q >= 0 && s.q + 2 <= Graph::kMaxOrder, "book needs 0 <= q <= 62");
    Graph g(s.q + 2);
    g.add_edge(0, 1);
    for (int p = 2; p < s.q + 2; ++p) {
      g.add_edge(0, p);
      g.add_edge(1, p);
    }
    return g;
  }
  Graph operator()(const family::Complete& s) const {
    require(s.r >= 1 && s.r <= Graph::kMaxOrder, "complete needs 1 <= r <= 64");
    Graph g(s.r);
    for (int i = 0; i < s.r; ++i) {
      for (int j = i + 1; j < s.r; ++j) g.add_edge(i, j);
    }
    return g;
  }
  Graph operator()(const family::Petersen&) const {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
      g.add_edge(i, (i + 1) % 5);
      g.add_edge(i, i + 5);
      g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
  }
  Graph operator()(const family::Gnp& s) const { return gnp(s.n, s.p, s.seed); }
  Graph operator()(const family::DisjointUnion& s) const {
    Graph g(0);
    for (const auto& part : s.parts) g = disjoint_union(g, generate(part));
    return g;
  }
};

// Recursive-descent reader for the family text grammar.
class FamilyParser {
 public:
  explicit FamilyParser(std::string_view text) : text_(text) {}

  FamilySpec parse_all() {
    FamilySpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::InvalidParams,
                "family spec '" + std::string(text_) + "': " + what + " at column " +
                    std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a family name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view number_token() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
            text_[pos_] == '-' || text_[pos_] == '+' || text_[pos_] == 'e' ||
            text_[pos_] == 'E')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return text_.substr(start, pos_ - start);
  }

  template <typename T>
  T number() {
    const std::string token(number_token());
    T value{};
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) fail("bad number '" + token + "'");
    return value;
  }

  double real() {
    const std::string token(number_token());
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      fail("bad number '" + token + "'");
    }
    if (used != token.size()) fail("bad number '" + token + "'");
    return value;
  }

  GeneratorSpec parse_generator() {
    FamilySpec spec = parse_spec();
    if (const auto* gen = std::get_if<GeneratorSpec>(&spec)) return *gen;
    fail("blow-ups cannot appear inside union(...)");
  }

  FamilySpec parse_spec() {
    skip_space();
    if (text_.substr(pos_).starts_with("g6:")) {
      pos_ += 3;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ';' && text_[pos_] != ',' &&
             text_[pos_] != ')' && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      // A bare graph is carried as a blow-up with unit classes.
      Graph g = parse_graph6(text_.substr(start, pos_ - start));
      return BlowupSpec{g, std::vector<int>(static_cast<std::size_t>(g.order()), 1)};
    }
    const std::string name = identifier();
    for (PatternId id : kAllPatterns) {
      if (name == to_string(id)) {
        Graph g = pattern_graph(id);
        return BlowupSpec{g, std::vector<int>(static_cast<std::size_t>(g.order()), 1)};
      }
    }
    if (name == "petersen") {
      if (accept('(')) expect(')');
      return GeneratorSpec{family::Petersen{}};
    }
    expect('(');
    FamilySpec out;
    if (name == "complete_bipartite") {
      family::CompleteBipartite s;
      s.a = number<int>();
      expect(',');
      s.b = number<int>();
      out = GeneratorSpec{s};
    } else if (name == "path") {
      out = GeneratorSpec{family::Path{number<int>()}};
    } else if (name == "cycle") {
      out = GeneratorSpec{family::Cycle{number<int>()}};
    } else if (name == "book") {
      out = GeneratorSpec{family::Book{number<int>()}};
    } else if (name == "complete") {
      out = GeneratorSpec{family::Complete{number<int>()}};
    } else if (name == "gnp") {
      family::Gnp s;
      s.n = number<int>();
      expect(',');
      s.p = real();
      expect(',');
      s.seed = number<std::uint64_t>();
      out = GeneratorSpec{s};
    } else if (name == "union" || name == "disjoint_union") {
      family::DisjointUnion s;
      do {
        s.parts.push_back(parse_generator());
      } while (accept(','));
      out = GeneratorSpec{std::move(s)};
    } else if (name == "blowup") {
      FamilySpec base = parse_spec();
      BlowupSpec s;
      s.pattern = build(base);
      expect(';');
      do {
        s.sizes.push_back(number<int>());
      } while (accept(','));
      out = std::move(s);
    } else {
      fail("unknown family '" + name + "'");
    }
    expect(')');
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view to_string(PatternId id) {
  switch (id) {
    case PatternId::P2K1: return "P2K1";
    case PatternId::TwoP2K1: return "TwoP2K1";
    case PatternId::P4K1: return "P4K1";
    case PatternId::P5K1: return "P5K1";
  }
  return "?";
}

Graph pattern_graph(PatternId id) {
  switch (id) {
    case PatternId::P2K1: return Graph::from_edges(3, std::vector<Edge>{{0, 1}});
    case PatternId::TwoP2K1: return Graph::from_edges(5, std::vector<Edge>{{0, 1}, {2, 3}});
    case PatternId::P4K1: return Graph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    case PatternId::P5K1:
      return Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  }
  throw Error(ErrorCode::InvalidParams, "unknown pattern");
}

Graph generate(const GeneratorSpec& spec) { return std::visit(Generate{}, spec.family); }

Graph blow_up(const BlowupSpec& spec) {
  const Graph& h = spec.pattern;
  if (spec.sizes.size() != static_cast<std::size_t>(h.order())) {
    throw Error(ErrorCode::SizeMismatch,
                "blow-up needs " + std::to_string(h.order()) + " class sizes, got " +
                    std::to_string(spec.sizes.size()));
  }
  std::vector<int> start(spec.sizes.size() + 1, 0);
  for (std::size_t v = 0; v < spec.sizes.size(); ++v) {
    if (spec.sizes[v] < 0) throw Error(ErrorCode::SizeMismatch, "negative class size");
    start[v + 1] = start[v] + spec.sizes[v];
  }
  if (start.back() > Graph::kMaxOrder) {
    throw Error(ErrorCode::OrderTooLarge, "blow-up exceeds 64 vertices");
  }
  Graph g(start.back());
  for (const auto& [u, v] : h.edges()) {
    for (int a = start[static_cast<std::size_t>(u)]; a < start[static_cast<std::size_t>(u) + 1]; ++a) {
      for (int b = start[static_cast<std::size_t>(v)]; b < start[static_cast<std::size_t>(v) + 1]; ++b) {
        g.add_edge(a, b);
      }
    }
  }
  return g;
}

Graph gnp(int n, double p, std::uint64_t seed) {
  require(n >= 1 && n <= Graph::kMaxOrder, "gnp needs 1 <= n <= 64");
  require(p >= 0.0 && p <= 1.0, "gnp needs 0 <= p <= 1");
  std::mt19937_64 engine(seed);
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      if (u < p) g.add_edge(i, j);
    }
  }
  return g;
}

Graph build(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> Graph {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, GeneratorSpec>) {
          return generate(s);
        } else {
          return blow_up(s);
        }
      },
      spec);
}

FamilySpec parse_family(std::string_view text) { return FamilyParser(text).parse_all(); }

}  // namespace specbound
