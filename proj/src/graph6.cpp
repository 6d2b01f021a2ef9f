#include "specbound/graph6.hpp"

#include "specbound/error.hpp"

namespace specbound {

namespace {

constexpr int kBias = 63;

std::size_t edge_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.empty()) throw Error(ErrorCode::BadLength, "empty graph6 line", 0);
  for (std::size_t i = 0; i < line.size(); ++i) {
    const int c = static_cast<unsigned char>(line[i]);
    if (c < kBias || c > 126) {
      throw Error(ErrorCode::ByteOutOfRange,
                  "byte value " + std::to_string(c) + " outside 63..126", i);
    }
  }
  const int n = static_cast<unsigned char>(line[0]) - kBias;
  if (n > kMaxGraph6Order) {
    throw Error(ErrorCode::OrderTooLarge, "long-form graph6 orders are not supported", 0);
  }
  const std::size_t expected = 1 + edge_bytes(n);
  if (line.size() != expected) {
    throw Error(ErrorCode::BadLength,
                "expected " + std::to_string(expected) + " bytes for order " +
                    std::to_string(n) + ", got " + std::to_string(line.size()),
                std::min(line.size(), expected));
  }

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(line[1 + k / 6]) - kBias;
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const std::size_t last = line.size() - 1;
    const int byte = static_cast<unsigned char>(line[last]) - kBias;
    const int pad_bits = 6 - static_cast<int>(k % 6);
    if (byte & ((1 << pad_bits) - 1)) {
      throw Error(ErrorCode::NonzeroPadding, "padding bits must be zero", last);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw Error(ErrorCode::OrderTooLarge,
                "order " + std::to_string(n) + " exceeds single-byte graph6");
  }
  std::string out(1 + edge_bytes(n), static_cast<char>(kBias));
  out[0] = static_cast<char>(n + kBias);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.has_edge(i, j)) {
        out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
      }
    }
  }
  return out;
}

void read_graph6_stream(std::istream& in,
                        const std::function<void(const Graph&, std::size_t)>& sink) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.starts_with(">>")) continue;
    sink(parse_graph6(line), number);
  }
}

}  // namespace specbound
