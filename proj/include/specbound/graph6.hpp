#pragma once

#include <functional>
#include <istream>
#include <string>
#include <string_view>

#include "specbound/graph.hpp"

namespace specbound {

// Short-form graph6 only: orders 0..62, one length byte.
constexpr int kMaxGraph6Order = 62;

Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

// Streams a graph6 file line by line: blank lines and lines starting with
// ">>" are skipped. The callback receives the 1-based line number.
void read_graph6_stream(std::istream& in,
                        const std::function<void(const Graph&, std::size_t)>& sink);

}  // namespace specbound
