#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "onep/graph.hpp"

namespace onep {

// Parse failure; offset is the byte position of the first bad input byte.
struct codec_error : std::runtime_error {
  size_t offset;
  codec_error(const std::string& msg, size_t off)
      : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// Standard graph6 encoding: 6-bit packed upper triangle, column order.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);  // trailing newline tolerated

// {"n": int, "edges": [[u,v], ...]}
std::string to_edge_json(const Graph& g);
Graph from_edge_json(std::string_view text);

// Reads one graph from a file; format chosen by extension (.g6 / .json),
// falling back to sniffing the first byte. Throws codec_error or
// std::runtime_error on IO failure.
Graph load_graph_file(const std::string& path);

}  // namespace onep
