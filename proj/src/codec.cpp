#include "onep/codec.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace onep {

namespace {

// Bit index of pair (i,j), i < j, in graph6 column order.
size_t g6_bit_index(int i, int j) {
  return static_cast<size_t>(j) * (j - 1) / 2 + i;
}

std::string_view trim_trailing(std::string_view text) {
  while (!text.empty()) {
    const char c = text.back();
    if (c == '\n' || c == '\r' || c == ' ' || c == '\t')
      text.remove_suffix(1);
    else
      break;
  }
  return text;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  if (g.n <= 62) {
    out.push_back(static_cast<char>(g.n + 63));
  } else if (g.n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((g.n & 63) + 63));
  } else {
    throw std::invalid_argument("graph6: graph too large");
  }
  const size_t nbits = static_cast<size_t>(g.n) * (g.n - 1) / 2;
  std::vector<char> bits(nbits, 0);
  for (const auto& [u, v] : g.edges) bits[g6_bit_index(u, v)] = 1;
  for (size_t base = 0; base < nbits; base += 6) {
    int group = 0;
    for (size_t k = 0; k < 6; ++k) {
      group <<= 1;
      if (base + k < nbits && bits[base + k]) group |= 1;
    }
    out.push_back(static_cast<char>(group + 63));
  }
  return out;
}

Graph from_graph6(std::string_view raw) {
  const std::string_view text = trim_trailing(raw);
  if (text.empty()) throw codec_error("graph6: empty input", 0);
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw codec_error("graph6: truncated input", pos);
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw codec_error("graph6: byte out of range", pos);
    ++pos;
    return c;
  };
  int n;
  int first = next();
  if (first == 126) {
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126)
      throw codec_error("graph6: graph too large", pos);
    const int a = next() - 63, b = next() - 63, c = next() - 63;
    n = (a << 12) | (b << 6) | c;
  } else {
    n = first - 63;
  }
  const size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
  const size_t need = (nbits + 5) / 6;
  if (text.size() - pos > need)
    throw codec_error("graph6: trailing data", pos + need);
  std::vector<char> bits(nbits, 0);
  for (size_t base = 0; base < nbits; base += 6) {
    const int group = next() - 63;
    for (size_t k = 0; k < 6 && base + k < nbits; ++k)
      bits[base + k] = (group >> (5 - k)) & 1;
  }
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits[g6_bit_index(i, j)]) edges.emplace_back(i, j);
  return make_graph(n, std::move(edges));
}

std::string to_edge_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges) j["edges"].push_back({u, v});
  return j.dump();
}

Graph from_edge_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw codec_error(std::string("edge-json: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
      !j["n"].is_number_integer() || !j["edges"].is_array())
    throw codec_error("edge-json: expected {\"n\": int, \"edges\": [[u,v],...]}", 0);
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw codec_error("edge-json: bad edge entry", 0);
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return make_graph(j["n"].get<int>(), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw codec_error(std::string("edge-json: ") + e.what(), 0);
  }
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const bool looks_json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  if (looks_json || (!text.empty() && (text[0] == '{' || text[0] == '[')))
    return from_edge_json(text);
  return from_graph6(text);
}

}  // namespace onep
