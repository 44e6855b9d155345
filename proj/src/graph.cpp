#include "onep/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace onep {

namespace {

std::vector<std::vector<int>> build_adjacency(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

}  // namespace

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n || v >= n) return false;
  const Edge e = make_edge(u, v);
  return std::binary_search(edges.begin(), edges.end(), e);
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> seq(n);
  for (int v = 0; v < n; ++v) seq[v] = degree(v);
  std::sort(seq.rbegin(), seq.rend());
  return seq;
}

Graph make_graph(int n, std::vector<Edge> edges) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("graph: endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.adj = build_adjacency(n, g.edges);
  return g;
}

Graph join(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges;
  for (const auto& [u, v] : h.edges) edges.emplace_back(u + g.n, v + g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < h.n; ++v) edges.emplace_back(u, v + g.n);
  return make_graph(g.n + h.n, std::move(edges));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges;
  for (const auto& [u, v] : h.edges) edges.emplace_back(u + g.n, v + g.n);
  return make_graph(g.n + h.n, std::move(edges));
}

Graph disjoint_union(int k, const Graph& g) {
  if (k < 0) throw std::invalid_argument("union: negative copy count");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (const auto& [u, v] : g.edges) edges.emplace_back(u + i * g.n, v + i * g.n);
  return make_graph(k * g.n, std::move(edges));
}

PartitionSpec make_partition(std::vector<int> parts) {
  if (parts.empty()) throw std::invalid_argument("partition: empty");
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("partition: part size < 1");
  std::sort(parts.rbegin(), parts.rend());
  return PartitionSpec{std::move(parts)};
}

Graph complete_multipartite(const PartitionSpec& spec) {
  int n = std::accumulate(spec.parts.begin(), spec.parts.end(), 0);
  std::vector<int> part_of(n);
  int next = 0;
  for (size_t i = 0; i < spec.parts.size(); ++i)
    for (int j = 0; j < spec.parts[i]; ++j) part_of[next++] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return make_graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  return complete_multipartite(make_partition({a, b}));
}

Graph standard_graph(StandardKind kind, int n) {
  if (n < 1) throw std::invalid_argument("standard graph: n < 1");
  std::vector<Edge> edges;
  switch (kind) {
    case StandardKind::cycle:
      if (n < 3) throw std::invalid_argument("cycle: n < 3");
      for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
      break;
    case StandardKind::path:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case StandardKind::complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case StandardKind::empty:
      break;
  }
  return make_graph(n, std::move(edges));
}

std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(g.n, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.adj[u])
        if (label[v] == -1) {
          label[v] = next;
          stack.push_back(v);
        }
    }
    ++next;
  }
  return label;
}

int component_count(const Graph& g) {
  const auto label = component_labels(g);
  return label.empty() ? 0 : 1 + *std::max_element(label.begin(), label.end());
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

}  // namespace onep
