#pragma once

#include <string>
#include <utility>
#include <vector>

namespace onep {

// Undirected edge, stored with the smaller endpoint first.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Simple undirected graph on vertices 0..n-1. Immutable after construction:
// build with make_graph (or the generators below) and treat as a value.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;            // sorted, deduplicated, first < second
  std::vector<std::vector<int>> adj;  // sorted neighbor lists

  int edge_count() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;
  int max_degree() const;
  std::vector<int> degree_sequence() const;  // non-increasing

  bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }
};

// Validates endpoints, rejects loops, collapses duplicate edges.
// Throws std::invalid_argument on a loop or out-of-range endpoint.
Graph make_graph(int n, std::vector<Edge> edges);

// Vertex-disjoint copies plus all edges between them; G keeps its labels,
// H's labels are offset by G.n.
Graph join(const Graph& g, const Graph& h);

// Same labeling as join but without the cross edges.
Graph disjoint_union(const Graph& g, const Graph& h);

// k disjoint copies of g.
Graph disjoint_union(int k, const Graph& g);

// Part sizes of a complete multipartite graph, sorted non-increasing.
struct PartitionSpec {
  std::vector<int> parts;
};

// Throws std::invalid_argument if any part is < 1 or the list is empty.
PartitionSpec make_partition(std::vector<int> parts);

// Vertices grouped by part (largest part first); edge iff different parts.
Graph complete_multipartite(const PartitionSpec& spec);
Graph complete_bipartite(int a, int b);

enum class StandardKind { cycle, path, complete, empty };

// C_n / P_n / K_n / nP1. Throws std::invalid_argument for cycle with n < 3
// or n < 1 generally.
Graph standard_graph(StandardKind kind, int n);

int component_count(const Graph& g);
std::vector<int> component_labels(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace onep
