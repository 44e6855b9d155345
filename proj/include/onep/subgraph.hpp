#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "onep/graph.hpp"

namespace onep {

// True iff there is an injective vertex map from pattern into g carrying
// every pattern edge to a g edge (not necessarily induced, not spanning).
bool contains_subgraph(const Graph& g, const Graph& pattern);

// The map itself (pattern vertex -> g vertex), if one exists.
std::optional<std::vector<int>> find_subgraph_map(const Graph& g, const Graph& pattern);

// Canonical adjacency code: the lexicographically smallest upper-triangle
// bit string over all relabelings (restricted to color-refinement classes).
// Requires n <= 11 so the code fits one word; throws otherwise.
uint64_t canonical_code(const Graph& g);

// The relabeled copy realizing canonical_code.
Graph canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

// All 2^C(n,2) labeled graphs on n vertices, n <= 6.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn);

// One representative per isomorphism class, n <= 6; sorted by edge count
// then canonical code. Class counts: 1, 2, 4, 11, 34, 156 for n = 1..6.
std::vector<Graph> enumerate_graphs(int n);

// Isomorphism classes on n <= 8 vertices with at most max_edges edges,
// generated by incremental edge addition with canonical deduplication.
std::vector<Graph> enumerate_graphs_max_edges(int n, int max_edges);

}  // namespace onep
