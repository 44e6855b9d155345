#include <random>

#include "doctest.h"
#include "onep/graph.hpp"
#include "onep/subgraph.hpp"

using namespace onep;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges) edges.push_back(make_edge(perm[u], perm[v]));
  return make_graph(g.n, std::move(edges));
}

}  // namespace

TEST_SUITE("subgraph") {

TEST_CASE("containment basics") {
  const Graph k4 = standard_graph(StandardKind::complete, 4);
  const Graph c4 = standard_graph(StandardKind::cycle, 4);
  const Graph c3 = standard_graph(StandardKind::cycle, 3);
  const Graph p3 = standard_graph(StandardKind::path, 3);
  CHECK(contains_subgraph(k4, c3));
  CHECK(!contains_subgraph(c4, c3));
  const Graph diamond = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(contains_subgraph(diamond, p3));
  CHECK(contains_subgraph(diamond, c4));
  CHECK(!contains_subgraph(diamond, k4));
  // smaller into larger only
  CHECK(!contains_subgraph(c3, c4));
  // map is edge-preserving
  const auto map = find_subgraph_map(k4, c3);
  REQUIRE(map.has_value());
  for (const auto& [u, v] : c3.edges) CHECK(k4.has_edge((*map)[u], (*map)[v]));
}

TEST_CASE("containment is reflexive and transitive on samples") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) edges.emplace_back(u, v);
    const Graph g = make_graph(n, edges);
    CHECK(contains_subgraph(g, g));
    // drop one edge: still contained
    if (!g.edges.empty()) {
      auto fewer = g.edges;
      fewer.erase(fewer.begin() + static_cast<long>(rng() % fewer.size()));
      CHECK(contains_subgraph(g, make_graph(n, fewer)));
    }
  }
}

TEST_CASE("canonical code identifies isomorphic graphs") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3) edges.emplace_back(u, v);
    const Graph g = make_graph(n, edges);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabel(g, perm);
    CHECK(canonical_code(g) == canonical_code(h));
    CHECK(is_isomorphic(g, h));
    CHECK(canonical_form(g) == canonical_form(h));
  }
  CHECK(!is_isomorphic(standard_graph(StandardKind::path, 4),
                       make_graph(4, {{0, 1}, {0, 2}, {0, 3}})));
}

TEST_CASE("isomorphism class counts for small n") {
  CHECK(enumerate_graphs(1).size() == 1);
  CHECK(enumerate_graphs(2).size() == 2);
  CHECK(enumerate_graphs(3).size() == 4);
  CHECK(enumerate_graphs(4).size() == 11);
  CHECK(enumerate_graphs(5).size() == 34);
  CHECK(enumerate_graphs(6).size() == 156);
}

TEST_CASE("bounded enumeration matches full enumeration") {
  const auto full = enumerate_graphs(6);
  int with_few_edges = 0;
  for (const auto& g : full)
    if (g.edge_count() <= 5) ++with_few_edges;
  const auto bounded = enumerate_graphs_max_edges(6, 5);
  CHECK(static_cast<int>(bounded.size()) == with_few_edges);
  for (const auto& g : bounded) CHECK(g.edge_count() <= 5);
}

}  // TEST_SUITE
