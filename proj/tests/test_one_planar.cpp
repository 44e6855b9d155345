#include <random>
#include <stdexcept>

#include "doctest.h"
#include "onep/graph.hpp"
#include "onep/one_planar.hpp"
#include "onep/planarity.hpp"
#include "onep/subgraph.hpp"

using namespace onep;

TEST_SUITE("one_planar") {

TEST_CASE("planarize basics") {
  const Graph c4 = standard_graph(StandardKind::cycle, 4);
  const auto pz = planarize(c4, {});
  CHECK(pz.graph == c4);
  CHECK(pz.pairs.empty());

  const Graph k4 = standard_graph(StandardKind::complete, 4);
  const auto pk = planarize(k4, {{{make_edge(0, 1), make_edge(2, 3)}}});
  CHECK(pk.graph.n == 5);
  CHECK(pk.graph.edge_count() == 8);
  CHECK(pk.graph.adj[4].size() == 4);
  CHECK(!pk.graph.has_edge(0, 1));
  CHECK(!pk.graph.has_edge(2, 3));
  CHECK(pk.graph.has_edge(0, 4));
  CHECK(pk.graph.has_edge(3, 4));
  CHECK(pk.truth_mark[3] == 1);
  CHECK(pk.truth_mark[4] == 0);
}

TEST_CASE("planarize labeling is canonical in the pairs") {
  const Graph k6 = standard_graph(StandardKind::complete, 6);
  const CrossingPlan a{{{make_edge(0, 1), make_edge(2, 3)}, {make_edge(0, 4), make_edge(3, 5)}}};
  const CrossingPlan b{{{make_edge(3, 5), make_edge(4, 0)}, {make_edge(2, 3), make_edge(1, 0)}}};
  CHECK(planarize(k6, a).graph == planarize(k6, b).graph);
}

TEST_CASE("plan validation") {
  const Graph c4 = standard_graph(StandardKind::cycle, 4);
  CHECK_THROWS_AS(check_plan(c4, {{{make_edge(0, 2), make_edge(1, 3)}}}), std::invalid_argument);
  CHECK_THROWS_AS(check_plan(c4, {{{make_edge(0, 1), make_edge(1, 2)}}}), std::invalid_argument);
  const Graph k6 = standard_graph(StandardKind::complete, 6);
  CHECK_THROWS_AS(
      check_plan(k6, {{{make_edge(0, 1), make_edge(2, 3)}, {make_edge(0, 1), make_edge(4, 5)}}}),
      std::invalid_argument);
  CHECK_NOTHROW(check_plan(k6, {{{make_edge(0, 1), make_edge(2, 3)}}}));
}

TEST_CASE("small classics") {
  const auto k5 = is_one_planar(standard_graph(StandardKind::complete, 5));
  REQUIRE(k5.answer == Answer::yes);
  REQUIRE(k5.witness.has_value());
  CHECK(k5.witness->plan.pairs.size() == 1);
  CHECK(validate_witness(standard_graph(StandardKind::complete, 5), *k5.witness));

  const auto k6 = is_one_planar(standard_graph(StandardKind::complete, 6));
  REQUIRE(k6.answer == Answer::yes);
  CHECK(k6.witness->plan.pairs.size() == 3);
  CHECK(validate_witness(standard_graph(StandardKind::complete, 6), *k6.witness));

  const auto k7 = is_one_planar(standard_graph(StandardKind::complete, 7));
  CHECK(k7.answer == Answer::no);
  CHECK(k7.refutation.kind == RefutationKind::edge_bound);
  CHECK(k7.stats.nodes == 0);

  const auto pl = is_one_planar(standard_graph(StandardKind::cycle, 8));
  REQUIRE(pl.answer == Answer::yes);
  CHECK(pl.witness->plan.pairs.empty());
}

TEST_CASE("complete bipartite and tripartite landmarks") {
  const auto k44 = is_one_planar(complete_bipartite(4, 4));
  REQUIRE(k44.answer == Answer::yes);
  CHECK(validate_witness(complete_bipartite(4, 4), *k44.witness));

  const auto k431 = is_one_planar(complete_multipartite(make_partition({4, 3, 1})));
  CHECK(k431.answer == Answer::no);
  CHECK(k431.refutation.kind == RefutationKind::search_exhausted);
}

TEST_CASE("witnesses are deterministic") {
  const Graph k5 = standard_graph(StandardKind::complete, 5);
  const auto a = is_one_planar(k5);
  const auto b = is_one_planar(k5);
  REQUIRE(a.answer == Answer::yes);
  CHECK(a.witness->plan == b.witness->plan);
  CHECK(a.witness->planarization_embedding.rotation == b.witness->planarization_embedding.rotation);
  CHECK(a.stats.nodes == b.stats.nodes);
}

TEST_CASE("budget exhaustion is inconclusive, never wrong") {
  const Graph k44 = complete_bipartite(4, 4);
  SearchBudget tiny;
  tiny.max_nodes = 5;
  const auto v = is_one_planar(k44, tiny);
  CHECK(v.answer == Answer::inconclusive);
  CHECK(!v.witness.has_value());
  CHECK(v.stats.nodes == 6);  // budget trips on the node after the limit
  CHECK_THROWS_AS(is_one_planar(k44, SearchBudget{0, 1.0}), std::invalid_argument);
}

TEST_CASE("witness tampering is caught") {
  const Graph k5 = standard_graph(StandardKind::complete, 5);
  const auto v = is_one_planar(k5);
  REQUIRE(v.answer == Answer::yes);
  CHECK(validate_witness(k5, *v.witness));
  // empty plan: K5 itself is not planar, so the embedding cannot match
  CHECK(!validate_witness(k5, OnePlanarWitness{{}, v.witness->planarization_embedding}));
  auto wrong_plan = *v.witness;
  wrong_plan.plan.pairs.push_back({make_edge(0, 1), make_edge(0, 2)});
  CHECK(!validate_witness(k5, wrong_plan));
  auto wrong_emb = *v.witness;
  wrong_emb.planarization_embedding.outer_face = 1000;
  CHECK(!validate_witness(k5, wrong_emb));
  wrong_emb = *v.witness;
  wrong_emb.planarization_embedding.rotation[0].clear();
  CHECK(!validate_witness(k5, wrong_emb));
}

TEST_CASE("deletion monotonicity on random graphs") {
  std::mt19937 rng(41);
  int shrunk = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 3);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2 == 0) edges.push_back(make_edge(u, v));
    Graph g = make_graph(n, edges);
    if (is_one_planar(g).answer != Answer::yes) continue;
    for (int round = 0; round < 3 && !g.edges.empty(); ++round) {
      auto fewer = g.edges;
      fewer.erase(fewer.begin() + static_cast<long>(rng() % fewer.size()));
      g = make_graph(n, fewer);
      CHECK(is_one_planar(g).answer == Answer::yes);
      ++shrunk;
    }
  }
  CHECK(shrunk > 20);
}

TEST_CASE("outer variant") {
  const auto c4 = is_outer_one_planar(standard_graph(StandardKind::cycle, 4));
  REQUIRE(c4.answer == Answer::yes);
  CHECK(c4.witness->plan.pairs.empty());

  const Graph k4 = standard_graph(StandardKind::complete, 4);
  const auto vk4 = is_outer_one_planar(k4);
  REQUIRE(vk4.answer == Answer::yes);
  CHECK(vk4.witness->plan.pairs.size() == 1);
  CHECK(validate_witness(k4, *vk4.witness));
  {
    const auto pz = planarize(k4, vk4.witness->plan);
    std::vector<int> trues;
    for (int v = 0; v < pz.graph.n; ++v)
      if (pz.truth_mark[v]) trues.push_back(v);
    CHECK(common_face_test(pz.graph, trues));
    const auto fs = faces(vk4.witness->planarization_embedding);
    const auto& outer = fs[vk4.witness->planarization_embedding.outer_face];
    for (int v : trues) CHECK(outer.touches(v));
  }

  const auto k5 = is_outer_one_planar(standard_graph(StandardKind::complete, 5));
  CHECK(k5.answer == Answer::no);
  CHECK(k5.refutation.kind == RefutationKind::edge_bound);

  const auto k23 = is_outer_one_planar(complete_bipartite(2, 3));
  REQUIRE(k23.answer == Answer::yes);
  CHECK(k23.witness->plan.pairs.size() == 1);  // planar but not outerplanar

  // outer-1-planar is strictly stronger than 1-planar
  const auto k6_outer = is_outer_one_planar(standard_graph(StandardKind::complete, 6));
  CHECK(k6_outer.answer == Answer::no);
}

TEST_CASE("pruning does not change answers on small graphs") {
  const SolverOptions unpruned{false, false};
  std::mt19937 rng(59);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 != 0) edges.push_back(make_edge(u, v));
    if (edges.size() > 8) continue;
    const Graph g = make_graph(n, edges);
    const auto fast = is_one_planar(g);
    const auto slow = is_one_planar(g, {}, unpruned);
    CHECK(fast.answer == slow.answer);
    const auto fast_o = is_outer_one_planar(g);
    const auto slow_o = is_outer_one_planar(g, {}, unpruned);
    CHECK(fast_o.answer == slow_o.answer);
  }
}

}  // TEST_SUITE
