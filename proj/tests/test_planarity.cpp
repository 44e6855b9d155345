#include <random>

#include "doctest.h"
#include "onep/graph.hpp"
#include "onep/planarity.hpp"
#include "onep/subgraph.hpp"

using namespace onep;

TEST_SUITE("planarity") {

TEST_CASE("classics") {
  CHECK(is_planar(standard_graph(StandardKind::complete, 4)).has_value());
  CHECK(!is_planar(standard_graph(StandardKind::complete, 5)).has_value());
  CHECK(!is_planar(complete_bipartite(3, 3)).has_value());
  CHECK(is_planar(complete_bipartite(2, 3)).has_value());
  CHECK(is_planar_boolean(standard_graph(StandardKind::cycle, 8)));
  CHECK(!is_planar_boolean(complete_bipartite(3, 3)));
  // subdividing K5 stays nonplanar and defeats edge-count shortcuts
  const Graph k5sub = make_graph(
      6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
  CHECK(!is_planar_boolean(k5sub));
  CHECK(!is_planar(k5sub).has_value());
}

TEST_CASE("boolean test agrees with embedding test on all 6-vertex graphs") {
  int planar_count = 0;
  for_each_labeled_graph(6, [&](const Graph& g) {
    const bool fast = is_planar_boolean(g);
    const bool emb = is_planar(g).has_value();
    REQUIRE(fast == emb);
    planar_count += fast;
  });
  CHECK(planar_count > 30000);  // most 6-vertex graphs are planar
}

TEST_CASE("boolean test agrees with embedding test on random graphs") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 16);
    const int target = static_cast<int>(rng() % (3 * n));
    std::vector<Edge> edges;
    while (static_cast<int>(edges.size()) < target) {
      const int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u != v) edges.push_back(make_edge(u, v));
    }
    const Graph g = make_graph(n, edges);
    CHECK(is_planar_boolean(g) == is_planar(g).has_value());
  }
}

TEST_CASE("embeddings satisfy Euler and the face contract") {
  for (const auto& g : enumerate_graphs(6)) {
    const auto emb = is_planar(g);
    if (!emb) {
      CHECK(!is_planar_boolean(g));
      continue;
    }
    CHECK(validate_embedding(g, *emb));
    const auto fs = faces(*emb);
    size_t darts = 0;
    for (const auto& f : fs) darts += f.dart_count();
    CHECK(darts == 2 * g.edges.size());
    CHECK(g.n - g.edge_count() + static_cast<int>(fs.size()) == 1 + component_count(g));
  }
}

TEST_CASE("specific face structures") {
  const auto c3 = is_planar(standard_graph(StandardKind::cycle, 3));
  REQUIRE(c3.has_value());
  const auto c3_faces = faces(*c3);
  REQUIRE(c3_faces.size() == 2);
  CHECK(c3_faces[0].verts.size() == 3);
  CHECK(c3_faces[1].verts.size() == 3);

  const auto k4 = is_planar(standard_graph(StandardKind::complete, 4));
  REQUIRE(k4.has_value());
  const auto k4_faces = faces(*k4);
  REQUIRE(k4_faces.size() == 4);
  for (const auto& f : k4_faces) CHECK(f.verts.size() == 3);

  const Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto tree = is_planar(star);
  REQUIRE(tree.has_value());
  const auto tree_faces = faces(*tree);
  REQUIRE(tree_faces.size() == 1);
  CHECK(tree_faces[0].verts.size() == 6);  // every edge walked twice
}

TEST_CASE("planarity is monotone under edge deletion") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 6);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.push_back(make_edge(u, v));
    Graph g = make_graph(n, edges);
    if (!is_planar_boolean(g)) continue;
    while (!g.edges.empty()) {
      auto fewer = g.edges;
      fewer.erase(fewer.begin() + static_cast<long>(rng() % fewer.size()));
      g = make_graph(n, fewer);
      CHECK(is_planar_boolean(g));
    }
  }
}

TEST_CASE("faces of disconnected embeddings") {
  const Graph two_triangles =
      disjoint_union(standard_graph(StandardKind::cycle, 3), standard_graph(StandardKind::cycle, 3));
  const auto emb = is_planar(two_triangles);
  REQUIRE(emb.has_value());
  const auto fs = faces(*emb);
  CHECK(fs.size() == 3);  // 6 - 6 + 3 == 1 + 2
  int shared = -1;
  for (size_t i = 0; i < fs.size(); ++i) {
    bool all = true;
    for (int v = 0; v < 6; ++v) all = all && fs[i].touches(v);
    if (all) shared = static_cast<int>(i);
  }
  REQUIRE(shared >= 0);
  CHECK(fs[shared].segment_starts.size() == 2);
  CHECK(validate_embedding(two_triangles, *emb));

  const Graph with_isolated =
      disjoint_union(standard_graph(StandardKind::cycle, 3), standard_graph(StandardKind::empty, 2));
  const auto emb2 = is_planar(with_isolated);
  REQUIRE(emb2.has_value());
  const auto fs2 = faces(*emb2);
  CHECK(fs2.size() == 2);  // 5 - 3 + 2 == 1 + 3
  CHECK(fs2[0].touches(3));
  CHECK(fs2[0].touches(4));
  CHECK(fs2[0].dart_count() == 3);
  CHECK(validate_embedding(with_isolated, *emb2));

  const Graph edgeless = standard_graph(StandardKind::empty, 4);
  const auto emb3 = is_planar(edgeless);
  REQUIRE(emb3.has_value());
  const auto fs3 = faces(*emb3);
  REQUIRE(fs3.size() == 1);
  CHECK(fs3[0].dart_count() == 0);
  for (int v = 0; v < 4; ++v) CHECK(fs3[0].touches(v));
  CHECK(validate_embedding(edgeless, *emb3));
}

TEST_CASE("common face embeddings across components") {
  const Graph k4 = standard_graph(StandardKind::complete, 4);
  const Graph two_k4 = disjoint_union(k4, k4);

  // expressible: one marked vertex per component
  CHECK(common_face_test(two_k4, {3, 7}));
  const auto ok = embed_with_common_face(two_k4, {3, 7});
  REQUIRE(ok.has_value());
  CHECK(validate_embedding(two_k4, *ok));
  const auto fs = faces(*ok);
  CHECK(fs[ok->outer_face].touches(3));
  CHECK(fs[ok->outer_face].touches(7));

  // the shared face always runs through each component's smallest dart, so a
  // target face avoiding vertex 0 (or 4) cannot be the shared one
  CHECK(common_face_test(two_k4, {1, 2, 3, 5, 6, 7}));
  CHECK(!embed_with_common_face(two_k4, {1, 2, 3, 5, 6, 7}).has_value());
}

TEST_CASE("tampered embeddings are rejected") {
  const Graph k4 = standard_graph(StandardKind::complete, 4);
  auto emb = is_planar(k4);
  REQUIRE(emb.has_value());
  auto bad = *emb;
  bad.outer_face = 99;
  CHECK(!validate_embedding(k4, bad));
  bad = *emb;
  bad.rotation[0] = {1, 2, 2};  // not a permutation of the neighbors
  CHECK(!validate_embedding(k4, bad));
  bad = *emb;
  bad.rotation.pop_back();
  CHECK(!validate_embedding(k4, bad));
}

TEST_CASE("common face and outerplanarity") {
  const Graph c4 = standard_graph(StandardKind::cycle, 4);
  CHECK(common_face_test(c4, {0, 1, 2, 3}));
  const Graph k4 = standard_graph(StandardKind::complete, 4);
  CHECK(!common_face_test(k4, {0, 1, 2, 3}));
  CHECK(common_face_test(k4, {0, 1, 2}));
  CHECK(common_face_test(k4, {1, 2, 3}));
  CHECK(common_face_test(k4, {}));
  CHECK(!common_face_test(standard_graph(StandardKind::complete, 5), {}));

  CHECK(is_outerplanar(c4));
  CHECK(!is_outerplanar(k4));
  CHECK(!is_outerplanar(complete_bipartite(2, 3)));
  CHECK(is_outerplanar(standard_graph(StandardKind::path, 6)));

  const auto emb = embed_with_common_face(k4, {0, 1, 3});
  REQUIRE(emb.has_value());
  CHECK(validate_embedding(k4, *emb));
  const auto fs = faces(*emb);
  const auto& outer = fs[emb->outer_face];
  CHECK(outer.touches(0));
  CHECK(outer.touches(1));
  CHECK(outer.touches(3));
}

}  // TEST_SUITE
