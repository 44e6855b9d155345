#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "onep/graph.hpp"
#include "onep/join.hpp"
#include "onep/one_planar.hpp"
#include "onep/planarity.hpp"
#include "onep/subgraph.hpp"

using namespace onep;

namespace {

Graph cyc(int n) { return standard_graph(StandardKind::cycle, n); }
Graph path(int n) { return standard_graph(StandardKind::path, n); }
Graph verts(int n) { return standard_graph(StandardKind::empty, n); }
Graph kn(int n) { return standard_graph(StandardKind::complete, n); }

Graph wheel5() {
  return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

Graph cube() {
  return make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7},
                        {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

}  // namespace

TEST_SUITE_BEGIN("join");

TEST_CASE("majorization against the four maximal pairs") {
  REQUIRE(major_pairs().size() == 4);

  auto name_of = [](const Graph& a, const Graph& b) -> std::string {
    auto p = majorized_by(a, b);
    return p ? p->name : "(none)";
  };

  CHECK(name_of(cyc(3), cyc(3)) == "C3 u C3 + C3");
  CHECK(name_of(disjoint_union(cyc(3), cyc(3)), cyc(3)) == "C3 u C3 + C3");
  CHECK(name_of(cyc(3), disjoint_union(cyc(3), cyc(3))) == "C3 u C3 + C3");  // order-free
  CHECK(name_of(cyc(4), cyc(4)) == "C4 + C4");
  CHECK(name_of(cyc(4), path(3)) == "C4 + C4");  // P3 fits C4, found before [C4, C3]
  CHECK(name_of(cyc(4), cyc(3)) == "C4 + C3");
  CHECK(name_of(complete_multipartite(make_partition({2, 1, 1})), path(3)) ==
        "K_{2,1,1} + P3");
  CHECK(name_of(disjoint_union(cyc(3), path(2)), cyc(3)) == "C3 u C3 + C3");

  CHECK(!majorized_by(kn(4), verts(3)).has_value());
  CHECK(!majorized_by(disjoint_union(path(4), verts(1)), cyc(3)).has_value());
  CHECK(!majorized_by(disjoint_union(cyc(3), verts(1)), verts(4)).has_value());
  CHECK(!majorized_by(disjoint_union(path(2), disjoint_union(path(2), path(2))),
                      verts(3)).has_value());

  CHECK_THROWS_AS((void)majorized_by(path(2), cyc(3)), std::invalid_argument);
  CHECK_THROWS_AS((void)majorized_by(cyc(3), verts(2)), std::invalid_argument);
}

TEST_CASE("join decisions for factors on at least 3 vertices") {
  const auto a = decide_join(cyc(5), cyc(4));
  CHECK(a.answer == Answer::no);
  CHECK(a.reason == JoinReason::size_rule);
  CHECK(a.detail.find("K_{5,4}") != std::string::npos);

  const auto b = decide_join(verts(7), cyc(3));
  CHECK(b.answer == Answer::no);
  CHECK(b.reason == JoinReason::size_rule);
  CHECK(b.detail.find("K_{7,3}") != std::string::npos);

  const auto c = decide_join(cyc(4), cyc(4));
  CHECK(c.answer == Answer::yes);
  CHECK(c.reason == JoinReason::matched_pair);
  REQUIRE(c.pair.has_value());
  CHECK(c.pair->name == "C4 + C4");
  CHECK(!c.witness.has_value());  // no drawing unless asked
  CHECK(!c.verdict.has_value());

  const auto d = decide_join(cyc(3), cyc(3), {}, true);
  CHECK(d.answer == Answer::yes);
  REQUIRE(d.witness.has_value());
  CHECK(validate_witness(join(cyc(3), cyc(3)), *d.witness));

  const auto e = decide_join(disjoint_union(cyc(3), verts(1)), verts(4));
  CHECK(e.answer == Answer::no);
  CHECK(e.reason == JoinReason::no_major_pair);

  const auto f = decide_join(disjoint_union(path(2), disjoint_union(path(2), path(2))),
                             verts(3));
  CHECK(f.answer == Answer::no);
  CHECK(f.reason == JoinReason::no_major_pair);

  const auto g = decide_join(disjoint_union(cyc(3), path(2)), cyc(3));
  CHECK(g.answer == Answer::yes);
  CHECK(g.reason == JoinReason::matched_pair);

  const auto h = decide_join(disjoint_union(path(4), verts(1)), cyc(3));
  CHECK(h.answer == Answer::no);
  CHECK(h.reason == JoinReason::no_major_pair);
}

TEST_CASE("necessary conditions for small join partners") {
  // one-vertex partner: just the edge bound
  const auto p1 = necessary_conditions(cyc(5), SmallFactor::p1);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].condition == "|E| <= 3|V| - 4");
  CHECK(p1[0].holds);

  // 27 edges on 10 vertices breaks the bound 3*10 - 4 = 26
  Graph dense = complete_bipartite(5, 5);
  {
    auto es = dense.edges;
    es.push_back({0, 1});
    es.push_back({0, 2});
    dense = make_graph(10, es);
  }
  const auto p1d = necessary_conditions(dense, SmallFactor::p1);
  REQUIRE(p1d.size() == 1);
  CHECK(!p1d[0].holds);
  CHECK(p1d[0].detail.find("27") != std::string::npos);

  // two isolated partners: degree, edge bound, two forbidden subgraphs
  const auto t = necessary_conditions(complete_bipartite(3, 3), SmallFactor::two_p1);
  REQUIRE(t.size() == 4);
  CHECK(t[0].condition == "max degree at most 6");
  CHECK(t[0].holds);
  CHECK(t[1].condition == "|E| <= 2|V|");
  CHECK(t[1].holds);
  CHECK(t[2].condition == "no K_{7,1} subgraph");
  CHECK(t[2].holds);
  CHECK(t[3].condition == "no K_{3,3} subgraph");
  CHECK(!t[3].holds);
  CHECK(t[3].detail.find("K_{3,3,2}") != std::string::npos);

  // edge partner: the longest battery, all passing on C5
  const auto q = necessary_conditions(cyc(5), SmallFactor::p2);
  REQUIRE(q.size() == 6);
  for (const auto& r : q) CHECK(r.holds);
  CHECK(q[4].condition == "no K_{4,2} subgraph");
  CHECK(q[5].condition == "no K_{3,1,1} subgraph");

  // a degree-7 vertex violates both the degree cap and the star condition
  const auto s = necessary_conditions(complete_bipartite(7, 1), SmallFactor::two_p1);
  CHECK(!s[0].holds);
  CHECK(!s[2].holds);

  // bounds are vacuous when the join itself is tiny
  const auto v = necessary_conditions(verts(1), SmallFactor::p1);
  CHECK(v[0].holds);
  CHECK(v[0].detail.find("vacuous") != std::string::npos);
}

TEST_CASE("join decisions with a small factor") {
  const auto a = decide_join(cyc(5), verts(1));  // wheel on 6 vertices, planar
  CHECK(a.answer == Answer::yes);
  CHECK(a.reason == JoinReason::solver);
  REQUIRE(a.witness.has_value());
  CHECK(a.witness->plan.pairs.empty());
  REQUIRE(a.verdict.has_value());
  CHECK(a.verdict->answer == Answer::yes);

  const auto b = decide_join(complete_bipartite(3, 3), verts(2));
  CHECK(b.answer == Answer::no);
  CHECK(b.reason == JoinReason::forbidden_subgraph);
  CHECK(b.detail.find("K_{3,3}") != std::string::npos);

  const auto c = decide_join(verts(1), cyc(5));  // argument order is irrelevant
  CHECK(c.answer == Answer::yes);

  const auto d = decide_join(kn(6), verts(1));  // K7 caught by the edge bound
  CHECK(d.answer == Answer::no);
  CHECK(d.reason == JoinReason::edge_bound);
  CHECK(d.detail.find("|E|") != std::string::npos);

  const auto e = decide_join(complete_bipartite(7, 1), verts(2));
  CHECK(e.answer == Answer::no);
  CHECK(e.reason == JoinReason::edge_bound);  // degree cap fires first
  CHECK(e.detail.find("max degree") != std::string::npos);

  SearchBudget tiny;
  tiny.max_nodes = 1;
  const auto f = decide_join(cyc(5), verts(1), tiny);
  CHECK(f.answer == Answer::inconclusive);
  CHECK(f.reason == JoinReason::solver);

  // both factors tiny: the join is small enough for the search outright
  const auto g = decide_join(path(2), verts(2));
  CHECK(g.answer == Answer::yes);
  CHECK(g.reason == JoinReason::solver);
}

TEST_CASE("pair characterization agrees with the search on 3-vertex factors") {
  const auto classes = enumerate_graphs(3);
  REQUIRE(classes.size() == 4);
  for (const auto& g : classes)
    for (const auto& h : classes) {
      const auto d = decide_join(g, h);
      const auto v = is_one_planar(join(g, h));
      REQUIRE(v.answer != Answer::inconclusive);
      CHECK(d.answer == v.answer);
    }
}

TEST_CASE("exposed-face balance check") {
  const auto c4e = is_planar(cyc(4));
  REQUIRE(c4e.has_value());
  const auto rc4 = p_square_check(cyc(4), *c4e);
  CHECK(rc4.holds);  // every vertex on the outer face

  const auto k4e = is_planar(kn(4));
  REQUIRE(k4e.has_value());
  CHECK(p_square_check(kn(4), *k4e).holds);

  // wheel drawn with the hub inside: each exposed triangle has one interior
  // vertex and one outer edge
  const auto w5 = wheel5();
  const auto w5e = embed_with_common_face(w5, {0, 1, 2, 3});
  REQUIRE(w5e.has_value());
  const auto rw5 = p_square_check(w5, *w5e);
  CHECK(rw5.holds);

  // nested-squares drawing of the cube: each side quad has two interior
  // vertices but shares only one edge with the outer face
  const auto q3 = cube();
  const auto q3e = embed_with_common_face(q3, {0, 1, 2, 3});
  REQUIRE(q3e.has_value());
  const auto rq3 = p_square_check(q3, *q3e);
  CHECK(!rq3.holds);
  CHECK(rq3.detail.find("exposed face") != std::string::npos);

  PlaneEmbedding bad = *c4e;
  bad.outer_face = 99;
  CHECK_THROWS_AS((void)p_square_check(cyc(4), bad), std::invalid_argument);
}

TEST_CASE("apex drawings from plane embeddings") {
  const auto c4e = is_planar(cyc(4));
  REQUIRE(c4e.has_value());
  const auto wc4 = construct_apex_drawing(cyc(4), *c4e);
  CHECK(wc4.plan.pairs.empty());
  CHECK(validate_witness(join(cyc(4), verts(1)), wc4));

  const auto w5 = wheel5();
  const auto w5e = embed_with_common_face(w5, {0, 1, 2, 3});
  REQUIRE(w5e.has_value());
  const auto ww5 = construct_apex_drawing(w5, *w5e);
  CHECK(ww5.plan.pairs.size() == 1);  // one crossing reaches the hub
  CHECK(validate_witness(join(w5, verts(1)), ww5));

  const auto k4e = is_planar(kn(4));
  REQUIRE(k4e.has_value());
  const auto wk4 = construct_apex_drawing(kn(4), *k4e);
  CHECK(wk4.plan.pairs.size() == 1);
  CHECK(validate_witness(join(kn(4), verts(1)), wk4));  // a drawing of K5

  const auto q3 = cube();
  const auto q3e = embed_with_common_face(q3, {0, 1, 2, 3});
  REQUIRE(q3e.has_value());
  CHECK_THROWS_AS((void)construct_apex_drawing(q3, *q3e), std::invalid_argument);
}

TEST_CASE("apex drawings from 1-planar drawings") {
  // an uncrossed drawing passed in witness form behaves like the plane case
  const auto w5 = wheel5();
  const auto w5e = embed_with_common_face(w5, {0, 1, 2, 3});
  REQUIRE(w5e.has_value());
  const OnePlanarWitness plain{CrossingPlan{}, *w5e};
  REQUIRE(validate_witness(w5, plain));
  const auto ww = construct_apex_drawing(w5, plain);
  CHECK(ww.plan.pairs.size() == 1);
  CHECK(validate_witness(join(w5, verts(1)), ww));

  OnePlanarWitness broken = plain;
  broken.plan.pairs.push_back({{0, 1}, {1, 2}});  // adjacent edges cannot cross
  CHECK_THROWS_AS((void)construct_apex_drawing(w5, broken), std::invalid_argument);
}

TEST_CASE("outer-1-planarity as a sufficient condition") {
  const auto a = sufficient_outer1p(cyc(4));
  CHECK(a.holds);
  CHECK(a.detail.find("confirmed 1-planar") != std::string::npos);

  const auto b = sufficient_outer1p(kn(4));  // needs one crossing, still works
  CHECK(b.holds);

  const auto c = sufficient_outer1p(kn(5));  // fails, yet K6 is 1-planar
  CHECK(!c.holds);
  CHECK(c.detail.find("not outer-1-planar") != std::string::npos);
  CHECK(decide_join(kn(5), verts(1)).answer == Answer::yes);
}

TEST_SUITE_END();
