#include <stdexcept>

#include "doctest.h"
#include "onep/families.hpp"
#include "onep/graph.hpp"
#include "onep/join.hpp"
#include "onep/one_planar.hpp"
#include "onep/subgraph.hpp"

using namespace onep;

TEST_SUITE_BEGIN("families");

TEST_CASE("the six connected graphs on four vertices") {
  CHECK(is_isomorphic(four_vertex_graph(1), standard_graph(StandardKind::complete, 4)));
  CHECK(is_isomorphic(four_vertex_graph(2), complete_multipartite(make_partition({2, 1, 1}))));
  CHECK(is_isomorphic(four_vertex_graph(3),
                      make_graph(4, {{1, 2}, {1, 3}, {2, 3}, {0, 1}})));
  CHECK(is_isomorphic(four_vertex_graph(4), standard_graph(StandardKind::cycle, 4)));
  CHECK(is_isomorphic(four_vertex_graph(5), complete_bipartite(3, 1)));
  CHECK(is_isomorphic(four_vertex_graph(6), standard_graph(StandardKind::path, 4)));

  const int expected_edges[] = {6, 5, 4, 4, 3, 3};
  for (int i = 1; i <= 6; ++i) CHECK(four_vertex_graph(i).edge_count() == expected_edges[i - 1]);

  CHECK_THROWS_AS((void)four_vertex_graph(0), std::invalid_argument);
  CHECK_THROWS_AS((void)four_vertex_graph(7), std::invalid_argument);

  // joining a triangle works exactly for the two that fit inside C4
  const Graph c3 = standard_graph(StandardKind::cycle, 3);
  for (int i = 1; i <= 6; ++i) {
    const auto d = decide_join(four_vertex_graph(i), c3);
    CHECK(d.answer == (i == 4 || i == 6 ? Answer::yes : Answer::no));
  }

  // the star case joins into a complete multipartite graph
  CHECK(is_isomorphic(join(four_vertex_graph(5), c3),
                      complete_multipartite(make_partition({3, 1, 1, 1, 1}))));
}

TEST_CASE("ladder family") {
  const auto g6 = ladder_family(6);
  CHECK(g6.graph.n == 6);
  CHECK(g6.graph.edge_count() == 13);  // 3n - 5
  REQUIRE(g6.witness.has_value());
  CHECK(g6.witness->plan.pairs.size() == 2);
  CHECK(validate_witness(g6.graph, *g6.witness));

  const auto g10 = ladder_family(10);
  CHECK(g10.graph.edge_count() == 25);
  REQUIRE(g10.witness.has_value());
  CHECK(g10.witness->plan.pairs.size() == 4);
  CHECK(validate_witness(g10.graph, *g10.witness));

  // the cone construction reaches the inner vertices across the boundary
  const auto apex10 = construct_apex_drawing(g10.graph, *g10.witness);
  CHECK(validate_witness(join(g10.graph, standard_graph(StandardKind::empty, 1)), apex10));
  CHECK(apex10.plan.pairs.size() == 8);  // 4 original + 4 new crossings

  for (const auto& p : g10.expected)
    CHECK(check_property(g10, p).status == CheckStatus::pass);

  CHECK_THROWS_AS((void)ladder_family(8), std::invalid_argument);   // k even
  CHECK_THROWS_AS((void)ladder_family(5), std::invalid_argument);   // odd n
  CHECK_THROWS_AS((void)ladder_family(2), std::invalid_argument);   // k too small
}

TEST_CASE("cycle squares") {
  const auto c6 = cycle_square(6);
  CHECK(c6.graph.edge_count() == 12);
  REQUIRE(c6.witness.has_value());
  CHECK(c6.witness->plan.pairs.empty());
  CHECK(validate_witness(c6.graph, *c6.witness));

  const auto c8 = cycle_square(8);
  CHECK(c8.graph.edge_count() == 16);
  for (const auto& p : c8.expected)
    CHECK(check_property(c8, p).status == CheckStatus::pass);

  CHECK_THROWS_AS((void)cycle_square(7), std::invalid_argument);
  CHECK_THROWS_AS((void)cycle_square(4), std::invalid_argument);
}

TEST_CASE("cycle square joined with two vertices") {
  const auto j8 = cycle_square_join(8);
  CHECK(j8.graph.n == 10);
  CHECK(j8.graph.edge_count() == 32);  // 4|V| - 8: tight against the global bound
  REQUIRE(j8.witness.has_value());
  CHECK(j8.witness->plan.pairs.size() == 8);
  CHECK(validate_witness(j8.graph, *j8.witness));

  const auto j6 = cycle_square_join(6);
  CHECK(j6.graph.edge_count() == 24);
  REQUIRE(j6.witness.has_value());
  CHECK(j6.witness->plan.pairs.size() == 6);
  CHECK(validate_witness(j6.graph, *j6.witness));

  const auto j10 = cycle_square_join(10);
  CHECK(validate_witness(j10.graph, *j10.witness));
}

TEST_CASE("chorded cycles") {
  const auto c5 = chorded_cycle(5);
  CHECK(c5.graph.edge_count() == 8);  // 2n - 2
  REQUIRE(c5.witness.has_value());
  CHECK(validate_witness(c5.graph, *c5.witness));

  const auto c6 = chorded_cycle(6);
  CHECK(c6.graph.edge_count() == 10);
  CHECK(validate_witness(c6.graph, *c6.witness));

  const auto c7 = chorded_cycle(7);
  CHECK(c7.graph.edge_count() == 12);

  // join with a single edge stays 1-planar (exact search)
  const auto join5 = is_one_planar(join(c5.graph, standard_graph(StandardKind::path, 2)));
  CHECK(join5.answer == Answer::yes);

  CHECK_THROWS_AS((void)chorded_cycle(4), std::invalid_argument);
}

TEST_CASE("name registry and expression parsing") {
  const auto k6 = named("K6");
  CHECK(k6.graph == standard_graph(StandardKind::complete, 6));
  REQUIRE(k6.expected.size() == 1);
  CHECK(k6.expected[0].kind == ExpectedProperty::Kind::verdict);
  CHECK(k6.expected[0].expect == Answer::yes);

  // part order never matters for the recorded claims
  const auto k36 = named("K_{3,6}");
  REQUIRE(k36.expected.size() == 1);
  CHECK(k36.expected[0].expect == Answer::yes);

  const auto neg = named("(C3uP1)+4P1");
  CHECK(neg.graph.n == 8);
  CHECK(neg.graph.edge_count() == 19);
  REQUIRE(neg.expected.size() == 1);
  CHECK(neg.expected[0].expect == Answer::no);

  const auto tp = named("3P2+3P1");
  CHECK(tp.graph.n == 9);
  CHECK(tp.graph.edge_count() == 21);
  REQUIRE(tp.expected.size() == 1);
  CHECK(tp.expected[0].expect == Answer::no);

  const auto drawn = named("C8^2+2P1");
  REQUIRE(drawn.witness.has_value());
  CHECK(validate_witness(drawn.graph, *drawn.witness));
  CHECK(drawn.expected.size() == 2);  // verdict claim + shipped witness

  const auto plain = named("2C3");  // parseable, no recorded verdict
  CHECK(plain.graph.n == 6);
  CHECK(plain.graph.edge_count() == 6);
  CHECK(plain.expected.empty());

  CHECK(named("K_{2,1,1}+P3").graph.n == 7);
  CHECK(named(" ( C3 u C3 ) + C3 ").graph.edge_count() == 27);  // whitespace is free

  CHECK_THROWS_AS((void)named("Q7"), std::invalid_argument);
  CHECK_THROWS_AS((void)named("K_{}"), std::invalid_argument);
  CHECK_THROWS_AS((void)named(""), std::invalid_argument);
  CHECK_THROWS_AS((void)named("C3+"), std::invalid_argument);
  CHECK_THROWS_AS((void)named("C3)"), std::invalid_argument);
  CHECK_THROWS_AS((void)named("0P3"), std::invalid_argument);

  CHECK(named_claims().size() == 27);
  for (const auto& expr : named_claims()) {
    const auto inst = named(expr);
    CHECK(!inst.expected.empty());
  }
}

TEST_CASE("property evaluation outcomes") {
  const auto k6 = named("K6");
  CHECK(check_property(k6, k6.expected[0]).status == CheckStatus::pass);

  SearchBudget tiny;
  tiny.max_nodes = 2;
  const auto k54 = named("K_{5,4}");
  CHECK(check_property(k54, k54.expected[0], tiny).status == CheckStatus::inconclusive);

  ExpectedProperty wrong;
  wrong.kind = ExpectedProperty::Kind::edge_count;
  wrong.count = 999;
  CHECK(check_property(k6, wrong).status == CheckStatus::fail);

  ExpectedProperty missing;
  missing.kind = ExpectedProperty::Kind::witness_valid;
  CHECK(check_property(k6, missing).status == CheckStatus::fail);  // no witness shipped
}

TEST_SUITE_END();
