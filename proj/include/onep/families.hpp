#pragma once

#include <optional>
#include <string>
#include <vector>

#include "onep/graph.hpp"
#include "onep/one_planar.hpp"

namespace onep {

// One machine-checkable claim about a family instance.
struct ExpectedProperty {
  enum class Kind {
    edge_count,     // the graph has exactly `count` edges
    verdict,        // is_one_planar answer equals `expect`
    join_verdict,   // is_one_planar of join(graph, partner) equals `expect`
    witness_valid,  // the instance's shipped witness certifies the graph
    join_witness,   // `join_witness` certifies join(graph, partner)
    apex_join,      // construct_apex_drawing from the shipped witness validates
  };
  Kind kind = Kind::edge_count;
  int count = 0;
  std::optional<Graph> partner;
  Answer expect = Answer::yes;
  std::optional<OnePlanarWitness> join_witness;
  std::string description;
};

// A generated graph bundled with its constructive drawing (when one is known)
// and the claims the generators promise about it.
struct FamilyInstance {
  std::string name;
  Graph graph;
  std::optional<OnePlanarWitness> witness;
  std::vector<ExpectedProperty> expected;
};

enum class CheckStatus { pass, fail, inconclusive };

struct PropertyOutcome {
  CheckStatus status = CheckStatus::fail;
  std::string note;
};

// Evaluates one claim; search-backed claims respect the budget and report
// inconclusive when it runs out.
PropertyOutcome check_property(const FamilyInstance& inst, const ExpectedProperty& p,
                               const SearchBudget& budget = {});

// The six connected graphs on four vertices, numbered by descending edge
// count: 1 = K4, 2 = diamond, 3 = paw, 4 = C4, 5 = star, 6 = P4.
// Throws std::invalid_argument outside 1..6.
Graph four_vertex_graph(int i);

// Two paths a_1..a_k, b_1..b_k (n = 2k, k odd >= 3) braided by rungs a_ib_i
// and crossing diagonals a_ib_{i+1}, a_{i+1}b_i, closed by a_kb_k, plus the
// chords a_ja_{j+2}, b_jb_{j+2} for odd j <= k-2. 3n - 5 edges; the shipped
// witness crosses diagonal pairs and leaves the chords on the outer face, so
// the cone construction applies.
FamilyInstance ladder_family(int n);

// Cycle C_n plus all distance-2 chords; 2n edges, n even >= 6. Planar, and
// joining two isolated vertices is still 1-planar (see cycle_square_join).
FamilyInstance cycle_square(int n);

// join(C_n^2, 2 isolated vertices) with a shipped drawing: odd chords inside,
// even chords outside, one new vertex on each side, every chord crossed by
// one edge of the opposite-side vertex. n crossings, 4n edges.
FamilyInstance cycle_square_join(int n);

// Cycle v_1..v_n (n >= 5) with chords v_iv_{i+2} for odd i drawn outside and
// even i drawn inside; 2n - 2 edges. Joining a single edge keeps 1-planarity.
FamilyInstance chorded_cycle(int n);

// Graph expressions: Kn, Cn, Pn, K_{a,b,...}, Cn^2, a count prefix for
// disjoint copies (3P2), 'u' for disjoint union, '+' for join, parentheses.
// Instances whose expression is known 1-planar or not carry that verdict as
// an expected property. Throws std::invalid_argument on a malformed name.
FamilyInstance named(const std::string& name);

// The expressions with recorded verdicts, in registry order.
std::vector<std::string> named_claims();

}  // namespace onep
