#pragma once

#include <optional>
#include <string>
#include <vector>

#include "onep/graph.hpp"
#include "onep/one_planar.hpp"
#include "onep/planarity.hpp"

namespace onep {

// One of the four maximal pairs of the join characterization: for factors on
// at least 3 vertices each, a join is 1-planar exactly when both factors fit
// inside the two members of some pair (in either order).
struct MajorPair {
  Graph left;
  Graph right;
  std::string name;
};

// The fixed list: [C3 u C3, C3], [C4, C4], [C4, C3], [K_{2,1,1}, P3].
const std::vector<MajorPair>& major_pairs();

// First pair (in the fixed order) whose members contain g and h as subgraphs,
// one each, in either order. Throws std::invalid_argument when a factor has
// fewer than 3 vertices.
std::optional<MajorPair> majorized_by(const Graph& g, const Graph& h);

enum class JoinReason {
  matched_pair,        // fits a major pair, hence 1-planar
  no_major_pair,       // both factors have >= 3 vertices and no pair fits
  size_rule,           // the factor orders alone force a non-1-planar join
  edge_bound,          // a numeric necessary condition fails (edges or degree)
  forbidden_subgraph,  // the large factor contains a forbidden subgraph
  solver,              // settled by the exact search on the join
};

struct JoinDecision {
  Answer answer = Answer::inconclusive;
  JoinReason reason = JoinReason::solver;
  std::string detail;
  std::optional<MajorPair> pair;            // when reason == matched_pair
  std::optional<Verdict> verdict;           // when the exact search ran
  std::optional<OnePlanarWitness> witness;  // for join(g, h) in join labeling
};

// Decides 1-planarity of join(g, h). Both factors on >= 3 vertices: answered
// by the pair characterization (no search). Otherwise the necessary-condition
// battery runs first (cheapest checks first) and the exact solver settles the
// rest within the budget. A witness for a matched pair is only computed when
// want_witness is set; the solver path attaches its witness whenever it finds
// one.
JoinDecision decide_join(const Graph& g, const Graph& h,
                         const SearchBudget& budget = {},
                         bool want_witness = false);

// The small join partners the necessary conditions speak about.
enum class SmallFactor { p1, two_p1, p2 };

enum class ConditionKind {
  degree_bound,
  edge_bound,
  forbidden_subgraph,
  p_square,
  outer_one_planar,
};

// Outcome of a single condition; detail carries the numbers or the embedding
// of the violating subgraph so the claim can be re-checked independently.
struct ConditionReport {
  std::string condition;
  ConditionKind kind = ConditionKind::edge_bound;
  bool holds = true;
  std::string detail;
};

// Conditions a graph g must satisfy for join(g, factor) to be 1-planar, in a
// fixed order: degree bound (not for p1), edge bound, forbidden subgraphs.
// Any failed report certifies the join is not 1-planar. Bounds that presume
// the join has at least 3 vertices hold vacuously below that size.
std::vector<ConditionReport> necessary_conditions(const Graph& g, SmallFactor factor);

// Drawing-relative sufficient condition for 1-planarity of join(g, P1):
// (a) deleting the outer-face vertices of the embedding leaves an outerplanar
// graph, and (b) every inner face sharing an edge with the outer face has no
// more vertices off the outer face than edges shared with it. Faces sharing
// only a vertex with the outer face do not count as exposed. Throws
// std::invalid_argument on an invalid embedding.
ConditionReport p_square_check(const Graph& g, const PlaneEmbedding& emb);

// Witness for join(g, P1) built from a plane embedding that passes
// p_square_check (else std::invalid_argument): the new vertex g.n sits in the
// outer face, reaches outer vertices freely and each remaining vertex by
// crossing a distinct outer-face edge of one face containing it. Backtracks
// over the edge assignments; throws std::runtime_error if none validates.
OnePlanarWitness construct_apex_drawing(const Graph& g, const PlaneEmbedding& emb);

// Same construction on a 1-planar drawing of g given as a witness: the apex
// joins the true vertices only, and the crossed boundary edges must join two
// true vertices (a once-crossed edge cannot absorb a second crossing). The
// outer face is w.planarization_embedding.outer_face. Throws
// std::invalid_argument on an invalid witness, std::runtime_error when no
// assignment reaches every interior true vertex.
OnePlanarWitness construct_apex_drawing(const Graph& g, const OnePlanarWitness& w);

// Sufficient condition: holds iff g is certified outer-1-planar within the
// budget. When it holds, the decision for join(g, P1) is cross-checked and
// reported in detail.
ConditionReport sufficient_outer1p(const Graph& g, const SearchBudget& budget = {});

}  // namespace onep
