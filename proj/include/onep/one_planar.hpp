#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "onep/graph.hpp"
#include "onep/planarity.hpp"

namespace onep {

// A set of crossings: unordered pairs of independent edges, each edge crossed
// at most once. Edges within a pair and the pairs themselves are kept in
// canonical (sorted) order by normalize_plan.
struct CrossingPlan {
  std::vector<std::pair<Edge, Edge>> pairs;

  bool operator==(const CrossingPlan&) const = default;
};

CrossingPlan normalize_plan(const CrossingPlan& plan);

// Throws std::invalid_argument when a pair references a non-edge, pairs two
// adjacent edges, or uses an edge twice.
void check_plan(const Graph& g, const CrossingPlan& plan);

// The subject graph with each crossing replaced by a degree-4 vertex.
// Vertices 0..n-1 are the original ("true") vertices; pair k of the
// normalized plan becomes vertex n+k.
struct Planarization {
  Graph graph;
  std::vector<char> truth_mark;  // 1 = original vertex, 0 = crossing vertex
  std::vector<std::pair<Edge, Edge>> pairs;
  std::optional<PlaneEmbedding> embedding;
};

Planarization planarize(const Graph& g, const CrossingPlan& plan);

enum class Answer { yes, no, inconclusive };

enum class RefutationKind { none, search_exhausted, edge_bound, forbidden_subgraph };

struct Refutation {
  RefutationKind kind = RefutationKind::none;
  std::string detail;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

struct SearchBudget {
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
};

// Certificate for a yes answer: the plan plus a plane embedding of its
// planarization (in the canonical labeling of planarize).
struct OnePlanarWitness {
  CrossingPlan plan;
  PlaneEmbedding planarization_embedding;
};

struct Verdict {
  Answer answer = Answer::inconclusive;
  std::optional<OnePlanarWitness> witness;
  Refutation refutation;
  SearchStats stats;
};

// Branching order over the edges. Ties and the input case keep the canonical
// edge order, so every setting stays deterministic.
enum class EdgeOrder { degree_desc, degree_asc, input };

// Search knobs, exposed so tests can compare pruned and unpruned runs and
// dense instances can pick a friendlier branching order.
struct SolverOptions {
  bool prune_partial = true;     // planarity of the decided part at branch nodes
  bool prune_edge_count = true;  // crossings-still-needed vs edges-left bound
  EdgeOrder order = EdgeOrder::degree_desc;
};

// Exact 1-planarity decision: branch over each edge staying uncrossed or
// pairing with a later independent edge; a complete plan is accepted iff its
// planarization is planar. Deterministic for a fixed node budget; exceeding
// the wall clock can only yield inconclusive, never flip an answer.
Verdict is_one_planar(const Graph& g, const SearchBudget& budget = {},
                      const SolverOptions& opt = {});

// Same search, but a plan is accepted iff the planarization has an embedding
// with every true vertex on one face; refutes early when 2|E| > 5|V| - 8.
Verdict is_outer_one_planar(const Graph& g, const SearchBudget& budget = {},
                            const SolverOptions& opt = {});

// Independent re-check of a witness: plan validity, the counts
// |V| + c / |E| + 2c, and that the embedding is a valid plane embedding of
// planarize(g, plan). Shares no state with the search.
bool validate_witness(const Graph& g, const OnePlanarWitness& w);

}  // namespace onep
