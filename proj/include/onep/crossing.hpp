#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "onep/graph.hpp"
#include "onep/one_planar.hpp"

namespace onep {

// Crossing set for a good drawing: unordered pairs of independent edges, each
// pair at most once, but an edge may be crossed several times. Edges crossed
// at least twice carry the order of their crossing partners, listed while
// travelling from the smaller endpoint to the larger.
struct MultiCrossingPlan {
  std::vector<std::pair<Edge, Edge>> pairs;
  std::vector<std::pair<Edge, std::vector<Edge>>> orders;

  bool operator==(const MultiCrossingPlan&) const = default;
};

MultiCrossingPlan normalize_multi_plan(const MultiCrossingPlan& plan);

// Each edge crossed t times becomes a path through its t crossing vertices in
// the stated order; |V| grows by |pairs| and |E| by 2|pairs|. Unlike the
// single-crossing planarize, two crossing vertices can end up adjacent (when
// consecutive on one edge). Throws std::invalid_argument on invalid plans:
// unknown or adjacent edges, a repeated pair, or an order set that does not
// cover exactly the edges with two or more crossings.
Planarization planarize_multi(const Graph& g, const MultiCrossingPlan& plan);

struct CrResult {
  std::optional<int> value;  // present iff lower_bound == upper_bound
  int lower_bound = 0;
  std::optional<int> upper_bound;  // absent = unbounded
  std::optional<MultiCrossingPlan> witness;
  SearchStats stats;
};

// Exact crossing number by iterative deepening: level k tries every set of k
// crossing pairs (in canonical order) and every per-edge crossing order until
// some planarization is planar. Levels that cannot planarize by edge count
// are skipped as vacuously exhausted. Stops after max_k levels or when the
// budget runs out; lower_bound always counts the fully exhausted levels. The
// witness is the canonically smallest accepting plan.
CrResult crossing_number(const Graph& g, int max_k, const SearchBudget& budget = {});

}  // namespace onep
