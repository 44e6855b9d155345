#pragma once

#include <string>
#include <vector>

#include "onep/codec.hpp"
#include "onep/crossing.hpp"
#include "onep/join.hpp"
#include "onep/one_planar.hpp"
#include "onep/planarity.hpp"

namespace onep {

// JSON text for drawings and results. Output is deterministic: object keys
// are sorted and timings stay out unless with_timing is set, so runs with
// equal node budgets serialize to identical bytes. Decoders throw
// codec_error on malformed input.

// {"rotation": {"v": [cyclic neighbor order]}, "outer_face": [face walk]}
std::string embedding_to_json(const PlaneEmbedding& emb);
PlaneEmbedding embedding_from_json(const std::string& text);

// {"c": int, "embedding": {...}, "plan": [[[u,v],[x,y]], ...]}
std::string witness_to_json(const OnePlanarWitness& w);
OnePlanarWitness witness_from_json(const std::string& text);

std::string verdict_to_json(const Verdict& v, bool with_timing = false);
std::string cr_result_to_json(const CrResult& r, bool with_timing = false);
std::string join_decision_to_json(const JoinDecision& d, bool with_timing = false);
std::string condition_reports_to_json(const std::vector<ConditionReport>& reports);

// DOT rendering of the graph itself or of its planarization under a plan;
// crossing vertices come out as boxes.
std::string to_dot(const Graph& g);
std::string to_dot(const Graph& g, const CrossingPlan& plan);
std::string to_dot(const Graph& g, const MultiCrossingPlan& plan);

}  // namespace onep
