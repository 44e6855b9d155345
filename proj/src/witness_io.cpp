#include "onep/witness_io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace onep {

namespace {

using nlohmann::json;

json edge_json(const Edge& e) { return json::array({e.first, e.second}); }

Edge edge_from(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw codec_error(std::string(what) + ": expected [u, v]", 0);
  const int u = j[0].get<int>(), v = j[1].get<int>();
  if (u == v || u < 0 || v < 0)
    throw codec_error(std::string(what) + ": bad edge endpoints", 0);
  return make_edge(u, v);
}

json embedding_json(const PlaneEmbedding& emb) {
  json rot = json::object();
  for (size_t v = 0; v < emb.rotation.size(); ++v)
    rot[std::to_string(v)] = emb.rotation[v];
  const auto fs = faces(emb);
  if (emb.outer_face < 0 || emb.outer_face >= static_cast<int>(fs.size()))
    throw std::invalid_argument("embedding: outer face index out of range");
  json j;
  j["rotation"] = std::move(rot);
  j["outer_face"] = fs[emb.outer_face].verts;
  return j;
}

PlaneEmbedding embedding_from(const json& j) {
  if (!j.is_object() || !j.contains("rotation") || !j.contains("outer_face") ||
      !j["rotation"].is_object() || !j["outer_face"].is_array())
    throw codec_error("embedding: expected {\"rotation\": {...}, \"outer_face\": [...]}", 0);
  const json& rot = j["rotation"];
  const int n = static_cast<int>(rot.size());
  PlaneEmbedding emb;
  emb.rotation.assign(n, {});
  for (auto it = rot.begin(); it != rot.end(); ++it) {
    int v = -1;
    try {
      size_t used = 0;
      v = std::stoi(it.key(), &used);
      if (used != it.key().size()) v = -1;
    } catch (...) {
      v = -1;
    }
    // canonical keys: together with the object size this forces 0..n-1, once each
    if (v < 0 || v >= n || it.key() != std::to_string(v))
      throw codec_error("embedding: rotation keys must be \"0\" .. \"" + std::to_string(n - 1) + "\"", 0);
    if (!it.value().is_array())
      throw codec_error("embedding: rotation of " + it.key() + " is not a list", 0);
    for (const auto& x : it.value()) {
      if (!x.is_number_integer())
        throw codec_error("embedding: bad neighbor under " + it.key(), 0);
      emb.rotation[v].push_back(x.get<int>());
    }
  }
  // what faces() assumes of a rotation system: simple lists with mirrored darts
  for (int v = 0; v < n; ++v) {
    auto nb = emb.rotation[v];
    std::sort(nb.begin(), nb.end());
    for (size_t i = 0; i < nb.size(); ++i)
      if (nb[i] < 0 || nb[i] >= n || nb[i] == v || (i && nb[i - 1] == nb[i]))
        throw codec_error("embedding: rotation of " + std::to_string(v) + " is not a neighbor list", 0);
  }
  for (int v = 0; v < n; ++v)
    for (int u : emb.rotation[v]) {
      const auto& o = emb.rotation[u];
      if (std::find(o.begin(), o.end(), v) == o.end())
        throw codec_error("embedding: dart " + std::to_string(v) + "->" + std::to_string(u) +
                              " has no mirror",
                          0);
    }
  std::vector<int> walk;
  for (const auto& x : j["outer_face"]) {
    if (!x.is_number_integer()) throw codec_error("embedding: bad outer face entry", 0);
    walk.push_back(x.get<int>());
  }
  const auto fs = faces(emb);
  emb.outer_face = -1;
  for (size_t i = 0; i < fs.size(); ++i)
    if (fs[i].verts == walk) {
      emb.outer_face = static_cast<int>(i);
      break;
    }
  if (emb.outer_face < 0)
    throw codec_error("embedding: outer face walk does not match any face", 0);
  return emb;
}

json witness_json(const OnePlanarWitness& w) {
  json j;
  j["c"] = w.plan.pairs.size();
  j["embedding"] = embedding_json(w.planarization_embedding);
  json plan = json::array();
  for (const auto& [e, f] : w.plan.pairs)
    plan.push_back(json::array({edge_json(e), edge_json(f)}));
  j["plan"] = std::move(plan);
  return j;
}

OnePlanarWitness witness_from(const json& j) {
  if (!j.is_object() || !j.contains("plan") || !j.contains("embedding") || !j.contains("c") ||
      !j["plan"].is_array() || !j["c"].is_number_integer())
    throw codec_error("witness: expected {\"plan\": [...], \"embedding\": {...}, \"c\": int}", 0);
  OnePlanarWitness w;
  for (const auto& p : j["plan"]) {
    if (!p.is_array() || p.size() != 2)
      throw codec_error("witness: plan entries are pairs of edges", 0);
    w.plan.pairs.push_back({edge_from(p[0], "witness plan"), edge_from(p[1], "witness plan")});
  }
  w.plan = normalize_plan(w.plan);
  if (j["c"].get<int>() != static_cast<int>(w.plan.pairs.size()))
    throw codec_error("witness: c does not match the plan size", 0);
  w.planarization_embedding = embedding_from(j["embedding"]);
  return w;
}

json stats_json(const SearchStats& s, bool with_timing) {
  json j;
  j["nodes"] = s.nodes;
  j["seconds"] = with_timing ? json(s.seconds) : json(nullptr);
  return j;
}

const char* answer_word(Answer a) {
  switch (a) {
    case Answer::yes: return "one_planar";
    case Answer::no: return "not_one_planar";
    default: return "inconclusive";
  }
}

const char* refutation_word(RefutationKind k) {
  switch (k) {
    case RefutationKind::search_exhausted: return "search_exhausted";
    case RefutationKind::edge_bound: return "edge_bound";
    case RefutationKind::forbidden_subgraph: return "forbidden_subgraph";
    default: return "none";
  }
}

const char* reason_word(JoinReason r) {
  switch (r) {
    case JoinReason::matched_pair: return "matched_pair";
    case JoinReason::no_major_pair: return "no_major_pair";
    case JoinReason::size_rule: return "size_rule";
    case JoinReason::edge_bound: return "edge_bound";
    case JoinReason::forbidden_subgraph: return "forbidden_subgraph";
    default: return "solver";
  }
}

const char* kind_word(ConditionKind k) {
  switch (k) {
    case ConditionKind::degree_bound: return "degree_bound";
    case ConditionKind::edge_bound: return "edge_bound";
    case ConditionKind::forbidden_subgraph: return "forbidden_subgraph";
    case ConditionKind::p_square: return "p_square";
    default: return "outer_one_planar";
  }
}

json verdict_json(const Verdict& v, bool with_timing) {
  json j;
  j["answer"] = answer_word(v.answer);
  j["witness"] = v.witness ? witness_json(*v.witness) : json(nullptr);
  if (v.refutation.kind == RefutationKind::none) {
    j["refutation"] = nullptr;
  } else {
    json r;
    r["kind"] = refutation_word(v.refutation.kind);
    r["detail"] = v.refutation.detail;
    j["refutation"] = std::move(r);
  }
  j["stats"] = stats_json(v.stats, with_timing);
  return j;
}

std::string dot_text(const Graph& g, const std::vector<char>* truth) {
  std::ostringstream out;
  out << "graph {\n";
  for (int v = 0; v < g.n; ++v) {
    out << "  " << v;
    if (truth && !(*truth)[v]) out << " [shape=box]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

json parse_or_throw(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw codec_error(std::string(what) + ": " + e.what(), e.byte);
  }
}

}  // namespace

std::string embedding_to_json(const PlaneEmbedding& emb) { return embedding_json(emb).dump(2); }

PlaneEmbedding embedding_from_json(const std::string& text) {
  return embedding_from(parse_or_throw(text, "embedding"));
}

std::string witness_to_json(const OnePlanarWitness& w) { return witness_json(w).dump(2); }

OnePlanarWitness witness_from_json(const std::string& text) {
  return witness_from(parse_or_throw(text, "witness"));
}

std::string verdict_to_json(const Verdict& v, bool with_timing) {
  return verdict_json(v, with_timing).dump(2);
}

std::string cr_result_to_json(const CrResult& r, bool with_timing) {
  json j;
  j["value"] = r.value ? json(*r.value) : json(nullptr);
  j["lower_bound"] = r.lower_bound;
  j["upper_bound"] = r.upper_bound ? json(*r.upper_bound) : json(nullptr);
  if (r.witness) {
    json pairs = json::array();
    for (const auto& [e, f] : r.witness->pairs)
      pairs.push_back(json::array({edge_json(e), edge_json(f)}));
    json orders = json::array();
    for (const auto& [e, partners] : r.witness->orders) {
      json lst = json::array();
      for (const auto& p : partners) lst.push_back(edge_json(p));
      orders.push_back(json::array({edge_json(e), std::move(lst)}));
    }
    json w;
    w["pairs"] = std::move(pairs);
    w["orders"] = std::move(orders);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["stats"] = stats_json(r.stats, with_timing);
  return j.dump(2);
}

std::string join_decision_to_json(const JoinDecision& d, bool with_timing) {
  json j;
  j["answer"] = answer_word(d.answer);
  j["reason"] = reason_word(d.reason);
  j["detail"] = d.detail;
  j["pair"] = d.pair ? json(d.pair->name) : json(nullptr);
  j["verdict"] = d.verdict ? verdict_json(*d.verdict, with_timing) : json(nullptr);
  j["witness"] = d.witness ? witness_json(*d.witness) : json(nullptr);
  return j.dump(2);
}

std::string condition_reports_to_json(const std::vector<ConditionReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    json j;
    j["condition"] = r.condition;
    j["kind"] = kind_word(r.kind);
    j["holds"] = r.holds;
    j["detail"] = r.detail;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

std::string to_dot(const Graph& g) { return dot_text(g, nullptr); }

std::string to_dot(const Graph& g, const CrossingPlan& plan) {
  const auto p = planarize(g, plan);
  return dot_text(p.graph, &p.truth_mark);
}

std::string to_dot(const Graph& g, const MultiCrossingPlan& plan) {
  const auto p = planarize_multi(g, plan);
  return dot_text(p.graph, &p.truth_mark);
}

}  // namespace onep
