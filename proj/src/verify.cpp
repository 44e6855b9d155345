#include "onep/verify.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"
#include "onep/codec.hpp"
#include "onep/crossing.hpp"
#include "onep/join.hpp"
#include "onep/one_planar.hpp"
#include "onep/subgraph.hpp"

namespace onep {

namespace {

// Node caps per profile. Quick keeps the whole suite in minutes and accepts
// open ends; full is sized so every non-stretch claim resolves.
constexpr std::uint64_t kQuickPair = 6'000'000;
constexpr std::uint64_t kFullPair = 80'000'000;
constexpr std::uint64_t kQuickRun = 4'000'000;
constexpr std::uint64_t kFullRun = 150'000'000;
constexpr std::uint64_t kQuickCr = 2'000'000;
constexpr std::uint64_t kFullCrMain = 500'000'000;
constexpr std::uint64_t kFullCrStretch = 1'500'000'000;
constexpr std::uint64_t kQuickBound = 2'000'000;
constexpr std::uint64_t kFullBound = 80'000'000;

struct Outcome {
  CheckStatus status = CheckStatus::inconclusive;
  std::string expected;
  std::string computed;
  std::uint64_t nodes = 0;
};

std::string ns(std::uint64_t n) { return std::to_string(n); }

const char* refutation_name(RefutationKind k) {
  switch (k) {
    case RefutationKind::search_exhausted: return "search_exhausted";
    case RefutationKind::edge_bound: return "edge_bound";
    case RefutationKind::forbidden_subgraph: return "forbidden_subgraph";
    default: return "none";
  }
}

Outcome eval_one_planar(const Graph& g, bool expect_yes, std::uint64_t cap) {
  SearchBudget b;
  b.max_nodes = cap;
  const Verdict v = is_one_planar(g, b);
  Outcome o;
  o.nodes = v.stats.nodes;
  o.expected = expect_yes ? "one_planar" : "not_one_planar";
  if (v.answer == Answer::inconclusive) {
    o.computed = "inconclusive after " + ns(o.nodes) + " nodes";
    return o;
  }
  if (v.answer == Answer::yes) {
    const bool wv = v.witness.has_value() && validate_witness(g, *v.witness);
    o.computed = "one_planar, " + ns(v.witness ? v.witness->plan.pairs.size() : 0) +
                 " crossings, witness " + (wv ? "valid" : "INVALID") + ", " + ns(o.nodes) + " nodes";
    o.status = expect_yes && wv ? CheckStatus::pass : CheckStatus::fail;
  } else {
    o.computed = std::string("not_one_planar (") + refutation_name(v.refutation.kind) + "), " +
                 ns(o.nodes) + " nodes";
    o.status = expect_yes ? CheckStatus::fail : CheckStatus::pass;
  }
  return o;
}

// Every ordered pair of classes on a and b vertices: the pair characterization
// and the exact search must agree on the join. One solver run covers both
// orders of a pair (the joins are the same graph up to labels).
Outcome eval_equivalence(int a, int b, std::uint64_t cap_per_pair) {
  const auto gs = enumerate_graphs(a);
  const auto hs = enumerate_graphs(b);
  Outcome o;
  o.expected = "verdict matches majorization for every ordered pair";
  int ordered = 0;
  for (size_t i = 0; i < gs.size(); ++i) {
    for (size_t j = (a == b ? i : 0); j < hs.size(); ++j) {
      const Graph& g = gs[i];
      const Graph& h = hs[j];
      const bool fwd = majorized_by(g, h).has_value();
      const bool bwd = majorized_by(h, g).has_value();
      SearchBudget sb;
      sb.max_nodes = cap_per_pair;
      const Verdict v = is_one_planar(join(g, h), sb);
      o.nodes += v.stats.nodes;
      const std::string pair_name = to_graph6(g) + " , " + to_graph6(h);
      if (v.answer == Answer::inconclusive) {
        o.computed = "open at pair " + pair_name + " after " + ns(v.stats.nodes) + " nodes";
        return o;
      }
      const bool yes = v.answer == Answer::yes;
      if (fwd != yes || bwd != yes) {
        o.status = CheckStatus::fail;
        o.computed = "mismatch at pair " + pair_name + ": majorized " + (fwd ? "yes" : "no") +
                     ", solver " + (yes ? "one_planar" : "not_one_planar");
        return o;
      }
      ordered += (a == b && i == j) ? 1 : 2;
    }
  }
  o.status = CheckStatus::pass;
  o.computed = ns(ordered) + " ordered pairs agree, " + ns(o.nodes) + " nodes";
  return o;
}

Outcome eval_cr(const Graph& g, int expect, int max_k, std::uint64_t cap) {
  SearchBudget b;
  b.max_nodes = cap;
  const CrResult r = crossing_number(g, max_k, b);
  Outcome o;
  o.nodes = r.stats.nodes;
  o.expected = "cr = " + std::to_string(expect);
  if (!r.value.has_value()) {
    o.computed = "bounds [" + std::to_string(r.lower_bound) + ", " +
                 (r.upper_bound ? std::to_string(*r.upper_bound) : std::string("inf")) + "], " +
                 ns(o.nodes) + " nodes";
    return o;
  }
  bool wv = false;
  if (r.witness.has_value()) {
    try {
      wv = is_planar_boolean(planarize_multi(g, *r.witness).graph);
    } catch (const std::invalid_argument&) {
      wv = false;
    }
  }
  o.computed = "cr = " + std::to_string(*r.value) + ", drawing " +
               (wv ? "planarizes" : "INVALID") + ", " + ns(o.nodes) + " nodes";
  o.status = *r.value == expect && wv ? CheckStatus::pass : CheckStatus::fail;
  return o;
}

Outcome eval_ladder10() {
  Outcome o;
  o.expected = "25 edges; valid drawing; valid cone drawing of the join with one vertex";
  const auto inst = ladder_family(10);
  const bool edges_ok = inst.graph.edge_count() == 25;
  const bool wv = inst.witness.has_value() && validate_witness(inst.graph, *inst.witness);
  std::string cone = "cone drawing not attempted";
  bool cone_ok = false;
  if (wv) {
    try {
      const auto apex = construct_apex_drawing(inst.graph, *inst.witness);
      cone_ok =
          validate_witness(join(inst.graph, standard_graph(StandardKind::empty, 1)), apex);
      cone = "cone drawing with " + ns(apex.plan.pairs.size()) + " crossings " +
             (cone_ok ? "valid" : "INVALID");
    } catch (const std::exception& e) {
      cone = std::string("cone drawing failed: ") + e.what();
    }
  }
  o.computed = ns(inst.graph.edge_count()) + " edges; drawing " + (wv ? "valid" : "INVALID") +
               "; " + cone;
  o.status = edges_ok && wv && cone_ok ? CheckStatus::pass : CheckStatus::fail;
  return o;
}

Outcome eval_cycle_square_join8() {
  Outcome o;
  o.expected = "32 edges; valid drawing of the join with two vertices";
  const auto inst = cycle_square_join(8);
  const int m = inst.graph.edge_count();
  const bool wv = inst.witness.has_value() && validate_witness(inst.graph, *inst.witness);
  // dropping one edge per crossing leaves a planar graph, so c >= m - (3n - 6)
  const int floor_c = m - (3 * inst.graph.n - 6);
  o.computed = ns(m) + " edges; drawing " + (wv ? "valid" : "INVALID") + " with " +
               ns(inst.witness ? inst.witness->plan.pairs.size() : 0) +
               " crossings (minimum possible " + std::to_string(floor_c) + ")";
  o.status = m == 32 && wv ? CheckStatus::pass : CheckStatus::fail;
  return o;
}

Outcome eval_chorded(int k, std::uint64_t cap) {
  Outcome o;
  o.expected = ns(2 * k - 2) + " edges; join with P2 one_planar";
  const auto inst = chorded_cycle(k);
  const bool edges_ok = inst.graph.edge_count() == 2 * k - 2;
  const Graph j = join(inst.graph, standard_graph(StandardKind::path, 2));
  SearchBudget b;
  b.max_nodes = cap;
  const Verdict v = is_one_planar(j, b);
  o.nodes = v.stats.nodes;
  if (v.answer == Answer::inconclusive) {
    o.computed = ns(inst.graph.edge_count()) + " edges; join search inconclusive after " +
                 ns(o.nodes) + " nodes";
    return o;
  }
  const bool yes = v.answer == Answer::yes;
  const bool wv = yes && v.witness.has_value() && validate_witness(j, *v.witness);
  o.computed = ns(inst.graph.edge_count()) + " edges; join " +
               (yes ? "one_planar, witness " + std::string(wv ? "valid" : "INVALID")
                    : std::string("not_one_planar")) +
               ", " + ns(o.nodes) + " nodes";
  o.status = edges_ok && yes && wv ? CheckStatus::pass : CheckStatus::fail;
  return o;
}

// Soundness sweep: wherever the battery rejects, the exact search must refute
// the join as well; classes passing the battery cannot be counterexamples.
Outcome eval_bound(SmallFactor f, std::uint64_t cap_per_join) {
  Outcome o;
  o.expected = "0 counterexamples";
  const Graph partner = f == SmallFactor::p1      ? standard_graph(StandardKind::empty, 1)
                        : f == SmallFactor::two_p1 ? standard_graph(StandardKind::empty, 2)
                                                   : standard_graph(StandardKind::path, 2);
  int classes = 0, flagged = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      ++classes;
      bool bad = false;
      for (const auto& r : necessary_conditions(g, f)) bad = bad || !r.holds;
      if (!bad) continue;
      ++flagged;
      SearchBudget sb;
      sb.max_nodes = cap_per_join;
      const Verdict v = is_one_planar(join(g, partner), sb);
      o.nodes += v.stats.nodes;
      if (v.answer == Answer::yes) {
        o.status = CheckStatus::fail;
        o.computed = "counterexample " + to_graph6(g) + ": battery fails yet the join is 1-planar";
        return o;
      }
      if (v.answer == Answer::inconclusive) {
        o.computed = "open at " + to_graph6(g) + " after " + ns(v.stats.nodes) + " nodes";
        return o;
      }
    }
  }
  o.status = CheckStatus::pass;
  o.computed = ns(classes) + " classes, " + ns(flagged) +
               " failing the battery, every such join refuted, " + ns(o.nodes) + " nodes";
  return o;
}

struct Claim {
  std::string id;
  std::string group;
  std::string statement;
  bool stretch = false;
  std::uint64_t quick_cap = 0;
  std::uint64_t full_cap = 0;
  std::function<Outcome(std::uint64_t cap)> eval;
};

std::vector<Claim> build_claims() {
  std::vector<Claim> out;

  const auto sweep = [](int a, int b) {
    return [a, b](std::uint64_t cap) { return eval_equivalence(a, b, cap); };
  };
  const char* thm_stmt =
      "the join of factors on at least 3 vertices each is 1-planar exactly when some maximal "
      "pair contains both factors; checked against the exact search";
  out.push_back({"thm-equiv-3x3", "thm-equiv", std::string(thm_stmt) + " (3+3 vertices).", false,
                 kQuickPair, kFullPair, sweep(3, 3)});
  out.push_back({"thm-equiv-3x4", "thm-equiv", std::string(thm_stmt) + " (3+4 vertices).", false,
                 kQuickPair, kFullPair, sweep(3, 4)});
  out.push_back({"thm-equiv-4x4", "thm-equiv", std::string(thm_stmt) + " (4+4 vertices).", false,
                 kQuickPair, kFullPair, sweep(4, 4)});

  struct Entry {
    const char* expr;
    bool yes;
  };
  const Entry lemmas[] = {
      {"(C3uP1)+4P1", false},      {"(P4uP1)+C3", false},  {"(P4uP1)+P3", false},
      {"(P4uP1)+(P2uP1)", false},  {"(P4uP1)+3P1", false}, {"(K_{3,1}uP1)+3P1", false},
      {"3P2+3P1", false},          {"(C3uP2)+C3", true},   {"(C3uC3)+C3", true},
      {"(C3uP1)+C3", true},
  };
  for (const auto& e : lemmas) {
    const Graph g = named(e.expr).graph;
    out.push_back({std::string("lemma-") + e.expr, "lemma",
                   std::string(e.expr) + (e.yes ? " is 1-planar." : " is not 1-planar."), false,
                   kQuickRun, kFullRun,
                   [g, yes = e.yes](std::uint64_t cap) { return eval_one_planar(g, yes, cap); }});
  }

  const Entry table[] = {
      {"K6", true},           {"K_{6,3}", true},       {"K_{4,4}", true},
      {"K_{6,2,1}", true},    {"K_{4,2,2}", true},     {"K_{3,3,1}", true},
      {"K_{6,1,1,1}", true},  {"K_{3,2,1,1}", true},   {"K_{2,2,2,2}", true},
      {"K_{2,2,1,1,1}", true}, {"K_{4,3,1}", false},   {"K_{3,3,2}", false},
      {"K_{5,2,2}", false},   {"K_{4,2,1,1}", false},  {"K_{3,1,1,1,1}", false},
      {"K_{5,4}", false},
  };
  for (const auto& e : table) {
    const Graph g = named(e.expr).graph;
    out.push_back({std::string("boundary-") + e.expr, "boundary",
                   std::string(e.expr) + (e.yes ? " is 1-planar." : " is not 1-planar."), false,
                   kQuickRun, kFullRun,
                   [g, yes = e.yes](std::uint64_t cap) { return eval_one_planar(g, yes, cap); }});
  }

  out.push_back({"cr-K_{5,3}", "cr", "The crossing number of K_{5,3} is 4.", false, kQuickCr,
                 kFullCrMain, [](std::uint64_t cap) {
                   return eval_cr(complete_bipartite(5, 3), 4, 5, cap);
                 }});
  out.push_back({"cr-K_{6,3}", "cr", "The crossing number of K_{6,3} is 6.", true, kQuickCr,
                 kFullCrStretch, [](std::uint64_t cap) {
                   return eval_cr(complete_bipartite(6, 3), 6, 7, cap);
                 }});
  {
    const Graph g = named("(C3uP1)+4P1").graph;
    out.push_back({"cr-(C3uP1)+4P1", "cr", "The crossing number of (C3 u P1) + 4P1 is 6.", true,
                   kQuickCr, kFullCrStretch,
                   [g](std::uint64_t cap) { return eval_cr(g, 6, 7, cap); }});
  }

  out.push_back({"construction-ladder10-cone", "construction",
                 "The 10-vertex ladder with chords has 25 edges, a 1-planar drawing with 4 "
                 "crossings, and a 1-planar join with one extra vertex.",
                 false, 0, 0, [](std::uint64_t) { return eval_ladder10(); }});
  out.push_back({"construction-C8^2+2P1", "construction",
                 "The square of C8 joined with two isolated vertices has 32 = 4n - 8 edges and "
                 "is 1-planar.",
                 false, 0, 0, [](std::uint64_t) { return eval_cycle_square_join8(); }});
  out.push_back({"construction-chorded-5", "construction",
                 "The 5-cycle with near-pendant chords has 8 edges and a 1-planar join with P2.",
                 false, kQuickRun, kFullRun,
                 [](std::uint64_t cap) { return eval_chorded(5, cap); }});
  out.push_back({"construction-chorded-6", "construction",
                 "The 6-cycle with near-pendant chords has 10 edges and a 1-planar join with P2.",
                 false, kQuickRun, kFullRun,
                 [](std::uint64_t cap) { return eval_chorded(6, cap); }});

  const auto bound_stmt = [](const char* partner, const char* conds) {
    return std::string("If the join of G with ") + partner +
           " is 1-planar then " + conds + "; exhaustive over graphs on at most 6 vertices.";
  };
  out.push_back({"bound-P1", "bound",
                 bound_stmt("one vertex", "|E| <= 3|V| - 4"), false, kQuickBound, kFullBound,
                 [](std::uint64_t cap) { return eval_bound(SmallFactor::p1, cap); }});
  out.push_back({"bound-2P1", "bound",
                 bound_stmt("two isolated vertices",
                            "|E| <= 2|V|, max degree <= 6, and G avoids K_{7,1} and K_{3,3}"),
                 false, kQuickBound, kFullBound,
                 [](std::uint64_t cap) { return eval_bound(SmallFactor::two_p1, cap); }});
  out.push_back({"bound-P2", "bound",
                 bound_stmt("one edge",
                            "|E| <= 2|V| - 1, max degree <= 6, and G avoids K_{7,1}, K_{3,3}, "
                            "K_{4,2} and K_{3,1,1}"),
                 false, kQuickBound, kFullBound,
                 [](std::uint64_t cap) { return eval_bound(SmallFactor::p2, cap); }});

  return out;
}

const std::vector<Claim>& claims() {
  static const std::vector<Claim> c = build_claims();
  return c;
}

const char* status_word(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "inconclusive";
  }
}

}  // namespace

std::vector<std::string> claim_ids() {
  std::vector<std::string> out;
  for (const auto& c : claims()) out.push_back(c.id);
  return out;
}

VerificationReport run_claims(const VerifyOptions& opt,
                              const std::function<void(const ClaimRecord&)>& progress) {
  const auto& cs = claims();
  for (const auto& sel : opt.only) {
    bool known = false;
    for (const auto& c : cs) known = known || c.id == sel || c.group == sel;
    if (!known) throw std::invalid_argument("unknown claim or group: " + sel);
  }
  VerificationReport rep;
  rep.profile = opt.quick ? "quick" : "full";
  for (const auto& c : cs) {
    if (!opt.only.empty()) {
      bool take = false;
      for (const auto& sel : opt.only) take = take || sel == c.id || sel == c.group;
      if (!take) continue;
    }
    const std::uint64_t cap = opt.quick ? c.quick_cap : c.full_cap;
    const auto t0 = std::chrono::steady_clock::now();
    const Outcome o = c.eval(cap);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ClaimRecord r;
    r.id = c.id;
    r.group = c.group;
    r.statement = c.statement;
    r.expected = o.expected;
    r.computed = o.computed;
    r.status = o.status;
    r.stretch = c.stretch;
    r.nodes = o.nodes;
    r.node_cap = cap;
    r.seconds = secs;
    if (r.status == CheckStatus::pass)
      ++rep.passed;
    else if (r.status == CheckStatus::fail)
      ++rep.failed;
    else
      ++rep.inconclusive;
    if (progress) progress(r);
    rep.records.push_back(std::move(r));
  }
  bool open_gate = false;
  for (const auto& r : rep.records)
    open_gate = open_gate ||
                (!opt.quick && !r.stretch && r.status == CheckStatus::inconclusive);
  rep.ok = rep.failed == 0 && !open_gate;
  return rep;
}

std::string report_to_json(const VerificationReport& r, bool with_timing) {
  nlohmann::json j;
  j["profile"] = r.profile;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& rec : r.records) {
    nlohmann::json c;
    c["id"] = rec.id;
    c["group"] = rec.group;
    c["statement"] = rec.statement;
    c["expected"] = rec.expected;
    c["computed"] = rec.computed;
    c["status"] = status_word(rec.status);
    c["stretch"] = rec.stretch;
    c["nodes"] = rec.nodes;
    c["node_cap"] = rec.node_cap ? nlohmann::json(rec.node_cap) : nlohmann::json(nullptr);
    c["seconds"] = with_timing ? nlohmann::json(rec.seconds) : nlohmann::json(nullptr);
    arr.push_back(std::move(c));
  }
  j["claims"] = std::move(arr);
  j["summary"] = {{"pass", r.passed},
                  {"fail", r.failed},
                  {"inconclusive", r.inconclusive},
                  {"ok", r.ok}};
  return j.dump(2);
}

std::string report_to_markdown(const VerificationReport& r, bool with_timing) {
  std::string out = "# Verification report\n\n";
  out += "Profile: " + r.profile + "\n\n";
  out += std::string("Result: ") + (r.ok ? "PASS" : "FAIL") + " (" + std::to_string(r.passed) +
         " pass / " + std::to_string(r.failed) + " fail / " + std::to_string(r.inconclusive) +
         " inconclusive)\n\n";
  out += "| claim | status | expected | computed | nodes | cap |";
  if (with_timing) out += " seconds |";
  out += "\n|---|---|---|---|---|---|";
  if (with_timing) out += "---|";
  out += "\n";
  for (const auto& rec : r.records) {
    out += "| " + rec.id + " | " + status_word(rec.status) +
           (rec.stretch && rec.status == CheckStatus::inconclusive ? " (stretch)" : "") + " | " +
           rec.expected + " | " + rec.computed + " | " + std::to_string(rec.nodes) + " | " +
           (rec.node_cap ? std::to_string(rec.node_cap) : std::string("-")) + " |";
    if (with_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " %.2f |", rec.seconds);
      out += buf;
    }
    out += "\n";
  }
  out += "\n## Statements\n\n";
  for (const auto& rec : r.records) out += "- **" + rec.id + "** - " + rec.statement + "\n";
  return out;
}

}  // namespace onep
