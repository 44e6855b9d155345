#include "onep/families.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "onep/join.hpp"
#include "onep/planarity.hpp"
#include "onep/subgraph.hpp"

namespace onep {

namespace {

Graph cycle_square_graph(int n) {
  if (n < 6 || n % 2 != 0)
    throw std::invalid_argument("cycle square needs an even n >= 6");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    es.push_back(make_edge(i, (i + 1) % n));
    es.push_back(make_edge(i, (i + 2) % n));
  }
  return make_graph(n, std::move(es));
}

// Recursive-descent parser for the graph-expression names. Owns a copy of
// the input so error messages can quote it.
struct Parser {
  std::string s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse graph name \"" + s + "\": " + why);
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  int integer() {
    skip_ws();
    const size_t start = pos;
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000) fail("number too large");
      ++pos;
    }
    if (start == pos) fail("number expected at position " + std::to_string(start));
    return static_cast<int>(v);
  }

  Graph expr() {
    Graph g = term();
    while (eat('+')) g = join(g, term());
    return g;
  }

  Graph term() {
    Graph g = atom();
    for (;;) {
      skip_ws();
      if (pos < s.size() && s[pos] == 'u') {
        ++pos;
        g = disjoint_union(g, atom());
      } else {
        break;
      }
    }
    return g;
  }

  Graph atom() {
    skip_ws();
    if (pos >= s.size()) fail("graph expected at end of input");
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      const int copies = integer();
      if (copies < 1) fail("count prefix must be positive");
      return disjoint_union(copies, atom());
    }
    if (eat('(')) {
      Graph g = expr();
      if (!eat(')')) fail("missing ')'");
      return g;
    }
    const char kind = s[pos++];
    if (kind == 'K') {
      skip_ws();
      if (pos < s.size() && s[pos] == '_') {
        ++pos;
        if (!eat('{')) fail("expected '{' after K_");
        std::vector<int> parts{integer()};
        while (eat(',')) parts.push_back(integer());
        if (!eat('}')) fail("missing '}'");
        return complete_multipartite(make_partition(std::move(parts)));
      }
      return standard_graph(StandardKind::complete, integer());
    }
    if (kind == 'C') {
      const int n = integer();
      skip_ws();
      if (pos + 1 < s.size() && s[pos] == '^' && s[pos + 1] == '2') {
        pos += 2;
        return cycle_square_graph(n);
      }
      return standard_graph(StandardKind::cycle, n);
    }
    if (kind == 'P') return standard_graph(StandardKind::path, integer());
    fail(std::string("unknown graph letter '") + kind + "'");
  }
};

Graph parse_graph(const std::string& name) {
  Parser p{name};
  Graph g = p.expr();
  p.skip_ws();
  if (p.pos != p.s.size()) p.fail("unexpected trailing input");
  return g;
}

struct Claim {
  const char* expr;
  Answer expect;
};

constexpr Claim kClaims[] = {
    {"K6", Answer::yes},
    {"K_{6,3}", Answer::yes},
    {"K_{4,4}", Answer::yes},
    {"K_{6,2,1}", Answer::yes},
    {"K_{4,2,2}", Answer::yes},
    {"K_{3,3,1}", Answer::yes},
    {"K_{6,1,1,1}", Answer::yes},
    {"K_{3,2,1,1}", Answer::yes},
    {"K_{2,2,2,2}", Answer::yes},
    {"K_{2,2,1,1,1}", Answer::yes},
    {"(C3uC3)+C3", Answer::yes},
    {"(C3uP2)+C3", Answer::yes},
    {"(C3uP1)+C3", Answer::yes},
    {"C8^2+2P1", Answer::yes},
    {"K_{4,3,1}", Answer::no},
    {"K_{3,3,2}", Answer::no},
    {"K_{5,2,2}", Answer::no},
    {"K_{4,2,1,1}", Answer::no},
    {"K_{3,1,1,1,1}", Answer::no},
    {"K_{5,4}", Answer::no},
    {"(C3uP1)+4P1", Answer::no},
    {"(P4uP1)+C3", Answer::no},
    {"(P4uP1)+P3", Answer::no},
    {"(P4uP1)+(P2uP1)", Answer::no},
    {"(P4uP1)+3P1", Answer::no},
    {"(K_{3,1}uP1)+3P1", Answer::no},
    {"3P2+3P1", Answer::no},
};

struct BuiltClaim {
  std::string expr;
  Graph graph;
  Answer expect;
};

const std::vector<BuiltClaim>& built_claims() {
  static const std::vector<BuiltClaim> list = [] {
    std::vector<BuiltClaim> v;
    for (const Claim& c : kClaims) v.push_back({c.expr, parse_graph(c.expr), c.expect});
    return v;
  }();
  return list;
}

const char* answer_word(Answer a) {
  return a == Answer::yes ? "1-planar" : a == Answer::no ? "not 1-planar" : "undecided";
}

ExpectedProperty edge_count_property(int count, std::string description) {
  ExpectedProperty p;
  p.kind = ExpectedProperty::Kind::edge_count;
  p.count = count;
  p.description = std::move(description);
  return p;
}

ExpectedProperty witness_valid_property(std::string description) {
  ExpectedProperty p;
  p.kind = ExpectedProperty::Kind::witness_valid;
  p.description = std::move(description);
  return p;
}

}  // namespace

Graph four_vertex_graph(int i) {
  switch (i) {
    case 1: return standard_graph(StandardKind::complete, 4);
    case 2: return complete_multipartite(make_partition({2, 1, 1}));
    case 3: return make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});  // paw
    case 4: return standard_graph(StandardKind::cycle, 4);
    case 5: return complete_bipartite(3, 1);
    case 6: return standard_graph(StandardKind::path, 4);
    default: throw std::invalid_argument("four_vertex_graph: index must be 1..6");
  }
}

FamilyInstance ladder_family(int n) {
  if (n < 6 || n % 2 != 0 || (n / 2) % 2 == 0)
    throw std::invalid_argument("ladder_family: n must be 2k with k odd, k >= 3");
  const int k = n / 2;
  const auto a = [&](int i) { return i - 1; };
  const auto b = [&](int i) { return k + i - 1; };

  std::vector<Edge> es;
  for (int i = 1; i < k; ++i) {
    es.push_back(make_edge(a(i), a(i + 1)));
    es.push_back(make_edge(b(i), b(i + 1)));
    es.push_back(make_edge(a(i), b(i)));
    es.push_back(make_edge(a(i), b(i + 1)));
    es.push_back(make_edge(a(i + 1), b(i)));
  }
  es.push_back(make_edge(a(k), b(k)));
  for (int j = 1; j + 2 <= k; j += 2) {
    es.push_back(make_edge(a(j), a(j + 2)));
    es.push_back(make_edge(b(j), b(j + 2)));
  }

  FamilyInstance inst;
  inst.name = "ladder-" + std::to_string(n);
  inst.graph = make_graph(n, std::move(es));

  CrossingPlan plan;
  for (int i = 1; i < k; ++i)
    plan.pairs.push_back({make_edge(a(i), b(i + 1)), make_edge(a(i + 1), b(i))});
  plan = normalize_plan(plan);
  auto emb = is_planar(planarize(inst.graph, plan).graph);
  if (!emb) throw std::logic_error("ladder_family: the diagonal plan failed to planarize");
  OnePlanarWitness w{std::move(plan), std::move(*emb)};

  // Pick an outer face from which the cone construction goes through: the
  // chords sit on the boundary of exactly one face, and only from there can
  // the new vertex reach every inner vertex with one crossing each.
  const size_t nf = faces(w.planarization_embedding).size();
  bool placed = false;
  for (size_t f = 0; f < nf && !placed; ++f) {
    w.planarization_embedding.outer_face = static_cast<int>(f);
    try {
      (void)construct_apex_drawing(inst.graph, w);
      placed = true;
    } catch (const std::exception&) {
    }
  }
  if (!placed) w.planarization_embedding.outer_face = 0;
  inst.witness = std::move(w);

  inst.expected.push_back(edge_count_property(3 * n - 5, "has 3|V| - 5 edges"));
  inst.expected.push_back(witness_valid_property("diagonal crossing plan certifies 1-planarity"));
  {
    ExpectedProperty p;
    p.kind = ExpectedProperty::Kind::apex_join;
    p.description = "join with one vertex stays 1-planar via the outer-face construction";
    inst.expected.push_back(std::move(p));
  }
  return inst;
}

FamilyInstance cycle_square(int n) {
  FamilyInstance inst;
  inst.name = "C" + std::to_string(n) + "^2";
  inst.graph = cycle_square_graph(n);
  auto emb = is_planar(inst.graph);
  if (!emb) throw std::logic_error("cycle_square: expected a planar graph");
  inst.witness = OnePlanarWitness{CrossingPlan{}, std::move(*emb)};

  inst.expected.push_back(edge_count_property(2 * n, "has 2|V| edges"));
  inst.expected.push_back(witness_valid_property("planar, so the empty plan certifies it"));
  {
    FamilyInstance joined = cycle_square_join(n);
    ExpectedProperty p;
    p.kind = ExpectedProperty::Kind::join_witness;
    p.partner = standard_graph(StandardKind::empty, 2);
    p.join_witness = std::move(joined.witness);
    p.description = "join with two isolated vertices has a drawn certificate";
    inst.expected.push_back(std::move(p));
  }
  return inst;
}

FamilyInstance cycle_square_join(int n) {
  const Graph base = cycle_square_graph(n);
  FamilyInstance inst;
  inst.name = "C" + std::to_string(n) + "^2+2P1";
  inst.graph = join(base, standard_graph(StandardKind::empty, 2));

  // One inserted vertex per side of the cycle: the inner one reaches each
  // even cycle vertex across the odd chord spanning it, the outer one
  // reaches each odd vertex across the even chord spanning it.
  CrossingPlan plan;
  const int inner = n, outer = n + 1;
  for (int e = 0; e < n; e += 2) {
    plan.pairs.push_back({make_edge(e, inner), make_edge((e + n - 1) % n, (e + 1) % n)});
    plan.pairs.push_back({make_edge(e + 1, outer), make_edge(e, (e + 2) % n)});
  }
  plan = normalize_plan(plan);
  auto emb = is_planar(planarize(inst.graph, plan).graph);
  if (!emb) throw std::logic_error("cycle_square_join: the drawn plan failed to planarize");
  inst.witness = OnePlanarWitness{std::move(plan), std::move(*emb)};

  inst.expected.push_back(
      edge_count_property(4 * n, "has 4|V| - 8 edges, meeting the global bound"));
  inst.expected.push_back(witness_valid_property("chord-crossing drawing certifies 1-planarity"));
  return inst;
}

FamilyInstance chorded_cycle(int n) {
  if (n < 5) throw std::invalid_argument("chorded_cycle: n must be at least 5");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back(make_edge(i, (i + 1) % n));
  // distance-2 chords, alternating sides: odd starts outside, even inside
  // (1-indexed starts; neither set wraps around)
  for (int i = 1; i <= 2 * ((n - 1) / 2) - 1; i += 2) es.push_back(make_edge(i - 1, i + 1));
  for (int j = 2; j <= 2 * (n / 2) - 2; j += 2) es.push_back(make_edge(j - 1, j + 1));

  FamilyInstance inst;
  inst.name = "chorded-cycle-" + std::to_string(n);
  inst.graph = make_graph(n, std::move(es));
  auto emb = is_planar(inst.graph);
  if (!emb) throw std::logic_error("chorded_cycle: expected a planar graph");
  inst.witness = OnePlanarWitness{CrossingPlan{}, std::move(*emb)};

  inst.expected.push_back(edge_count_property(2 * n - 2, "has 2|V| - 2 edges"));
  inst.expected.push_back(witness_valid_property("planar, so the empty plan certifies it"));
  {
    ExpectedProperty p;
    p.kind = ExpectedProperty::Kind::join_verdict;
    p.partner = standard_graph(StandardKind::path, 2);
    p.expect = Answer::yes;
    p.description = "join with a single edge is 1-planar";
    inst.expected.push_back(std::move(p));
  }
  return inst;
}

FamilyInstance named(const std::string& name) {
  FamilyInstance inst;
  inst.name = name;
  inst.graph = parse_graph(name);

  for (const BuiltClaim& c : built_claims()) {
    if (inst.graph.n != c.graph.n || inst.graph.edge_count() != c.graph.edge_count())
      continue;
    if (inst.graph.n <= 11 && is_isomorphic(inst.graph, c.graph)) {
      ExpectedProperty p;
      p.kind = ExpectedProperty::Kind::verdict;
      p.expect = c.expect;
      p.description = c.expr + std::string(" is ") + answer_word(c.expect);
      inst.expected.push_back(std::move(p));
      break;
    }
  }

  std::string squashed;
  for (char ch : name)
    if (!std::isspace(static_cast<unsigned char>(ch))) squashed += ch;
  if (squashed == "C8^2+2P1") {
    FamilyInstance drawn = cycle_square_join(8);
    inst.witness = std::move(drawn.witness);
    inst.expected.push_back(witness_valid_property("shipped drawing certifies 1-planarity"));
  }
  return inst;
}

std::vector<std::string> named_claims() {
  std::vector<std::string> out;
  for (const Claim& c : kClaims) out.emplace_back(c.expr);
  return out;
}

PropertyOutcome check_property(const FamilyInstance& inst, const ExpectedProperty& p,
                               const SearchBudget& budget) {
  PropertyOutcome out;
  switch (p.kind) {
    case ExpectedProperty::Kind::edge_count: {
      const int m = inst.graph.edge_count();
      out.status = m == p.count ? CheckStatus::pass : CheckStatus::fail;
      out.note = "|E| = " + std::to_string(m) + ", expected " + std::to_string(p.count);
      return out;
    }
    case ExpectedProperty::Kind::verdict:
    case ExpectedProperty::Kind::join_verdict: {
      Graph subject = inst.graph;
      if (p.kind == ExpectedProperty::Kind::join_verdict) {
        if (!p.partner) {
          out.note = "missing join partner";
          return out;
        }
        subject = join(inst.graph, *p.partner);
      }
      const Verdict v = is_one_planar(subject, budget);
      if (v.answer == Answer::inconclusive) {
        out.status = CheckStatus::inconclusive;
        out.note = "search budget exhausted after " + std::to_string(v.stats.nodes) + " nodes";
        return out;
      }
      out.status = v.answer == p.expect ? CheckStatus::pass : CheckStatus::fail;
      out.note = std::string("search says ") + answer_word(v.answer) + " (expected " +
                 answer_word(p.expect) + ")";
      return out;
    }
    case ExpectedProperty::Kind::witness_valid: {
      if (!inst.witness) {
        out.note = "no witness shipped";
        return out;
      }
      const bool ok = validate_witness(inst.graph, *inst.witness);
      out.status = ok ? CheckStatus::pass : CheckStatus::fail;
      out.note = ok ? std::to_string(inst.witness->plan.pairs.size()) + " crossings validate"
                    : "witness rejected";
      return out;
    }
    case ExpectedProperty::Kind::join_witness: {
      if (!p.partner || !p.join_witness) {
        out.note = "missing partner or witness";
        return out;
      }
      const bool ok = validate_witness(join(inst.graph, *p.partner), *p.join_witness);
      out.status = ok ? CheckStatus::pass : CheckStatus::fail;
      out.note = ok ? std::to_string(p.join_witness->plan.pairs.size()) + " crossings validate"
                    : "witness rejected";
      return out;
    }
    case ExpectedProperty::Kind::apex_join: {
      if (!inst.witness) {
        out.note = "no witness shipped";
        return out;
      }
      try {
        const OnePlanarWitness w = construct_apex_drawing(inst.graph, *inst.witness);
        out.status = CheckStatus::pass;
        out.note = "cone drawing with " + std::to_string(w.plan.pairs.size()) +
                   " crossings validates";
      } catch (const std::exception& e) {
        out.note = e.what();
      }
      return out;
    }
  }
  out.note = "unknown property kind";
  return out;
}

}  // namespace onep
