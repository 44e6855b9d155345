#include "onep/one_planar.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>

namespace onep {

namespace {

bool independent(const Edge& a, const Edge& b) {
  return a.first != b.first && a.first != b.second && a.second != b.first &&
         a.second != b.second;
}

}  // namespace

CrossingPlan normalize_plan(const CrossingPlan& plan) {
  CrossingPlan out;
  out.pairs.reserve(plan.pairs.size());
  for (const auto& [a, b] : plan.pairs) {
    const Edge ea = make_edge(a.first, a.second);
    const Edge eb = make_edge(b.first, b.second);
    out.pairs.push_back(ea < eb ? std::make_pair(ea, eb) : std::make_pair(eb, ea));
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

void check_plan(const Graph& g, const CrossingPlan& plan) {
  std::vector<Edge> used;
  for (const auto& [a, b] : plan.pairs) {
    for (const Edge& e : {a, b}) {
      if (!g.has_edge(e.first, e.second))
        throw std::invalid_argument("crossing plan references a non-edge");
      used.push_back(make_edge(e.first, e.second));
    }
    if (!independent(make_edge(a.first, a.second), make_edge(b.first, b.second)))
      throw std::invalid_argument("crossing plan pairs two adjacent edges");
  }
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end())
    throw std::invalid_argument("crossing plan uses an edge twice");
}

Planarization planarize(const Graph& g, const CrossingPlan& plan_in) {
  const CrossingPlan plan = normalize_plan(plan_in);
  check_plan(g, plan);
  const int c = static_cast<int>(plan.pairs.size());
  std::vector<Edge> crossed;
  for (const auto& [a, b] : plan.pairs) {
    crossed.push_back(a);
    crossed.push_back(b);
  }
  std::sort(crossed.begin(), crossed.end());
  std::vector<Edge> edges;
  for (const Edge& e : g.edges)
    if (!std::binary_search(crossed.begin(), crossed.end(), e)) edges.push_back(e);
  for (int k = 0; k < c; ++k) {
    const auto& [a, b] = plan.pairs[k];
    const int f = g.n + k;
    edges.emplace_back(a.first, f);
    edges.emplace_back(a.second, f);
    edges.emplace_back(b.first, f);
    edges.emplace_back(b.second, f);
  }
  Planarization out;
  out.graph = make_graph(g.n + c, std::move(edges));
  out.truth_mark.assign(g.n + c, 0);
  for (int v = 0; v < g.n; ++v) out.truth_mark[v] = 1;
  out.pairs = plan.pairs;
  assert(out.graph.edge_count() == g.edge_count() + 2 * c);
  return out;
}

namespace {

std::vector<int> true_vertices(const Planarization& pz) {
  std::vector<int> out;
  for (int v = 0; v < pz.graph.n; ++v)
    if (pz.truth_mark[v]) out.push_back(v);
  return out;
}

struct Searcher {
  const Graph& g;
  const bool outer;
  const SolverOptions opt;
  const SearchBudget budget;
  const std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  int n, m;
  int needed_c = 0;  // every completion needs at least this many crossings
  std::vector<Edge> order;
  static constexpr int kUndecided = -2, kUncrossed = -1;
  std::vector<int> partner;
  int undecided = 0;
  int c_cur = 0;
  std::vector<Edge> pedges;  // decided part of the planarization

  // union-find over true + potential false vertices, union by rank, no path
  // compression so unions can be undone when backtracking
  std::vector<int> ufp, ufr;

  PlanarityTester lr;
  std::vector<Edge> scratch;
  std::uint64_t nodes = 0;
  std::optional<OnePlanarWitness> found;

  enum class Step { accepted, rejected, budget };

  Searcher(const Graph& graph, bool outer_mode, const SolverOptions& options,
           const SearchBudget& b)
      : g(graph), outer(outer_mode), opt(options), budget(b) {
    n = g.n;
    m = g.edge_count();
    if (n >= 3) needed_c = std::max(0, outer ? m - 2 * n + 3 : m - 3 * n + 6);
    order = g.edges;
    const auto degsum = [&](const Edge& e) {
      return static_cast<int>(g.adj[e.first].size() + g.adj[e.second].size());
    };
    switch (opt.order) {  // ties keep canonical edge order
      case EdgeOrder::degree_desc:
        std::stable_sort(order.begin(), order.end(),
                         [&](const Edge& a, const Edge& b) { return degsum(a) > degsum(b); });
        break;
      case EdgeOrder::degree_asc:
        std::stable_sort(order.begin(), order.end(),
                         [&](const Edge& a, const Edge& b) { return degsum(a) < degsum(b); });
        break;
      case EdgeOrder::input:
        break;
    }
    partner.assign(m, kUndecided);
    undecided = m;
    const int slots = n + m / 2 + 1;
    ufp.resize(slots);
    for (int i = 0; i < slots; ++i) ufp[i] = i;
    ufr.assign(slots, 0);
  }

  int find(int x) const {
    while (ufp[x] != x) x = ufp[x];
    return x;
  }

  // Returns the root made a child (to detach on undo), or -1 if the union
  // was a no-op, i.e. the edge closed a cycle. Stale ranks after an undo only
  // affect balance, never find() results.
  int unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return -1;
    if (ufr[ra] < ufr[rb]) std::swap(ra, rb);
    ufp[rb] = ra;
    if (ufr[ra] == ufr[rb]) ++ufr[ra];
    return rb;
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  bool partial_ok() {
    if (outer) {
      scratch = pedges;
      const int apex = n + c_cur;
      for (int v = 0; v < n; ++v) scratch.emplace_back(v, apex);
      return lr.planar(apex + 1, scratch);
    }
    return lr.planar(n + c_cur, pedges);
  }

  Step accept() {
    CrossingPlan plan;
    for (int i = 0; i < m; ++i)
      if (partner[i] >= 0 && partner[i] > i) plan.pairs.push_back({order[i], order[partner[i]]});
    auto pz = planarize(g, plan);
    if (outer) {
      if (!common_face_test(pz.graph, true_vertices(pz))) return Step::rejected;
    } else {
      if (!is_planar_boolean(pz.graph)) return Step::rejected;
    }
    std::optional<PlaneEmbedding> emb;
    if (outer) emb = embed_with_common_face(pz.graph, true_vertices(pz));
    if (!emb) emb = is_planar(pz.graph);
    assert(emb);
    found = OnePlanarWitness{normalize_plan(plan), std::move(*emb)};
    return Step::accepted;
  }

  Step decide(int pos) {
    if (++nodes > budget.max_nodes) return Step::budget;
    if ((nodes & 4095u) == 0 && elapsed() > budget.max_seconds) return Step::budget;
    while (pos < m && partner[pos] != kUndecided) ++pos;
    if (pos == m) return accept();
    if (opt.prune_edge_count && c_cur + undecided / 2 < needed_c) return Step::rejected;

    const Edge e = order[pos];

    // leave e uncrossed
    {
      partner[pos] = kUncrossed;
      --undecided;
      pedges.push_back(e);
      int joined = -1;
      bool viable = true;
      if (opt.prune_partial) {
        if (outer) {
          viable = partial_ok();
        } else {
          joined = unite(e.first, e.second);
          if (joined < 0) viable = partial_ok();  // closed a cycle
        }
      }
      const Step s = viable ? decide(pos + 1) : Step::rejected;
      if (s != Step::rejected) return s;
      if (joined >= 0) ufp[joined] = joined;
      pedges.pop_back();
      ++undecided;
      partner[pos] = kUndecided;
    }

    // cross e with a later independent edge
    for (int j = pos + 1; j < m; ++j) {
      if (partner[j] != kUndecided || !independent(e, order[j])) continue;
      partner[pos] = j;
      partner[j] = pos;
      undecided -= 2;
      const int f = n + c_cur;
      ++c_cur;
      const Edge o = order[j];
      pedges.emplace_back(e.first, f);
      pedges.emplace_back(e.second, f);
      pedges.emplace_back(o.first, f);
      pedges.emplace_back(o.second, f);
      int joined[4] = {-1, -1, -1, -1};
      bool cycle = false;
      bool viable = true;
      if (opt.prune_partial) {
        if (outer) {
          viable = partial_ok();
        } else {
          const int ends[4] = {e.first, e.second, o.first, o.second};
          for (int k = 0; k < 4; ++k) {
            joined[k] = unite(ends[k], f);
            cycle |= joined[k] < 0;
          }
          if (cycle) viable = partial_ok();
        }
      }
      const Step s = viable ? decide(pos + 1) : Step::rejected;
      if (s != Step::rejected) return s;
      for (int k = 3; k >= 0; --k)
        if (joined[k] >= 0) ufp[joined[k]] = joined[k];
      pedges.resize(pedges.size() - 4);
      --c_cur;
      undecided += 2;
      partner[j] = kUndecided;
      partner[pos] = kUndecided;
    }
    return Step::rejected;
  }
};

Verdict solve(const Graph& g, const SearchBudget& budget, const SolverOptions& opt,
              bool outer) {
  if (budget.max_nodes == 0 || !(budget.max_seconds > 0))
    throw std::invalid_argument("search budget must be positive");
  Verdict v;
  const int n = g.n, m = g.edge_count();
  if (n >= 3) {
    if (!outer && m > 4 * n - 8) {
      v.answer = Answer::no;
      v.refutation = {RefutationKind::edge_bound,
                      "|E| = " + std::to_string(m) +
                          " exceeds 4|V| - 8 = " + std::to_string(4 * n - 8)};
      return v;
    }
    if (outer && 2 * m > 5 * n - 8) {
      v.answer = Answer::no;
      v.refutation = {RefutationKind::edge_bound,
                      "2|E| = " + std::to_string(2 * m) +
                          " exceeds 5|V| - 8 = " + std::to_string(5 * n - 8)};
      return v;
    }
  }
  Searcher s(g, outer, opt, budget);
  const auto step = s.decide(0);
  v.stats.nodes = s.nodes;
  v.stats.seconds = s.elapsed();
  switch (step) {
    case Searcher::Step::accepted:
      v.answer = Answer::yes;
      v.witness = std::move(s.found);
      break;
    case Searcher::Step::rejected:
      v.answer = Answer::no;
      v.refutation = {RefutationKind::search_exhausted, "no crossing plan admits a plane drawing"};
      break;
    case Searcher::Step::budget:
      v.answer = Answer::inconclusive;
      break;
  }
  return v;
}

}  // namespace

Verdict is_one_planar(const Graph& g, const SearchBudget& budget, const SolverOptions& opt) {
  return solve(g, budget, opt, false);
}

Verdict is_outer_one_planar(const Graph& g, const SearchBudget& budget,
                            const SolverOptions& opt) {
  return solve(g, budget, opt, true);
}

bool validate_witness(const Graph& g, const OnePlanarWitness& w) {
  try {
    const Planarization pz = planarize(g, w.plan);
    const int c = static_cast<int>(pz.pairs.size());
    if (pz.graph.n != g.n + c) return false;
    if (pz.graph.edge_count() != g.edge_count() + 2 * c) return false;
    for (int v = g.n; v < pz.graph.n; ++v) {
      if (pz.graph.adj[v].size() != 4) return false;
      for (int u : pz.graph.adj[v])
        if (u >= g.n) return false;  // crossing vertices never adjacent
    }
    return validate_embedding(pz.graph, w.planarization_embedding);
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace onep
