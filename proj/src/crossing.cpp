#include "onep/crossing.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace onep {

namespace {

bool independent(const Edge& a, const Edge& b) {
  return a.first != b.first && a.first != b.second && a.second != b.first &&
         a.second != b.second;
}

std::pair<Edge, Edge> norm_pair(Edge a, Edge b) {
  a = make_edge(a.first, a.second);
  b = make_edge(b.first, b.second);
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

// Planarization edge list for a pair set with explicit per-edge crossing
// orders. route[e] lists, for edge index e of g, the false-vertex ids on its
// path from the smaller endpoint to the larger.
void build_edges(const Graph& g, const std::vector<std::vector<int>>& route,
                 std::vector<Edge>& out) {
  out.clear();
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const auto& [u, v] = g.edges[e];
    if (route[e].empty()) {
      out.emplace_back(u, v);
      continue;
    }
    int prev = u;
    for (int f : route[e]) {
      out.emplace_back(prev, f);
      prev = f;
    }
    out.emplace_back(prev, v);
  }
}

}  // namespace

MultiCrossingPlan normalize_multi_plan(const MultiCrossingPlan& plan) {
  MultiCrossingPlan out;
  for (const auto& [a, b] : plan.pairs) out.pairs.push_back(norm_pair(a, b));
  std::sort(out.pairs.begin(), out.pairs.end());
  for (const auto& [e, partners] : plan.orders) {
    std::vector<Edge> ps;
    for (const Edge& p : partners) ps.push_back(make_edge(p.first, p.second));
    out.orders.push_back({make_edge(e.first, e.second), std::move(ps)});
  }
  std::sort(out.orders.begin(), out.orders.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

Planarization planarize_multi(const Graph& g, const MultiCrossingPlan& plan_in) {
  const MultiCrossingPlan plan = normalize_multi_plan(plan_in);
  if (std::adjacent_find(plan.pairs.begin(), plan.pairs.end()) != plan.pairs.end())
    throw std::invalid_argument("multi-crossing plan repeats a pair");

  // edge index lookup
  auto edge_index = [&](const Edge& e) -> int {
    auto it = std::lower_bound(g.edges.begin(), g.edges.end(), e);
    if (it == g.edges.end() || *it != e)
      throw std::invalid_argument("multi-crossing plan references a non-edge");
    return static_cast<int>(it - g.edges.begin());
  };

  const int m = g.edge_count();
  std::vector<std::vector<int>> partners(m);  // pair indices crossing each edge
  for (size_t k = 0; k < plan.pairs.size(); ++k) {
    const auto& [a, b] = plan.pairs[k];
    if (!independent(a, b))
      throw std::invalid_argument("multi-crossing plan pairs two adjacent edges");
    partners[edge_index(a)].push_back(static_cast<int>(k));
    partners[edge_index(b)].push_back(static_cast<int>(k));
  }

  // orders: exactly the edges crossed >= 2 times, each a permutation of the
  // edge's partner set
  std::vector<std::vector<int>> route(m);
  std::vector<char> ordered(m, 0);
  for (const auto& [e, list] : plan.orders) {
    const int ei = edge_index(e);
    if (partners[ei].size() < 2)
      throw std::invalid_argument("order given for an edge crossed fewer than twice");
    if (ordered[ei]) throw std::invalid_argument("duplicate order for an edge");
    ordered[ei] = 1;
    std::vector<int> seq;
    for (const Edge& p : list) {
      const auto other = norm_pair(g.edges[ei], p);
      const auto it = std::lower_bound(plan.pairs.begin(), plan.pairs.end(), other);
      if (it == plan.pairs.end() || *it != other)
        throw std::invalid_argument("order lists a partner the plan does not cross");
      seq.push_back(g.n + static_cast<int>(it - plan.pairs.begin()));
    }
    auto sorted_seq = seq;
    std::sort(sorted_seq.begin(), sorted_seq.end());
    auto expect = partners[ei];
    for (int& f : expect) f += g.n;
    if (sorted_seq != expect)
      throw std::invalid_argument("order is not a permutation of the edge's partners");
    route[ei] = std::move(seq);
  }
  for (int e = 0; e < m; ++e) {
    if (partners[e].size() >= 2 && !ordered[e])
      throw std::invalid_argument("missing order for an edge crossed twice or more");
    if (partners[e].size() == 1) route[e] = {g.n + partners[e][0]};
  }

  std::vector<Edge> edges;
  build_edges(g, route, edges);
  Planarization out;
  out.graph = make_graph(g.n + static_cast<int>(plan.pairs.size()), std::move(edges));
  out.truth_mark.assign(out.graph.n, 0);
  for (int v = 0; v < g.n; ++v) out.truth_mark[v] = 1;
  out.pairs = plan.pairs;
  return out;
}

namespace {

struct CrSearcher {
  const Graph& g;
  const SearchBudget& budget;
  const std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  std::uint64_t nodes = 0;
  bool stopped = false;

  int n, m;
  std::vector<std::pair<int, int>> universe;  // independent pairs, by edge index
  std::vector<int> chosen;                    // indices into universe
  std::vector<int> count;                     // crossings per edge under chosen
  std::vector<std::vector<int>> route;
  std::vector<Edge> scratch;
  PlanarityTester lr;
  std::optional<MultiCrossingPlan> found;

  CrSearcher(const Graph& graph, const SearchBudget& b) : g(graph), budget(b) {
    n = g.n;
    m = g.edge_count();
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (independent(g.edges[i], g.edges[j])) universe.push_back({i, j});
    count.assign(m, 0);
    route.assign(m, {});
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  bool test_candidate() {
    if (++nodes > budget.max_nodes ||
        ((nodes & 4095u) == 0 && elapsed() > budget.max_seconds)) {
      stopped = true;
      return false;
    }
    build_edges(g, route, scratch);
    return lr.planar(n + static_cast<int>(chosen.size()), scratch);
  }

  void record_witness() {
    MultiCrossingPlan plan;
    for (int u : chosen) {
      const auto& [i, j] = universe[u];
      plan.pairs.push_back(norm_pair(g.edges[i], g.edges[j]));
    }
    for (int e = 0; e < m; ++e) {
      if (count[e] < 2) continue;
      std::vector<Edge> order;
      for (int f : route[e]) {
        const auto& [a, b] = plan.pairs[f - n];  // chosen pairs are sorted, so
        order.push_back(a == g.edges[e] ? b : a);  // ids match plan positions
      }
      plan.orders.push_back({g.edges[e], std::move(order)});
    }
    found = normalize_multi_plan(plan);
  }

  // Enumerates crossing orders for edges with >= 2 crossings, lexicographic,
  // earlier edges varying slower; calls test on every complete assignment.
  bool orders_from(int e) {
    if (stopped) return false;
    while (e < m && count[e] < 2) ++e;
    if (e == m) {
      if (!test_candidate()) return false;
      record_witness();
      return true;
    }
    std::sort(route[e].begin(), route[e].end());
    do {
      if (orders_from(e + 1)) return true;
      if (stopped) return false;
    } while (std::next_permutation(route[e].begin(), route[e].end()));
    return false;
  }

  bool test_subset() {
    // routes: single-crossing edges directly; multi-crossed edges get their
    // false ids enumerated by orders_from
    std::fill(count.begin(), count.end(), 0);
    for (int u : chosen) {
      const auto& [i, j] = universe[u];
      ++count[i];
      ++count[j];
    }
    for (int e = 0; e < m; ++e) route[e].clear();
    // chosen is kept sorted, so false ids n + position follow canonical order
    for (size_t k = 0; k < chosen.size(); ++k) {
      const auto& [i, j] = universe[chosen[k]];
      route[i].push_back(n + static_cast<int>(k));
      route[j].push_back(n + static_cast<int>(k));
    }
    bool any_multi = false;
    for (int e = 0; e < m; ++e) any_multi |= count[e] >= 2;
    if (!any_multi) {
      if (!test_candidate()) return false;
      record_witness();
      return true;
    }
    return orders_from(0);
  }

  // Lexicographic k-subsets of the universe.
  bool level(int k) {
    chosen.resize(k);
    const int u = static_cast<int>(universe.size());
    if (k > u) return false;
    for (int i = 0; i < k; ++i) chosen[i] = i;
    while (true) {
      if (test_subset() || stopped) return !stopped;
      int i = k - 1;
      while (i >= 0 && chosen[i] == u - k + i) --i;
      if (i < 0) return false;
      ++chosen[i];
      for (int j = i + 1; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
    }
  }
};

}  // namespace

CrResult crossing_number(const Graph& g, int max_k, const SearchBudget& budget) {
  if (max_k < 0) throw std::invalid_argument("max_k must be non-negative");
  if (budget.max_nodes == 0 || !(budget.max_seconds > 0))
    throw std::invalid_argument("search budget must be positive");
  CrResult r;
  CrSearcher s(g, budget);
  const int n = g.n, m = g.edge_count();
  for (int k = 0; k <= max_k; ++k) {
    // no k-crossing planarization fits under the planar edge bound
    const bool vacuous = n + k >= 3 && m + 2 * k > 3 * (n + k) - 6;
    if (!vacuous && s.level(k)) {
      r.value = k;
      r.lower_bound = k;
      r.upper_bound = k;
      r.witness = std::move(s.found);
      break;
    }
    if (s.stopped) {
      r.lower_bound = k;  // levels below k exhausted, k itself was not
      break;
    }
    r.lower_bound = k + 1;
  }
  r.stats.nodes = s.nodes;
  r.stats.seconds = s.elapsed();
  return r;
}

}  // namespace onep
