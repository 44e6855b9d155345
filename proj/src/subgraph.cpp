#include "onep/subgraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace onep {

namespace {

struct SubgraphSearch {
  const Graph& g;
  const Graph& pat;
  std::vector<int> order;        // pattern vertices, most-constrained first
  std::vector<int> assign;       // pattern vertex -> g vertex or -1
  std::vector<char> used;        // g vertex already taken

  SubgraphSearch(const Graph& g_, const Graph& pat_) : g(g_), pat(pat_) {
    assign.assign(pat.n, -1);
    used.assign(g.n, 0);
    // Highest degree first, then prefer vertices adjacent to ones already
    // placed so edge checks bite early.
    std::vector<char> placed(pat.n, 0);
    for (int step = 0; step < pat.n; ++step) {
      int best = -1;
      int best_anchor = -1, best_deg = -1;
      for (int v = 0; v < pat.n; ++v) {
        if (placed[v]) continue;
        int anchored = 0;
        for (int u : pat.adj[v]) anchored += placed[u];
        if (anchored > best_anchor ||
            (anchored == best_anchor && pat.degree(v) > best_deg)) {
          best = v;
          best_anchor = anchored;
          best_deg = pat.degree(v);
        }
      }
      order.push_back(best);
      placed[best] = 1;
    }
  }

  bool extend(size_t step) {
    if (step == order.size()) return true;
    const int pv = order[step];
    for (int gv = 0; gv < g.n; ++gv) {
      if (used[gv] || g.degree(gv) < pat.degree(pv)) continue;
      bool ok = true;
      for (int pu : pat.adj[pv]) {
        const int gu = assign[pu];
        if (gu != -1 && !g.has_edge(gv, gu)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      assign[pv] = gv;
      used[gv] = 1;
      if (extend(step + 1)) return true;
      assign[pv] = -1;
      used[gv] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_subgraph_map(const Graph& g, const Graph& pattern) {
  if (pattern.n > g.n || pattern.edge_count() > g.edge_count()) return std::nullopt;
  if (pattern.n == 0) return std::vector<int>{};
  SubgraphSearch search(g, pattern);
  if (!search.extend(0)) return std::nullopt;
  return search.assign;
}

bool contains_subgraph(const Graph& g, const Graph& pattern) {
  return find_subgraph_map(g, pattern).has_value();
}

namespace {

constexpr int kMaxCanonN = 11;

// Color refinement to a fixed point; returns per-vertex class ids, classes
// numbered in a label-independent order.
std::vector<int> refine_classes(const Graph& g) {
  std::vector<int> color(g.n, 0);
  int classes = 1;
  for (int round = 0; round < g.n; ++round) {
    std::vector<std::pair<int, std::vector<int>>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::vector<int> nb;
      for (int u : g.adj[v]) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      sig[v] = {color[v], std::move(nb)};
    }
    std::map<std::pair<int, std::vector<int>>, int> dense;
    for (int v = 0; v < g.n; ++v) dense.emplace(sig[v], 0);
    int next = 0;
    for (auto& [key, id] : dense) id = next++;
    std::vector<int> fresh(g.n);
    for (int v = 0; v < g.n; ++v) fresh[v] = dense[sig[v]];
    if (next == classes && fresh == color) break;
    color = std::move(fresh);
    classes = next;
  }
  return color;
}

uint64_t pack_code(const Graph& g, const std::vector<int>& order) {
  // order[i] = old label put at position i; bit (i,j) from the top so that
  // smaller code = lexicographically smaller adjacency rows.
  uint64_t code = 0;
  int p = 0;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j, ++p)
      if (g.has_edge(order[i], order[j])) code |= 1ULL << (62 - p);
  return code;
}

// Enumerates orderings that respect the refinement classes and returns the
// minimal packed code (optionally the realizing order).
uint64_t min_code(const Graph& g, std::vector<int>* best_order) {
  const auto color = refine_classes(g);
  std::vector<std::vector<int>> groups;
  {
    int classes = 0;
    for (int c : color) classes = std::max(classes, c + 1);
    groups.resize(classes);
    for (int v = 0; v < g.n; ++v) groups[color[v]].push_back(v);
  }
  std::vector<int> order;
  uint64_t best = ~0ULL;
  std::vector<std::vector<int>> perms = groups;
  // Odometer over per-class permutations.
  std::function<void(size_t)> walk = [&](size_t gi) {
    if (gi == perms.size()) {
      order.clear();
      for (const auto& grp : perms) order.insert(order.end(), grp.begin(), grp.end());
      const uint64_t code = pack_code(g, order);
      if (code < best) {
        best = code;
        if (best_order) *best_order = order;
      }
      return;
    }
    auto& grp = perms[gi];
    std::sort(grp.begin(), grp.end());
    do {
      walk(gi + 1);
    } while (std::next_permutation(grp.begin(), grp.end()));
  };
  walk(0);
  return best;
}

}  // namespace

uint64_t canonical_code(const Graph& g) {
  if (g.n > kMaxCanonN) throw std::invalid_argument("canonical code: n > 11");
  return min_code(g, nullptr);
}

Graph canonical_form(const Graph& g) {
  if (g.n > kMaxCanonN) throw std::invalid_argument("canonical form: n > 11");
  std::vector<int> order(g.n);
  min_code(g, &order);
  std::vector<int> pos(g.n);
  for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges) edges.push_back(make_edge(pos[u], pos[v]));
  return make_graph(g.n, std::move(edges));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  if (a.n <= kMaxCanonN) return canonical_code(a) == canonical_code(b);
  // Equal size and order: an edge-preserving injection is an isomorphism.
  return contains_subgraph(a, b);
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 0 || n > 6) throw std::invalid_argument("labeled enumeration: need 0 <= n <= 6");
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  const uint64_t total = 1ULL << slots.size();
  for (uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) edges.push_back(slots[i]);
    fn(make_graph(n, std::move(edges)));
  }
}

std::vector<Graph> enumerate_graphs(int n) {
  std::set<uint64_t> seen;
  std::vector<std::pair<std::pair<int, uint64_t>, Graph>> reps;
  for_each_labeled_graph(n, [&](const Graph& g) {
    const uint64_t code = canonical_code(g);
    if (seen.insert(code).second) reps.push_back({{g.edge_count(), code}, canonical_form(g)});
  });
  std::sort(reps.begin(), reps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (auto& r : reps) out.push_back(std::move(r.second));
  return out;
}

std::vector<Graph> enumerate_graphs_max_edges(int n, int max_edges) {
  if (n < 1 || n > 8) throw std::invalid_argument("bounded enumeration: need 1 <= n <= 8");
  std::map<uint64_t, Graph> level;
  const Graph empty = standard_graph(StandardKind::empty, n);
  level.emplace(canonical_code(empty), empty);
  std::vector<Graph> out{empty};
  for (int m = 1; m <= max_edges; ++m) {
    std::map<uint64_t, Graph> next;
    for (const auto& [code, g] : level) {
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          auto edges = g.edges;
          edges.emplace_back(u, v);
          Graph bigger = make_graph(n, std::move(edges));
          const uint64_t bc = canonical_code(bigger);
          if (!next.count(bc)) next.emplace(bc, canonical_form(bigger));
        }
    }
    for (const auto& [code, g] : next) out.push_back(g);
    level = std::move(next);
    if (level.empty()) break;
  }
  return out;
}

}  // namespace onep
