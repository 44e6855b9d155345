#include "onep/planarity.hpp"

#include <algorithm>
#include <cassert>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace onep {

namespace {

// Invokes fn(a, b) for every dart a -> b of the face, segment by segment.
template <typename Fn>
void for_each_dart(const FaceWalk& f, Fn&& fn) {
  for (size_t s = 0; s < f.segment_starts.size(); ++s) {
    const size_t lo = f.segment_starts[s];
    const size_t hi = s + 1 < f.segment_starts.size() ? f.segment_starts[s + 1] : f.verts.size();
    if (hi - lo < 2) continue;  // isolated vertex, no darts
    for (size_t i = lo; i < hi; ++i)
      fn(f.verts[i], f.verts[i + 1 == hi ? lo : i + 1]);
  }
}

}  // namespace

bool FaceWalk::touches(int v) const {
  return std::find(verts.begin(), verts.end(), v) != verts.end();
}

bool FaceWalk::contains_dart(int u, int v) const {
  bool found = false;
  for_each_dart(*this, [&](int a, int b) { found |= (a == u && b == v); });
  return found;
}

size_t FaceWalk::dart_count() const {
  size_t k = 0;
  for_each_dart(*this, [&](int, int) { ++k; });
  return k;
}

std::vector<Edge> FaceWalk::edge_set() const {
  std::vector<Edge> out;
  for_each_dart(*this, [&](int a, int b) { out.push_back(make_edge(a, b)); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Boolean planarity: left-right criterion with reusable scratch buffers.
// ---------------------------------------------------------------------------

bool PlanarityTester::planar(int n, const std::vector<Edge>& edges) {
  const int m = static_cast<int>(edges.size());
  if (n < 5 || m < 9) return true;
  if (m > 3 * n - 6) return false;
  return run_core(n, edges);
}

bool PlanarityTester::conflicting(const Interval& i, int eid) const {
  return !i.empty() && i.high >= 0 && lowpt_[i.high] > lowpt_[eid];
}

int PlanarityTester::pair_lowest(const ConflictPair& p) const {
  if (p.left.empty()) return lowpt_[p.right.low];
  if (p.right.empty()) return lowpt_[p.left.low];
  return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
}

bool PlanarityTester::run_core(int n, const std::vector<Edge>& edges) {
  n_ = n;
  m_ = static_cast<int>(edges.size());

  adj_head_.assign(n + 1, 0);
  for (const auto& [u, v] : edges) {
    ++adj_head_[u + 1];
    ++adj_head_[v + 1];
  }
  for (int v = 0; v < n; ++v) adj_head_[v + 1] += adj_head_[v];
  adj_to_.resize(2 * m_);
  adj_eid_.resize(2 * m_);
  {
    std::vector<int> fill(adj_head_.begin(), adj_head_.end() - 1);
    for (int e = 0; e < m_; ++e) {
      const auto& [u, v] = edges[e];
      adj_to_[fill[u]] = v;
      adj_eid_[fill[u]++] = e;
      adj_to_[fill[v]] = u;
      adj_eid_[fill[v]++] = e;
    }
  }

  oriented_.assign(m_, 0);
  skip_init_.assign(2 * m_, 0);
  to_of_.assign(m_, -1);
  from_of_.assign(m_, -1);
  lowpt_.assign(m_, 0);
  lowpt2_.assign(m_, 0);
  nesting_.assign(m_, 0);
  ref_.assign(m_, -1);
  lowpt_edge_.assign(m_, -1);
  stack_bottom_.assign(m_, 0);
  height_.assign(n, -1);
  parent_eid_.assign(n, -1);
  next_index_.assign(n, 0);
  roots_.clear();
  s_.clear();

  // Phase 1: DFS orientation, lowpoints, nesting depth.
  for (int root = 0; root < n; ++root) {
    if (height_[root] != -1) continue;
    height_[root] = 0;
    roots_.push_back(root);
    dfs_stack_.assign(1, root);
    while (!dfs_stack_.empty()) {
      const int v = dfs_stack_.back();
      dfs_stack_.pop_back();
      const int pe = parent_eid_[v];
      const int base = adj_head_[v];
      const int deg = adj_head_[v + 1] - base;
      bool descend = false;
      for (int i = next_index_[v]; i < deg; ++i) {
        const int w = adj_to_[base + i];
        const int eid = adj_eid_[base + i];
        if (!skip_init_[base + i]) {
          if (oriented_[eid]) {
            ++next_index_[v];
            continue;
          }
          oriented_[eid] = 1;
          from_of_[eid] = v;
          to_of_[eid] = w;
          lowpt_[eid] = height_[v];
          lowpt2_[eid] = height_[v];
          if (height_[w] == -1) {  // tree edge: descend, revisit v later
            parent_eid_[w] = eid;
            height_[w] = height_[v] + 1;
            dfs_stack_.push_back(v);
            dfs_stack_.push_back(w);
            skip_init_[base + i] = 1;
            descend = true;
            break;
          }
          lowpt_[eid] = height_[w];  // back edge
        }
        nesting_[eid] = 2 * lowpt_[eid] + (lowpt2_[eid] < height_[v] ? 1 : 0);
        if (pe >= 0) {  // fold child lowpoints into the parent edge
          if (lowpt_[eid] < lowpt_[pe]) {
            lowpt2_[pe] = std::min(lowpt_[pe], lowpt2_[eid]);
            lowpt_[pe] = lowpt_[eid];
          } else if (lowpt_[eid] > lowpt_[pe]) {
            lowpt2_[pe] = std::min(lowpt2_[pe], lowpt_[eid]);
          } else {
            lowpt2_[pe] = std::min(lowpt2_[pe], lowpt2_[eid]);
          }
        }
        ++next_index_[v];
      }
      (void)descend;
    }
  }

  // Outgoing adjacency sorted by nesting depth.
  out_head_.assign(n + 1, 0);
  for (int e = 0; e < m_; ++e) ++out_head_[from_of_[e] + 1];
  for (int v = 0; v < n; ++v) out_head_[v + 1] += out_head_[v];
  out_to_.resize(m_);
  out_eid_.resize(m_);
  {
    std::vector<int> fill(out_head_.begin(), out_head_.end() - 1);
    for (int e = 0; e < m_; ++e) {
      const int v = from_of_[e];
      out_to_[fill[v]] = to_of_[e];
      out_eid_[fill[v]++] = e;
    }
  }
  for (int v = 0; v < n; ++v) {
    const int lo = out_head_[v], hi = out_head_[v + 1];
    std::vector<int> idx(out_eid_.begin() + lo, out_eid_.begin() + hi);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return nesting_[a] < nesting_[b]; });
    for (int i = lo; i < hi; ++i) {
      out_eid_[i] = idx[i - lo];
      out_to_[i] = to_of_[idx[i - lo]];
    }
  }

  // Phase 2: LR partition test.
  std::vector<char> skip_t(m_, 0);
  next_index_.assign(n, 0);
  for (int root : roots_) {
    dfs_stack_.assign(1, root);
    while (!dfs_stack_.empty()) {
      const int v = dfs_stack_.back();
      dfs_stack_.pop_back();
      const int pe = parent_eid_[v];
      const int base = out_head_[v];
      const int deg = out_head_[v + 1] - base;
      bool skip_final = false;
      for (int i = next_index_[v]; i < deg; ++i) {
        const int w = out_to_[base + i];
        const int eid = out_eid_[base + i];
        if (!skip_t[eid]) {
          stack_bottom_[eid] = s_.size();
          if (parent_eid_[w] == eid) {  // tree edge: descend first
            dfs_stack_.push_back(v);
            dfs_stack_.push_back(w);
            skip_t[eid] = 1;
            skip_final = true;
            break;
          }
          lowpt_edge_[eid] = eid;
          s_.push_back({Interval{}, Interval{eid, eid}});
        }
        if (lowpt_[eid] < height_[v]) {  // eid has a return edge
          if (i == 0) {
            if (pe >= 0) lowpt_edge_[pe] = lowpt_edge_[eid];
          } else if (!add_constraints(eid, pe)) {
            return false;
          }
        }
        ++next_index_[v];
      }
      if (!skip_final && pe >= 0) remove_back_edges(pe);
    }
  }
  return true;
}

bool PlanarityTester::add_constraints(int vw, int parent) {
  ConflictPair p;
  // Merge return edges of vw into p.right.
  while (s_.size() > stack_bottom_[vw]) {
    ConflictPair q = s_.back();
    s_.pop_back();
    if (!q.left.empty()) std::swap(q.left, q.right);
    if (!q.left.empty()) return false;
    if (lowpt_[q.right.low] > lowpt_[parent]) {  // merge
      if (p.right.empty())
        p.right.high = q.right.high;
      else
        ref_[p.right.low] = q.right.high;
      p.right.low = q.right.low;
    } else {  // align
      ref_[q.right.low] = lowpt_edge_[parent];
    }
    if (s_.size() == stack_bottom_[vw]) break;
  }
  // Merge conflicting return edges of earlier siblings into p.left.
  while (!s_.empty() &&
         (conflicting(s_.back().left, vw) || conflicting(s_.back().right, vw))) {
    ConflictPair q = s_.back();
    s_.pop_back();
    if (conflicting(q.right, vw)) std::swap(q.left, q.right);
    if (conflicting(q.right, vw)) return false;
    if (p.right.low >= 0) ref_[p.right.low] = q.right.high;
    if (q.right.low >= 0) p.right.low = q.right.low;
    if (p.left.empty())
      p.left.high = q.left.high;
    else
      ref_[p.left.low] = q.left.high;
    p.left.low = q.left.low;
  }
  if (!p.left.empty() || !p.right.empty()) s_.push_back(p);
  return true;
}

void PlanarityTester::remove_back_edges(int e) {
  const int u = from_of_[e];
  // Drop conflict pairs whose lowest return point is the parent.
  while (!s_.empty() && pair_lowest(s_.back()) == height_[u]) s_.pop_back();
  if (!s_.empty()) {
    ConflictPair p = s_.back();
    s_.pop_back();
    while (p.left.high >= 0 && to_of_[p.left.high] == u) p.left.high = ref_[p.left.high];
    if (p.left.high < 0 && p.left.low >= 0) {  // interval just emptied
      ref_[p.left.low] = p.right.low;
      p.left.low = -1;
    }
    while (p.right.high >= 0 && to_of_[p.right.high] == u) p.right.high = ref_[p.right.high];
    if (p.right.high < 0 && p.right.low >= 0) {
      ref_[p.right.low] = p.left.low;
      p.right.low = -1;
    }
    s_.push_back(p);
  }
  if (lowpt_[e] < height_[u]) {  // e has a return edge; record its side ref
    const int hl = s_.empty() ? -1 : s_.back().left.high;
    const int hr = s_.empty() ? -1 : s_.back().right.high;
    ref_[e] = (hl >= 0 && (hr < 0 || lowpt_[hl] > lowpt_[hr])) ? hl : hr;
  }
}

bool is_planar_boolean(const Graph& g) {
  thread_local PlanarityTester tester;
  return tester.planar(g.n, g.edges);
}

// ---------------------------------------------------------------------------
// Embedding-producing test (Boyer-Myrvold) and face machinery.
// ---------------------------------------------------------------------------

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

}  // namespace

std::optional<PlaneEmbedding> is_planar(const Graph& g) {
  BoostGraph bg(g.n);
  int idx = 0;
  for (const auto& [u, v] : g.edges)
    boost::put(boost::edge_index, bg, boost::add_edge(u, v, bg).first, idx++);
  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> order(std::max(g.n, 1));
  auto emap = boost::make_iterator_property_map(order.begin(),
                                                boost::get(boost::vertex_index, bg));
  const bool ok = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = emap);
  if (!ok) return std::nullopt;
  PlaneEmbedding emb;
  emb.rotation.assign(g.n, {});
  for (int v = 0; v < g.n; ++v)
    for (const auto& ed : order[v]) {
      const int s = static_cast<int>(boost::source(ed, bg));
      const int t = static_cast<int>(boost::target(ed, bg));
      emb.rotation[v].push_back(s == v ? t : s);
    }
  emb.outer_face = 0;
  return emb;
}

std::vector<FaceWalk> faces(const PlaneEmbedding& emb) {
  const int n = static_cast<int>(emb.rotation.size());
  // Index of u within rotation[v], for following a dart into v.
  std::vector<std::vector<std::pair<int, int>>> pos(n);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < static_cast<int>(emb.rotation[v].size()); ++i)
      pos[v].push_back({emb.rotation[v][i], i});
    std::sort(pos[v].begin(), pos[v].end());
  }
  auto index_of = [&](int v, int u) {
    auto it = std::lower_bound(pos[v].begin(), pos[v].end(), std::pair<int, int>{u, -1});
    assert(it != pos[v].end() && it->first == u);
    return it->second;
  };
  // Raw closed walks, traced from darts in lexicographic (u, v) order.
  std::vector<std::vector<char>> seen(n);
  for (int v = 0; v < n; ++v) seen[v].assign(emb.rotation[v].size(), 0);
  std::vector<std::vector<int>> raw;
  std::vector<int> walk_of_first_dart(n, -1);  // walk through (v, min neighbor)
  for (int u = 0; u < n; ++u) {
    for (const auto& [v, i] : pos[u]) {
      if (seen[u][i]) continue;
      std::vector<int> walk;
      int cu = u, ci = i;
      do {
        seen[cu][ci] = 1;
        if (emb.rotation[cu][ci] == pos[cu][0].first && ci == pos[cu][0].second)
          walk_of_first_dart[cu] = static_cast<int>(raw.size());
        walk.push_back(cu);
        const int cv = emb.rotation[cu][ci];
        const int k = index_of(cv, cu);
        const int deg = static_cast<int>(emb.rotation[cv].size());
        ci = (k + 1) % deg;
        cu = cv;
      } while (!seen[cu][ci]);
      raw.push_back(std::move(walk));
    }
  }

  if (raw.empty()) {  // no edges: one face, all vertices isolated in it
    FaceWalk f;
    for (int v = 0; v < n; ++v) {
      f.segment_starts.push_back(f.verts.size());
      f.verts.push_back(v);
    }
    return {f};
  }

  // Components over the rotation adjacency; the component of the overall
  // smallest dart hosts the others.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0 || emb.rotation[v].empty()) continue;
    comp[v] = ncomp;
    stack.push_back(v);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : emb.rotation[x])
        if (comp[y] < 0) {
          comp[y] = ncomp;
          stack.push_back(y);
        }
    }
    ++ncomp;
  }
  // Outward walk of each component: the one through its smallest dart. The
  // smallest edged vertex of component c is the first v with comp[v] == c.
  std::vector<int> outward(ncomp, -1);
  for (int v = 0; v < n; ++v)
    if (comp[v] >= 0 && outward[comp[v]] < 0) outward[comp[v]] = walk_of_first_dart[v];
  std::vector<char> absorbed(raw.size(), 0);
  for (int c = 1; c < ncomp; ++c) absorbed[outward[c]] = 1;

  std::vector<FaceWalk> out;
  for (size_t id = 0; id < raw.size(); ++id) {
    if (absorbed[id]) continue;
    FaceWalk f;
    f.segment_starts.push_back(0);
    f.verts = std::move(raw[id]);
    if (static_cast<int>(id) == outward[0]) {
      for (int c = 1; c < ncomp; ++c) {
        f.segment_starts.push_back(f.verts.size());
        const auto& w = raw[outward[c]];
        f.verts.insert(f.verts.end(), w.begin(), w.end());
      }
      for (int v = 0; v < n; ++v)
        if (emb.rotation[v].empty()) {
          f.segment_starts.push_back(f.verts.size());
          f.verts.push_back(v);
        }
    }
    out.push_back(std::move(f));
  }
  return out;
}

bool validate_embedding(const Graph& g, const PlaneEmbedding& emb) {
  if (static_cast<int>(emb.rotation.size()) != g.n) return false;
  size_t darts = 0;
  for (int v = 0; v < g.n; ++v) {
    auto rot = emb.rotation[v];
    std::sort(rot.begin(), rot.end());
    if (rot != g.adj[v]) return false;
    darts += rot.size();
  }
  if (darts != 2 * g.edges.size()) return false;
  const auto fs = faces(emb);
  size_t covered = 0;
  for (const auto& f : fs) covered += f.dart_count();
  if (covered != darts) return false;
  if (emb.outer_face < 0 || emb.outer_face >= static_cast<int>(fs.size())) return false;
  const int euler = g.n - g.edge_count() + static_cast<int>(fs.size());
  return euler == 1 + component_count(g);
}

namespace {

Graph with_apex(const Graph& g, const std::vector<int>& s) {
  std::vector<int> targets = s;
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  auto edges = g.edges;
  for (int v : targets) edges.emplace_back(v, g.n);
  return make_graph(g.n + 1, std::move(edges));
}

// Drops the apex (vertex n-1) from an apex-graph embedding.
PlaneEmbedding strip_apex(const PlaneEmbedding& e) {
  const int apex = static_cast<int>(e.rotation.size()) - 1;
  PlaneEmbedding out;
  out.rotation.assign(apex, {});
  for (int v = 0; v < apex; ++v)
    for (int u : e.rotation[v])
      if (u != apex) out.rotation[v].push_back(u);
  return out;
}

PlaneEmbedding reflected(PlaneEmbedding e) {
  for (auto& r : e.rotation) std::reverse(r.begin(), r.end());
  return e;
}

int face_touching_all(const std::vector<FaceWalk>& fs, const std::vector<int>& s) {
  for (size_t i = 0; i < fs.size(); ++i) {
    bool all = true;
    for (int v : s)
      if (!fs[i].touches(v)) {
        all = false;
        break;
      }
    if (all) return static_cast<int>(i);
  }
  return -1;
}

// Embedding of a connected (or edgeless) graph with some face covering all of
// s, found by stripping the apex; the fused apex region survives as a face.
std::optional<PlaneEmbedding> embed_connected(const Graph& g, const std::vector<int>& s) {
  auto apex_emb = s.empty() ? is_planar(g) : is_planar(with_apex(g, s));
  if (!apex_emb) return std::nullopt;
  PlaneEmbedding emb = s.empty() ? *apex_emb : strip_apex(*apex_emb);
  const int f = face_touching_all(faces(emb), s);
  if (f < 0) return std::nullopt;
  emb.outer_face = f;
  return emb;
}

}  // namespace

bool common_face_test(const Graph& g, const std::vector<int>& s) {
  if (s.empty()) return is_planar_boolean(g);
  return is_planar_boolean(with_apex(g, s));
}

std::optional<PlaneEmbedding> embed_with_common_face(const Graph& g, const std::vector<int>& s) {
  std::vector<int> want = s;
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  if (!common_face_test(g, want)) return std::nullopt;

  const auto comp = component_labels(g);
  if (component_count(g) <= 1 || g.edges.empty()) return embed_connected(g, want);

  // Per component: embed so that the walk absorbed by the shared face of
  // faces() -- the one through the component's smallest dart -- covers the
  // component's share of s. Trying the mirror image flips which side of that
  // dart's edge the walk bounds.
  PlaneEmbedding emb;
  emb.rotation.assign(g.n, {});
  const int ncomp = component_count(g);
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> verts;
    for (int v = 0; v < g.n; ++v)
      if (comp[v] == c) verts.push_back(v);
    std::vector<int> local_of(g.n, -1);
    for (size_t i = 0; i < verts.size(); ++i) local_of[verts[i]] = static_cast<int>(i);
    std::vector<Edge> local_edges;
    for (const auto& [u, v] : g.edges)
      if (comp[u] == c) local_edges.push_back(make_edge(local_of[u], local_of[v]));
    const Graph sub = make_graph(static_cast<int>(verts.size()), local_edges);
    std::vector<int> local_s;
    for (int v : want)
      if (comp[v] == c) local_s.push_back(local_of[v]);

    std::optional<PlaneEmbedding> chosen;
    if (sub.edges.empty() || local_s.empty()) {
      chosen = embed_connected(sub, local_s);
    } else {
      const int u0 = 0;  // components are relabeled order-preserving, so the
      const int v0 = sub.adj[0].front();  // smallest dart is (0, min neighbor)
      auto anchored = local_s;
      anchored.push_back(u0);
      anchored.push_back(v0);
      for (const auto& base : {embed_connected(sub, anchored), embed_connected(sub, local_s)}) {
        if (!base) continue;
        for (const auto& cand : {*base, reflected(*base)}) {
          const auto fs = faces(cand);
          for (const auto& f : fs)
            if (f.contains_dart(u0, v0)) {
              if (face_touching_all({f}, local_s) == 0) chosen = cand;
              break;
            }
          if (chosen) break;
        }
        if (chosen) break;
      }
      if (!chosen) return std::nullopt;  // placement not expressible
    }
    if (!chosen) return std::nullopt;
    for (size_t i = 0; i < verts.size(); ++i)
      for (int u : chosen->rotation[i]) emb.rotation[verts[i]].push_back(verts[u]);
  }

  const int f = face_touching_all(faces(emb), want);
  if (f < 0) return std::nullopt;
  emb.outer_face = f;
  return emb;
}

bool is_outerplanar(const Graph& g) {
  std::vector<int> all(g.n);
  for (int v = 0; v < g.n; ++v) all[v] = v;
  return common_face_test(g, all);
}

}  // namespace onep
