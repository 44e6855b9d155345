#pragma once

#include <optional>
#include <vector>

#include "onep/graph.hpp"

namespace onep {

// Combinatorial embedding: per-vertex cyclic neighbor order plus a designated
// outer face (an index into faces()). Face ids are assigned in discovery
// order while tracing darts lexicographically, so they are deterministic.
struct PlaneEmbedding {
  std::vector<std::vector<int>> rotation;
  int outer_face = 0;
};

// Face of the embedding. For connected graphs a face is a single closed walk:
// verts[i] -> verts[i+1 mod size] are its boundary darts. A face may carry
// several closed walks when the graph is disconnected (the region shared by
// the components); segment_starts marks where each closed walk begins. An
// isolated vertex appears as a one-element segment with no darts.
struct FaceWalk {
  std::vector<int> verts;
  std::vector<size_t> segment_starts;

  bool touches(int v) const;
  bool contains_dart(int u, int v) const;
  size_t dart_count() const;
  std::vector<Edge> edge_set() const;  // distinct undirected boundary edges
};

// Embedding-producing planarity test (absent iff nonplanar).
std::optional<PlaneEmbedding> is_planar(const Graph& g);

// Boolean-only test; the solver hot path. Left-right criterion.
bool is_planar_boolean(const Graph& g);

// Reusable scratch for tight loops; planar() matches is_planar_boolean.
class PlanarityTester {
 public:
  bool planar(int n, const std::vector<Edge>& edges);

 private:
  bool run_core(int n, const std::vector<Edge>& edges);

  struct Interval {
    int low = -1, high = -1;
    bool empty() const { return low < 0 && high < 0; }
  };
  struct ConflictPair {
    Interval left, right;
  };

  bool conflicting(const Interval& i, int eid) const;
  int pair_lowest(const ConflictPair& p) const;
  bool add_constraints(int vw, int parent);
  void remove_back_edges(int e);

  int n_ = 0, m_ = 0;
  std::vector<int> adj_head_, adj_to_, adj_eid_;
  std::vector<int> out_head_, out_to_, out_eid_;
  std::vector<char> oriented_, skip_init_;
  std::vector<int> to_of_, from_of_, lowpt_, lowpt2_, nesting_, ref_, lowpt_edge_;
  std::vector<size_t> stack_bottom_;
  std::vector<int> height_, parent_eid_, next_index_;
  std::vector<int> roots_, dfs_stack_;
  std::vector<ConflictPair> s_;
};

// All faces of the embedding; each dart (edge side) appears in exactly one
// face and the count satisfies |V| - |E| + |F| = 1 + components. Components
// beyond the first are drawn inside the face holding the lexicographically
// smallest dart: that face absorbs, per extra component, the walk through the
// component's own smallest dart (its outward boundary), and every isolated
// vertex. Face ids follow dart discovery order, so face 0 is that outer
// candidate; the list is never empty.
std::vector<FaceWalk> faces(const PlaneEmbedding& emb);

// Rotation lists are permutations of the adjacency lists and the face count
// satisfies Euler's formula.
bool validate_embedding(const Graph& g, const PlaneEmbedding& emb);

// True iff g has a planar embedding with every vertex of s on one face
// (planarity of g plus an apex adjacent to all of s).
bool common_face_test(const Graph& g, const std::vector<int>& s);

// The witness embedding for common_face_test, with outer_face set to a face
// covering all of s. Exact for connected graphs. For disconnected graphs the
// shared region is pinned to the fixed merge convention of faces(), which
// cannot express every placement; absent then means "no embedding in this
// representation", even though common_face_test may hold.
std::optional<PlaneEmbedding> embed_with_common_face(const Graph& g, const std::vector<int>& s);

bool is_outerplanar(const Graph& g);

}  // namespace onep
