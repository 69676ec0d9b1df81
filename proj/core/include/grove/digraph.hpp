#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "grove/vertex_set.hpp"

namespace grove {

// Loop-free directed graph on dense vertex indices [0, n). Antiparallel edge
// pairs are allowed, duplicate edges are not. Immutable once built, so values
// can be shared freely between threads.
class Digraph {
 public:
  Digraph() = default;

  // Validates every endpoint, rejects loops and duplicates.
  static Digraph from_edges(int vertex_count,
                            const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return m_; }

  const std::vector<int>& out(int v) const { return out_[v]; }  // sorted
  const std::vector<int>& in(int v) const { return in_[v]; }    // sorted
  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
  bool has_edge(int u, int v) const;

  std::vector<std::pair<int, int>> edges() const;  // lexicographic

  VertexSet out_neighbors(int v) const;  // checks the vertex index
  VertexSet in_neighbors(int v) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

// Minimum out-degree; rejects the empty graph.
int min_out_degree(const Digraph& g);

// True iff no antiparallel pair (u,v),(v,u) exists.
bool is_oriented(const Digraph& g);

struct InducedSubgraph {
  Digraph graph;
  std::vector<int> to_parent;  // new index -> original vertex
};
InducedSubgraph induced_subgraph(const Digraph& g, const VertexSet& keep);

// Spanning subgraph in which every vertex keeps exactly its d smallest
// out-neighbors; requires min_out_degree(g) >= d.
Digraph prune_to_exact_outdegree(const Digraph& g, int d);

// Number of triples (x, y, z) with x in `from`, y in `mid`, z in `to`, all
// three pairwise distinct, and edges (x,y), (y,z) present. A 2-edge walk with
// x == z is not a path and is not counted.
std::int64_t count_two_paths(const Digraph& g, const VertexSet& from,
                             const VertexSet& mid, const VertexSet& to);

}  // namespace grove
