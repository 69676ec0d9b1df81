#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grove/digraph.hpp"
#include "grove/embedding.hpp"

namespace grove {

// Orientation of an undirected tree: connected, n-1 edges, no antiparallel
// pairs. Construction validates all three.
class OrientedTree {
 public:
  static OrientedTree from_digraph(Digraph g);
  static OrientedTree from_edges(int vertex_count,
                                 const std::vector<std::pair<int, int>>& edges);

  const Digraph& digraph() const { return g_; }
  int vertex_count() const { return g_.vertex_count(); }
  const std::vector<int>& neighbors(int v) const { return und_[v]; }  // sorted
  int undirected_degree(int v) const {
    return static_cast<int>(und_[v].size());
  }

  friend bool operator==(const OrientedTree&, const OrientedTree&) = default;

 private:
  OrientedTree(Digraph g, std::vector<std::vector<int>> und)
      : g_(std::move(g)), und_(std::move(und)) {}

  Digraph g_;
  std::vector<std::vector<int>> und_;
};

// Integer level per vertex with height[v] == height[u] + 1 along every edge
// (u, v); normalized so the minimum is 0. Every oriented tree admits one.
std::vector<int> height_function(const OrientedTree& t);

// Vertices of in-degree at least 2.
VertexSet hub_set(const OrientedTree& t);

// True iff the height function is constant on the hub set.
bool is_grounded(const OrientedTree& t);

bool is_out_arborescence(const OrientedTree& t);

// No directed path of length 2.
bool is_antidirected(const OrientedTree& t);

struct LeafPruning {
  OrientedTree star;                // input minus in-degree-1 leaves, reindexed
  std::vector<int> star_to_orig;    // star index -> original vertex
  std::vector<int> removed;         // original ids in removal order
  std::vector<int> removed_parent;  // tail of the removed leaf's in-edge
};

// Iteratively removes leaves (undirected degree 1) of in-degree 1 until none
// remain. Surviving vertices keep their in-degrees.
LeafPruning prune_in_leaves(const OrientedTree& t);

struct Subtree {
  OrientedTree tree;
  std::vector<int> to_parent;
};

// Union of all tree paths between members of `targets` (nonempty).
Subtree minimal_subtree_containing(const OrientedTree& t,
                                   const VertexSet& targets);

struct TreeClassification {
  std::vector<int> hub_set;  // ascending
  bool grounded = false;
  bool antidirected = false;
  bool out_arborescence = false;
  bool hub_subtree_is_out_arborescence = false;  // vacuously true for <= 1 hub
  bool hub_criterion = false;  // grounded && hub_subtree_is_out_arborescence
};

TreeClassification classify(const OrientedTree& t);

// Fixed-order "key: value" lines; hub_set ascending.
std::string to_text(const TreeClassification& c);

struct TklEmbedding {
  int k = 0;
  int l = 0;
  TreeEmbedding map;  // into t_tree(k, l)
};

// Smallest (k, l), in increasing lexicographic order, such that the composite
// tree t_tree(k, l) contains t; requires t to have no in-degree-1 leaves, at
// least two hubs, and hub_criterion. Hubs necessarily land on spider centres.
TklEmbedding embed_into_tkl(const OrientedTree& t,
                            std::int64_t max_host_vertices = 200000);

}  // namespace grove
