#pragma once

#include <cstdint>
#include <vector>

#include "grove/digraph.hpp"
#include "grove/tree.hpp"

namespace grove {

inline constexpr std::int64_t kDefaultVertexBudget = 1'000'000;

// Level digraph: d disjoint copies of the depth-k complete d-ary
// out-arborescence, plus every (leaf, root) edge. Vertices are numbered
// level-major; level i holds d^(i+1) vertices.
struct LevelDigraph {
  Digraph graph;
  int k = 0;
  int d = 0;
  std::vector<int> level_of;        // vertex -> level in [0, k]
  std::vector<int> index_in_level;  // vertex -> 1-based index within level
};

LevelDigraph level_digraph(int k, int d,
                           std::int64_t max_vertices = kDefaultVertexBudget);

// Complete l-ary out-arborescence of depth k, numbered level-major with the
// root at 0.
OrientedTree out_branching(int k, int l,
                           std::int64_t max_vertices = kDefaultVertexBudget);

// l vertex-disjoint directed in-paths (rays) of length k sharing their final
// vertex. Centre is vertex 0; ray j occupies j*k+1 .. j*k+k, outermost first.
OrientedTree spider(int k, int l,
                    std::int64_t max_vertices = kDefaultVertexBudget);

// out_branching(k, l) with every leaf identified with the centre of a private
// spider(k, l). The branching keeps its numbering; ray vertices follow.
OrientedTree t_tree(int k, int l,
                    std::int64_t max_vertices = kDefaultVertexBudget);

Digraph complete_digraph(int n);

// Rotational tournament: i -> i+1, ..., i+(n-1)/2 (mod n); n must be odd.
Digraph regular_tournament(int n);

// Every vertex independently receives d distinct out-neighbors drawn
// uniformly without replacement; deterministic for a given seed, and the
// minimum out-degree is exactly d. Requires d < n.
Digraph random_min_outdegree(int n, int d, std::uint64_t seed);

// Vertex counts of the generated trees, exposed for embedders and tests.
std::int64_t branching_vertex_count(int k, int l);
std::int64_t t_tree_vertex_count(int k, int l);

}  // namespace grove
