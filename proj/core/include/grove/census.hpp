#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grove/tree.hpp"

namespace grove {

// Complete isomorphism invariant for oriented trees: centroid-rooted
// recursive code over sorted (direction flag, child code) pairs, minimized
// over the at most two centroids.
std::string canonical_code(const OrientedTree& t);

// Canonically relabeled copy; isomorphic inputs produce identical edge lists.
OrientedTree canonical_form(const OrientedTree& t);

// Free (undirected, unlabeled) trees per vertex count, n = 1..n_max, grown by
// leaf attachment with canonical deduplication. Deterministic order.
std::vector<std::vector<std::vector<std::pair<int, int>>>> enumerate_free_trees(
    int n_max);

// All oriented trees on n vertices up to isomorphism, canonically labeled,
// ordered by canonical code.
std::vector<OrientedTree> enumerate_oriented_trees(int n);

}  // namespace grove
