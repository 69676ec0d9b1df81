#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "grove/digraph.hpp"
#include "grove/embedding.hpp"
#include "grove/tree.hpp"

namespace grove {

// Checks injectivity and edge preservation of a pattern-to-host map.
bool validate_embedding(const Digraph& host, const OrientedTree& pattern,
                        const TreeEmbedding& e);

// Checks ray lengths, vertex-disjointness and edge presence.
bool validate_spider(const Digraph& host, const SpiderCertificate& c);

// Exhaustive backtracking over a connected pattern traversal with degree
// pruning. A std::nullopt result is a proof of absence. max_steps == 0 means
// unlimited; otherwise BudgetError is thrown when the step budget runs out.
std::optional<TreeEmbedding> brute_force_embed(const Digraph& host,
                                               const OrientedTree& pattern,
                                               std::uint64_t max_steps = 0);

// Same search with pattern_vertex pinned to host_vertex.
std::optional<TreeEmbedding> brute_force_embed_anchored(
    const Digraph& host, const OrientedTree& pattern, int pattern_vertex,
    int host_vertex, std::uint64_t max_steps = 0);

// Second, deliberately unsophisticated matcher: maps pattern vertices in
// index order against all host vertices with full pairwise edge checks. Kept
// independent of brute_force_embed so the two can cross-check each other.
bool naive_embed_exists(const Digraph& host, const OrientedTree& pattern);

// BFS embedding of an out-arborescence, always taking the smallest unused
// out-neighbor. Requires min_out_degree(host) >= |pattern| - 1.
TreeEmbedding greedy_out_arborescence(const Digraph& host,
                                      const OrientedTree& pattern,
                                      std::optional<int> root_image = {});

// Re-attaches pruned in-degree-1 leaves in reverse removal order, each mapped
// to a fresh out-neighbor of its parent's image.
TreeEmbedding greedy_extend(const Digraph& host, const TreeEmbedding& partial,
                            const OrientedTree& full,
                            const LeafPruning& pruning);

// Anti-monotone vertex property that is guaranteed to occur once the minimum
// out-degree reaches degree_bound.
struct CommonProperty {
  std::function<bool(const Digraph&, int)> predicate;
  int degree_bound = 0;
};

CommonProperty trivial_property();  // "v is a vertex"

struct GammaLevels {
  std::vector<VertexSet> levels;  // levels[0] = property holders, .. levels[k]
  int k = 0;
  int l = 0;
  std::int64_t threshold = 0;  // 2 * l^k
};

// levels[i] = vertices with at least 2*l^k out-neighbors in levels[i-1]. The
// predicate is evaluated once per vertex, against the full host.
GammaLevels gamma_levels(const Digraph& host, const CommonProperty& p, int k,
                         int l);

// Embeds out_branching(k, l) with every leaf image satisfying p. Success is
// guaranteed when min_out_degree(host) >= p.degree_bound + 2*k*l^k; below
// that, std::nullopt is possible.
std::optional<TreeEmbedding> branching_with_property(const Digraph& host,
                                                     const CommonProperty& p,
                                                     int k, int l);

// Produces a spider(k, h) certificate centred at the given vertex, or
// nullopt. h is the oracle's own ray count.
using SpiderOracle =
    std::function<std::optional<SpiderCertificate>(const Digraph&, int)>;

// Exhaustive anchored search for spider(k, h) centred at a vertex.
SpiderOracle brute_force_spider_oracle(int k, int h,
                                       std::uint64_t max_steps = 0);

// k = 1 extractor: an in-star with h rays exists at every vertex of
// in-degree >= h, and some vertex qualifies whenever min out-degree >= h.
SpiderOracle in_star_oracle(int h);

// Embeds t_tree(k, l): grows a branching whose leaves are spider centres per
// the oracle, then keeps l rays per centre that avoid all previously used
// vertices. Oracle failures propagate as std::nullopt.
std::optional<TreeEmbedding> find_t_tree(const Digraph& host, int k, int l,
                                         const SpiderOracle& oracle);

struct Spider2Stats {
  int d = 0;           // regularized out-degree
  bool direct = false; // built via the dense in-neighborhood branch
  int hub = -1;        // chosen centre when the local search ran
  bool halted = false; // local search stopped with no applicable move
  int halted_s = 0;    // rays held when it halted
};

// Finds spider(2, l) by out-degree regularization, an A/B in-degree split and
// a two-move local search (extend / exchange). Success is guaranteed when
// min_out_degree(host) >= spider2_degree_threshold(l); a halted search always
// satisfies s*(d+4l) >= d*(d-l).
std::optional<SpiderCertificate> find_spider2(const Digraph& host, int l,
                                              Spider2Stats* stats = nullptr);

// Smallest integer d with d*d - 2*l*d - 4*l*l >= 0, i.e. ceil((1+sqrt(5))*l).
int spider2_degree_threshold(int l);

}  // namespace grove
