#include "grove/embedders.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

#include "grove/errors.hpp"
#include "grove/generators.hpp"

namespace grove {

bool validate_embedding(const Digraph& host, const OrientedTree& pattern,
                        const TreeEmbedding& e) {
  const int np = pattern.vertex_count();
  if (static_cast<int>(e.map.size()) != np) return false;
  std::vector<char> used(host.vertex_count(), 0);
  for (int p = 0; p < np; ++p) {
    int h = e.map[p];
    if (h < 0 || h >= host.vertex_count()) return false;
    if (used[h]) return false;
    used[h] = 1;
  }
  for (int u = 0; u < np; ++u)
    for (int v : pattern.digraph().out(u))
      if (!host.has_edge(e.map[u], e.map[v])) return false;
  return true;
}

bool validate_spider(const Digraph& host, const SpiderCertificate& c) {
  if (c.center < 0 || c.center >= host.vertex_count()) return false;
  if (c.ray_length < 1) return false;
  std::vector<char> used(host.vertex_count(), 0);
  used[c.center] = 1;
  for (const auto& ray : c.rays) {
    if (static_cast<int>(ray.size()) != c.ray_length) return false;
    for (int v : ray) {
      if (v < 0 || v >= host.vertex_count() || used[v]) return false;
      used[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < ray.size(); ++i)
      if (!host.has_edge(ray[i], ray[i + 1])) return false;
    if (!host.has_edge(ray.back(), c.center)) return false;
  }
  return true;
}

namespace {

// Connected DFS traversal of the pattern, out-edges first. step[i] describes
// how the i-th pattern vertex in visit order hangs off an earlier one.
struct TraversalStep {
  int vertex;
  int parent;        // -1 for the start vertex
  bool via_out_edge; // parent -> vertex in the pattern
};

std::vector<TraversalStep> pattern_traversal(const OrientedTree& pattern,
                                             int start) {
  const int n = pattern.vertex_count();

  // subtree sizes of the undirected tree rooted at start
  std::vector<int> size(n, 1), parent(n, -1), topo;
  topo.reserve(n);
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    topo.push_back(v);
    for (int u : pattern.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        parent[u] = v;
        stack.push_back(u);
      }
  }
  for (auto it = topo.rbegin(); it != topo.rend(); ++it)
    if (parent[*it] >= 0) size[parent[*it]] += size[*it];

  // Depth-first preorder. Children hanging on out-edges go first (host
  // out-degrees bound that fan-out), then larger subtrees: constrained
  // structure must fail before the search spreads over the host's large
  // in-neighborhoods. Stability keeps equal keys in ascending vertex order.
  std::vector<TraversalStep> order;
  order.reserve(n);
  std::fill(seen.begin(), seen.end(), 0);
  seen[start] = 1;
  order.push_back({start, -1, false});
  std::function<void(int)> visit = [&](int v) {
    std::vector<TraversalStep> kids;
    for (int u : pattern.digraph().out(v))
      if (!seen[u]) kids.push_back({u, v, true});
    for (int u : pattern.digraph().in(v))
      if (!seen[u]) kids.push_back({u, v, false});
    std::stable_sort(kids.begin(), kids.end(),
                     [&](const TraversalStep& a, const TraversalStep& b) {
                       if (a.via_out_edge != b.via_out_edge)
                         return a.via_out_edge;
                       return size[a.vertex] > size[b.vertex];
                     });
    for (const auto& kid : kids) {
      seen[kid.vertex] = 1;
      order.push_back(kid);
      visit(kid.vertex);
    }
  };
  visit(start);
  return order;
}

struct BacktrackSearch {
  const Digraph& host;
  const OrientedTree& pattern;
  std::vector<TraversalStep> order;
  std::vector<int> map;        // pattern vertex -> host vertex or -1
  std::vector<char> used;      // host vertex taken
  std::uint64_t steps = 0;
  std::uint64_t max_steps = 0;

  bool feasible(int p, int h) const {
    return host.out_degree(h) >= pattern.digraph().out_degree(p) &&
           host.in_degree(h) >= pattern.digraph().in_degree(p);
  }

  void bump() {
    if (max_steps && ++steps > max_steps)
      throw BudgetError("embedding search exceeded its step budget");
    if (!max_steps) ++steps;
  }

  bool assign(std::size_t depth) {
    if (depth == order.size()) return true;
    const auto& step = order[depth];
    if (step.parent < 0) return false;  // anchored externally
    const int pimg = map[step.parent];
    const auto& candidates =
        step.via_out_edge ? host.out(pimg) : host.in(pimg);
    for (int h : candidates) {
      bump();
      if (used[h] || !feasible(step.vertex, h)) continue;
      map[step.vertex] = h;
      used[h] = 1;
      if (assign(depth + 1)) return true;
      used[h] = 0;
      map[step.vertex] = -1;
    }
    return false;
  }

  std::optional<TreeEmbedding> run(const std::vector<int>& anchors) {
    map.assign(pattern.vertex_count(), -1);
    used.assign(host.vertex_count(), 0);
    const int start = order[0].vertex;
    for (int h : anchors) {
      bump();
      if (!feasible(start, h)) continue;
      map[start] = h;
      used[h] = 1;
      if (assign(1)) {
        TreeEmbedding e{map};
        return e;
      }
      used[h] = 0;
      map[start] = -1;
    }
    return std::nullopt;
  }
};

// Start at a pattern vertex of maximal (in-degree, out-degree): its host
// candidates are the scarcest, which keeps absence proofs cheap.
int traversal_start(const OrientedTree& pattern) {
  int best = 0;
  auto key = [&](int v) {
    return std::pair(pattern.digraph().in_degree(v),
                     pattern.digraph().out_degree(v));
  };
  for (int v = 1; v < pattern.vertex_count(); ++v)
    if (key(v) > key(best)) best = v;
  return best;
}

}  // namespace

std::optional<TreeEmbedding> brute_force_embed(const Digraph& host,
                                               const OrientedTree& pattern,
                                               std::uint64_t max_steps) {
  if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  BacktrackSearch search{host, pattern, {}, {}, {}, 0, max_steps};
  search.order = pattern_traversal(pattern, traversal_start(pattern));
  std::vector<int> anchors(host.vertex_count());
  for (int h = 0; h < host.vertex_count(); ++h) anchors[h] = h;
  auto found = search.run(anchors);
  if (found && !validate_embedding(host, pattern, *found))
    throw std::logic_error("embedder produced an invalid certificate");
  return found;
}

std::optional<TreeEmbedding> brute_force_embed_anchored(
    const Digraph& host, const OrientedTree& pattern, int pattern_vertex,
    int host_vertex, std::uint64_t max_steps) {
  if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  if (pattern_vertex < 0 || pattern_vertex >= pattern.vertex_count() ||
      host_vertex < 0 || host_vertex >= host.vertex_count())
    throw std::invalid_argument("anchor out of range");
  BacktrackSearch search{host, pattern, {}, {}, {}, 0, max_steps};
  search.order = pattern_traversal(pattern, pattern_vertex);
  auto found = search.run({host_vertex});
  if (found && !validate_embedding(host, pattern, *found))
    throw std::logic_error("embedder produced an invalid certificate");
  return found;
}

namespace {

bool naive_rec(const Digraph& host, const OrientedTree& pattern,
               std::vector<int>& map, std::vector<char>& used, int p) {
  const int np = pattern.vertex_count();
  if (p == np) return true;
  for (int h = 0; h < host.vertex_count(); ++h) {
    if (used[h]) continue;
    bool ok = true;
    for (int q = 0; q < p && ok; ++q) {
      if (pattern.digraph().has_edge(q, p) && !host.has_edge(map[q], h))
        ok = false;
      if (pattern.digraph().has_edge(p, q) && !host.has_edge(h, map[q]))
        ok = false;
    }
    if (!ok) continue;
    map[p] = h;
    used[h] = 1;
    if (naive_rec(host, pattern, map, used, p + 1)) return true;
    used[h] = 0;
    map[p] = -1;
  }
  return false;
}

}  // namespace

bool naive_embed_exists(const Digraph& host, const OrientedTree& pattern) {
  if (pattern.vertex_count() > host.vertex_count()) return false;
  std::vector<int> map(pattern.vertex_count(), -1);
  std::vector<char> used(host.vertex_count(), 0);
  return naive_rec(host, pattern, map, used, 0);
}

TreeEmbedding greedy_out_arborescence(const Digraph& host,
                                      const OrientedTree& pattern,
                                      std::optional<int> root_image) {
  if (!is_out_arborescence(pattern))
    throw std::invalid_argument("pattern is not an out-arborescence");
  if (min_out_degree(host) < pattern.vertex_count() - 1)
    throw std::invalid_argument(
        "greedy embedding needs min out-degree >= |pattern| - 1");

  int root = -1;
  for (int v = 0; v < pattern.vertex_count(); ++v)
    if (pattern.digraph().in_degree(v) == 0) root = v;

  const int start = root_image.value_or(0);
  if (start < 0 || start >= host.vertex_count())
    throw std::invalid_argument("root image out of range");

  TreeEmbedding e;
  e.map.assign(pattern.vertex_count(), -1);
  std::vector<char> used(host.vertex_count(), 0);
  e.map[root] = start;
  used[start] = 1;
  std::vector<int> queue{root};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int p = queue[qi];
    for (int child : pattern.digraph().out(p)) {
      int pick = -1;
      for (int h : host.out(e.map[p]))
        if (!used[h]) {
          pick = h;
          break;
        }
      if (pick < 0)
        throw std::logic_error("greedy embedding ran out of out-neighbors");
      e.map[child] = pick;
      used[pick] = 1;
      queue.push_back(child);
    }
  }
  if (!validate_embedding(host, pattern, e))
    throw std::logic_error("embedder produced an invalid certificate");
  return e;
}

TreeEmbedding greedy_extend(const Digraph& host, const TreeEmbedding& partial,
                            const OrientedTree& full,
                            const LeafPruning& pruning) {
  if (partial.map.size() != pruning.star_to_orig.size())
    throw std::invalid_argument("partial embedding does not match the pruning");
  if (!validate_embedding(host, pruning.star, partial))
    throw std::invalid_argument("partial embedding is not valid");

  TreeEmbedding e;
  e.map.assign(full.vertex_count(), -1);
  std::vector<char> used(host.vertex_count(), 0);
  for (std::size_t s = 0; s < partial.map.size(); ++s) {
    e.map[pruning.star_to_orig[s]] = partial.map[s];
    used[partial.map[s]] = 1;
  }
  for (auto it = pruning.removed.rbegin(); it != pruning.removed.rend(); ++it) {
    const std::size_t idx = pruning.removed.rend() - it - 1;
    const int leaf = *it;
    const int parent = pruning.removed_parent[idx];
    int pick = -1;
    for (int h : host.out(e.map[parent]))
      if (!used[h]) {
        pick = h;
        break;
      }
    if (pick < 0)
      throw std::runtime_error("insufficient out-degree headroom to extend");
    e.map[leaf] = pick;
    used[pick] = 1;
  }
  if (!validate_embedding(host, full, e))
    throw std::logic_error("embedder produced an invalid certificate");
  return e;
}

CommonProperty trivial_property() {
  return CommonProperty{[](const Digraph&, int) { return true; }, 0};
}

namespace {

std::int64_t int_pow(int base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > (std::int64_t{1} << 40))
      throw BudgetError("gamma threshold overflows");
  }
  return r;
}

}  // namespace

GammaLevels gamma_levels(const Digraph& host, const CommonProperty& p, int k,
                         int l) {
  if (k < 1 || l < 2)
    throw std::invalid_argument("gamma levels need k >= 1, l >= 2");
  GammaLevels g;
  g.k = k;
  g.l = l;
  g.threshold = 2 * int_pow(l, k);
  g.levels.reserve(k + 1);

  VertexSet base(host.vertex_count());
  for (int v = 0; v < host.vertex_count(); ++v)
    if (p.predicate(host, v)) base.insert(v);
  g.levels.push_back(std::move(base));

  for (int i = 1; i <= k; ++i) {
    const VertexSet& prev = g.levels.back();
    VertexSet next(host.vertex_count());
    for (int v = 0; v < host.vertex_count(); ++v) {
      std::int64_t cnt = 0;
      for (int u : host.out(v))
        if (prev.contains(u) && ++cnt >= g.threshold) break;
      if (cnt >= g.threshold) next.insert(v);
    }
    g.levels.push_back(std::move(next));
  }
  return g;
}

std::optional<TreeEmbedding> branching_with_property(const Digraph& host,
                                                     const CommonProperty& p,
                                                     int k, int l) {
  GammaLevels g = gamma_levels(host, p, k, l);
  if (g.levels[k].empty()) return std::nullopt;

  const std::int64_t total = branching_vertex_count(k, l);
  if (total > host.vertex_count()) return std::nullopt;

  TreeEmbedding e;
  e.map.assign(static_cast<std::size_t>(total), -1);
  std::vector<char> used(host.vertex_count(), 0);
  const int root_image = g.levels[k].first();
  e.map[0] = root_image;
  used[root_image] = 1;

  std::int64_t level_start = 0, level_count = 1;
  for (int i = 0; i < k; ++i) {
    const std::int64_t next_start = level_start + level_count;
    const VertexSet& target = g.levels[k - i - 1];
    for (std::int64_t pos = 0; pos < level_count; ++pos) {
      const int w = e.map[level_start + pos];
      int taken = 0;
      for (int h : host.out(w)) {
        if (taken == l) break;
        if (used[h] || !target.contains(h)) continue;
        e.map[next_start + pos * l + taken] = h;
        used[h] = 1;
        ++taken;
      }
      if (taken < l) return std::nullopt;  // possible below the threshold
    }
    level_start = next_start;
    level_count *= l;
  }

  if (!validate_embedding(host, out_branching(k, l), e))
    throw std::logic_error("embedder produced an invalid certificate");
  return e;
}

SpiderOracle brute_force_spider_oracle(int k, int h, std::uint64_t max_steps) {
  if (k < 1 || h < 1)
    throw std::invalid_argument("spider oracle needs k, h >= 1");
  return [k, h, max_steps](const Digraph& host,
                           int center) -> std::optional<SpiderCertificate> {
    OrientedTree pattern = spider(k, h);
    auto found = brute_force_embed_anchored(host, pattern, 0, center, max_steps);
    if (!found) return std::nullopt;
    SpiderCertificate cert;
    cert.center = center;
    cert.ray_length = k;
    cert.rays.assign(h, std::vector<int>(k));
    for (int j = 0; j < h; ++j)
      for (int i = 0; i < k; ++i) cert.rays[j][i] = found->map[j * k + 1 + i];
    return cert;
  };
}

SpiderOracle in_star_oracle(int h) {
  if (h < 1) throw std::invalid_argument("in-star oracle needs h >= 1");
  return [h](const Digraph& host,
             int center) -> std::optional<SpiderCertificate> {
    if (host.in_degree(center) < h) return std::nullopt;
    SpiderCertificate cert;
    cert.center = center;
    cert.ray_length = 1;
    for (int i = 0; i < h; ++i) cert.rays.push_back({host.in(center)[i]});
    return cert;
  };
}

std::optional<TreeEmbedding> find_t_tree(const Digraph& host, int k, int l,
                                         const SpiderOracle& oracle) {
  if (k < 1 || l < 2) throw std::invalid_argument("find_t_tree needs k >= 1, l >= 2");

  // Cache one certificate per centre; the predicate below is "the oracle
  // yields a valid spider here".
  auto cache = std::make_shared<std::map<int, SpiderCertificate>>();
  CommonProperty p;
  p.predicate = [cache, &oracle, k](const Digraph& g, int v) {
    auto it = cache->find(v);
    if (it != cache->end()) return true;
    auto cert = oracle(g, v);
    if (!cert) return false;
    if (cert->center != v || cert->ray_length != k || !validate_spider(g, *cert))
      throw std::invalid_argument("spider oracle returned an invalid certificate");
    cache->emplace(v, std::move(*cert));
    return true;
  };

  auto branching = branching_with_property(host, p, k, l);
  if (!branching) return std::nullopt;

  const std::int64_t b_total = branching_vertex_count(k, l);
  std::int64_t leaves = 1;
  for (int i = 0; i < k; ++i) leaves *= l;

  TreeEmbedding e;
  e.map.assign(static_cast<std::size_t>(t_tree_vertex_count(k, l)), -1);
  std::vector<char> used(host.vertex_count(), 0);
  for (std::int64_t i = 0; i < b_total; ++i) {
    e.map[i] = branching->map[i];
    used[branching->map[i]] = 1;
  }

  const std::int64_t leaf_start = b_total - leaves;
  for (std::int64_t j = 0; j < leaves; ++j) {
    const int center = e.map[leaf_start + j];
    const SpiderCertificate& cert = cache->at(center);
    std::int64_t spider_base = b_total + j * k * l;
    int kept = 0;
    for (const auto& ray : cert.rays) {
      if (kept == l) break;
      bool clean = true;
      for (int v : ray)
        if (used[v]) {
          clean = false;
          break;
        }
      if (!clean) continue;
      for (int i = 0; i < k; ++i) {
        e.map[spider_base + static_cast<std::int64_t>(kept) * k + i] = ray[i];
        used[ray[i]] = 1;
      }
      ++kept;
    }
    if (kept < l) return std::nullopt;  // oracle rays too scarce at this scale
  }

  if (!validate_embedding(host, t_tree(k, l), e))
    throw std::logic_error("embedder produced an invalid certificate");
  return e;
}

TklEmbedding embed_into_tkl(const OrientedTree& t,
                            std::int64_t max_host_vertices) {
  if (!prune_in_leaves(t).removed.empty())
    throw std::invalid_argument("tree still has in-degree-1 leaves");
  const auto cls = classify(t);
  if (cls.hub_set.size() < 2)
    throw std::invalid_argument("tree needs at least two hubs");
  if (!cls.hub_criterion)
    throw std::invalid_argument("tree fails the hub criterion");

  const int n = t.vertex_count();
  int max_out = 0, max_in = 0;
  for (int v = 0; v < n; ++v) {
    max_out = std::max(max_out, t.digraph().out_degree(v));
    max_in = std::max(max_in, t.digraph().in_degree(v));
  }

  // Smallest (k, l) in lexicographic order; the degree filters below are
  // necessary conditions, so they never skip a feasible pair. Spider centres
  // are the only composite-tree vertices of in-degree >= 2, so hubs land on
  // them in any embedding.
  bool skipped_for_budget = false;
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      if (l < max_out || l + 1 < max_in) continue;
      const std::int64_t host_size = t_tree_vertex_count(k, l);
      if (host_size < n) continue;
      if (host_size > max_host_vertices) {
        skipped_for_budget = true;
        continue;
      }
      const OrientedTree host_tree = t_tree(k, l, max_host_vertices);
      auto found = brute_force_embed(host_tree.digraph(), t);
      if (found) return TklEmbedding{k, l, std::move(*found)};
    }
  }
  if (skipped_for_budget)
    throw BudgetError("composite-tree search exceeded the host size budget");
  throw std::logic_error("no composite tree found despite the hub criterion");
}

}  // namespace grove
