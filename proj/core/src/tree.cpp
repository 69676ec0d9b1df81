#include "grove/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace grove {

OrientedTree OrientedTree::from_digraph(Digraph g) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (g.edge_count() != n - 1)
    throw std::invalid_argument("tree must have exactly n-1 edges");
  std::vector<std::vector<int>> und(n);
  for (int u = 0; u < n; ++u)
    for (int v : g.out(u)) {
      if (g.has_edge(v, u))
        throw std::invalid_argument("antiparallel pair in tree");
      und[u].push_back(v);
      und[v].push_back(u);
    }
  for (auto& a : und) std::sort(a.begin(), a.end());

  // connectivity
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : und[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  if (reached != n) throw std::invalid_argument("tree is not connected");
  return OrientedTree(std::move(g), std::move(und));
}

OrientedTree OrientedTree::from_edges(
    int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  return from_digraph(Digraph::from_edges(vertex_count, edges));
}

std::vector<int> height_function(const OrientedTree& t) {
  const int n = t.vertex_count();
  std::vector<int> h(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int lo = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : t.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        h[u] = t.digraph().has_edge(v, u) ? h[v] + 1 : h[v] - 1;
        lo = std::min(lo, h[u]);
        stack.push_back(u);
      }
  }
  for (int& x : h) x -= lo;
  return h;
}

VertexSet hub_set(const OrientedTree& t) {
  VertexSet s(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v)
    if (t.digraph().in_degree(v) >= 2) s.insert(v);
  return s;
}

bool is_grounded(const OrientedTree& t) {
  const auto h = height_function(t);
  int level = -1;
  bool ok = true;
  hub_set(t).for_each([&](int v) {
    if (level < 0)
      level = h[v];
    else if (h[v] != level)
      ok = false;
  });
  return ok;
}

bool is_out_arborescence(const OrientedTree& t) {
  for (int v = 0; v < t.vertex_count(); ++v)
    if (t.digraph().in_degree(v) > 1) return false;
  return true;
}

bool is_antidirected(const OrientedTree& t) {
  for (int v = 0; v < t.vertex_count(); ++v)
    if (t.digraph().in_degree(v) > 0 && t.digraph().out_degree(v) > 0)
      return false;
  return true;
}

LeafPruning prune_in_leaves(const OrientedTree& t) {
  const int n = t.vertex_count();
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n), indeg(n);
  for (int v = 0; v < n; ++v) {
    deg[v] = t.undirected_degree(v);
    indeg[v] = t.digraph().in_degree(v);
  }

  LeafPruning res{t, {}, {}, {}};
  int alive_count = n;
  for (;;) {
    int victim = -1;
    for (int v = 0; v < n && victim < 0; ++v)
      if (alive[v] && alive_count > 1 && deg[v] == 1 && indeg[v] == 1)
        victim = v;
    if (victim < 0) break;
    int parent = -1;
    for (int u : t.neighbors(victim))
      if (alive[u]) parent = u;
    res.removed.push_back(victim);
    res.removed_parent.push_back(parent);
    // the victim's only edge is (parent, victim), so survivors keep in-degrees
    alive[victim] = 0;
    --alive_count;
    --deg[parent];
  }

  VertexSet keep(n);
  for (int v = 0; v < n; ++v)
    if (alive[v]) keep.insert(v);
  auto sub = induced_subgraph(t.digraph(), keep);
  res.star = OrientedTree::from_digraph(std::move(sub.graph));
  res.star_to_orig = std::move(sub.to_parent);
  return res;
}

Subtree minimal_subtree_containing(const OrientedTree& t,
                                   const VertexSet& targets) {
  if (targets.empty())
    throw std::invalid_argument("minimal subtree of an empty set");
  const int n = t.vertex_count();
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = t.undirected_degree(v);

  // strip non-target leaves until all remaining leaves are targets
  for (;;) {
    int victim = -1;
    for (int v = 0; v < n && victim < 0; ++v)
      if (alive[v] && deg[v] <= 1 && !targets.contains(v)) victim = v;
    if (victim < 0) break;
    alive[victim] = 0;
    for (int u : t.neighbors(victim))
      if (alive[u]) --deg[u];
  }

  VertexSet keep(n);
  for (int v = 0; v < n; ++v)
    if (alive[v]) keep.insert(v);
  auto sub = induced_subgraph(t.digraph(), keep);
  return Subtree{OrientedTree::from_digraph(std::move(sub.graph)),
                 std::move(sub.to_parent)};
}

TreeClassification classify(const OrientedTree& t) {
  TreeClassification c;
  c.hub_set = hub_set(t).to_vector();
  c.grounded = is_grounded(t);
  c.antidirected = is_antidirected(t);
  c.out_arborescence = is_out_arborescence(t);
  if (c.hub_set.size() <= 1) {
    c.hub_subtree_is_out_arborescence = true;
  } else {
    auto sub = minimal_subtree_containing(t, hub_set(t));
    c.hub_subtree_is_out_arborescence = is_out_arborescence(sub.tree);
  }
  c.hub_criterion = c.grounded && c.hub_subtree_is_out_arborescence;
  return c;
}

std::string to_text(const TreeClassification& c) {
  std::string s = "hub_set:";
  for (int v : c.hub_set) s += " " + std::to_string(v);
  s += "\n";
  auto line = [&](const char* key, bool val) {
    s += std::string(key) + ": " + (val ? "true" : "false") + "\n";
  };
  line("grounded", c.grounded);
  line("antidirected", c.antidirected);
  line("out_arborescence", c.out_arborescence);
  line("hub_subtree_is_out_arborescence", c.hub_subtree_is_out_arborescence);
  line("hub_criterion", c.hub_criterion);
  return s;
}

}  // namespace grove
