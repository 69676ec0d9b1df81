#include "grove/census.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace grove {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

std::vector<std::vector<int>> undirected_adjacency(int n, const EdgeList& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// Centroids of a tree given its undirected adjacency; one or two vertices.
std::vector<int> centroids(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 1) return {0};
  std::vector<int> size(n, 1), parent(n, -1), order;
  order.reserve(n);
  std::vector<int> stack{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        parent[u] = v;
        stack.push_back(u);
      }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) size[parent[*it]] += size[*it];

  int best = n + 1;
  std::vector<int> cents;
  for (int v = 0; v < n; ++v) {
    int heaviest = n - size[v];
    for (int u : adj[v])
      if (u != parent[v]) heaviest = std::max(heaviest, size[u]);
    if (heaviest < best) {
      best = heaviest;
      cents = {v};
    } else if (heaviest == best) {
      cents.push_back(v);
    }
  }
  return cents;
}

// dir_of(v, u): '>' when the tree edge runs v -> u, '<' otherwise, and 0 for
// the undirected variant.
std::string rooted_code(const std::vector<std::vector<int>>& adj,
                        const std::function<char(int, int)>& dir_of, int v,
                        int parent) {
  std::vector<std::string> kids;
  for (int u : adj[v]) {
    if (u == parent) continue;
    std::string entry;
    if (char c = dir_of(v, u)) entry += c;
    entry += rooted_code(adj, dir_of, u, v);
    kids.push_back(std::move(entry));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  s += ")";
  return s;
}

std::string min_code(const std::vector<std::vector<int>>& adj,
                     const std::function<char(int, int)>& dir_of) {
  std::string best;
  for (int c : centroids(adj)) {
    std::string code = rooted_code(adj, dir_of, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

// Rebuilds a tree from a code produced above; vertices get preorder ids.
EdgeList edges_from_code(const std::string& code, bool directed, int* out_n) {
  EdgeList edges;
  int next_id = 0;
  std::size_t pos = 0;
  std::function<int()> parse = [&]() -> int {
    const int id = next_id++;
    if (code[pos] != '(') throw std::logic_error("bad canonical code");
    ++pos;
    while (code[pos] != ')') {
      char dir = 0;
      if (directed) dir = code[pos++];
      const int child = parse();
      if (dir == '>' || !directed)
        edges.emplace_back(id, child);
      else
        edges.emplace_back(child, id);
    }
    ++pos;
    return id;
  };
  parse();
  *out_n = next_id;
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

std::string canonical_code(const OrientedTree& t) {
  std::vector<std::vector<int>> adj(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) adj[v] = t.neighbors(v);
  auto dir_of = [&t](int v, int u) -> char {
    return t.digraph().has_edge(v, u) ? '>' : '<';
  };
  return min_code(adj, dir_of);
}

OrientedTree canonical_form(const OrientedTree& t) {
  int n = 0;
  EdgeList edges = edges_from_code(canonical_code(t), true, &n);
  return OrientedTree::from_edges(n, edges);
}

std::vector<std::vector<EdgeList>> enumerate_free_trees(int n_max) {
  if (n_max < 1) throw std::invalid_argument("need n_max >= 1");
  std::vector<std::vector<EdgeList>> by_n(n_max + 1);
  by_n[1] = {EdgeList{}};

  auto undirected_code = [](int n, const EdgeList& edges) {
    auto adj = undirected_adjacency(n, edges);
    return min_code(adj, [](int, int) -> char { return 0; });
  };

  for (int n = 2; n <= n_max; ++n) {
    std::map<std::string, EdgeList> canon;
    for (const auto& smaller : by_n[n - 1]) {
      for (int attach = 0; attach < n - 1; ++attach) {
        EdgeList grown = smaller;
        grown.emplace_back(attach, n - 1);
        std::string code = undirected_code(n, grown);
        if (canon.count(code)) continue;
        int out_n = 0;
        canon.emplace(code, edges_from_code(code, false, &out_n));
      }
    }
    for (auto& [code, edges] : canon) by_n[n].push_back(std::move(edges));
  }
  return by_n;
}

std::vector<OrientedTree> enumerate_oriented_trees(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  auto free_trees = enumerate_free_trees(n);
  std::map<std::string, OrientedTree> canon;
  for (const auto& skeleton : free_trees[n]) {
    const int m = n - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      EdgeList oriented;
      oriented.reserve(m);
      for (int i = 0; i < m; ++i) {
        auto [u, v] = skeleton[i];
        if (mask >> i & 1)
          oriented.emplace_back(u, v);
        else
          oriented.emplace_back(v, u);
      }
      OrientedTree t = OrientedTree::from_edges(n, oriented);
      std::string code = canonical_code(t);
      if (!canon.count(code)) canon.emplace(std::move(code), canonical_form(t));
    }
  }
  std::vector<OrientedTree> out;
  out.reserve(canon.size());
  for (auto& [code, tree] : canon) out.push_back(std::move(tree));
  return out;
}

}  // namespace grove
