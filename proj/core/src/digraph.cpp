#include "grove/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace grove {

Digraph Digraph::from_edges(int vertex_count,
                            const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw std::invalid_argument("loop edge at " + std::to_string(u));
  }
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1])
      throw std::invalid_argument("duplicate edge " +
                                  std::to_string(sorted[i].first) + " " +
                                  std::to_string(sorted[i].second));

  Digraph g;
  g.n_ = vertex_count;
  g.m_ = static_cast<std::int64_t>(sorted.size());
  g.out_.assign(vertex_count, {});
  g.in_.assign(vertex_count, {});
  for (const auto& [u, v] : sorted) {
    g.out_[u].push_back(v);
    g.in_[v].push_back(u);
  }
  for (auto& a : g.in_) std::sort(a.begin(), a.end());
  return g;
}

bool Digraph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::vector<std::pair<int, int>> Digraph::edges() const {
  std::vector<std::pair<int, int>> es;
  es.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : out_[u]) es.emplace_back(u, v);
  return es;
}

VertexSet Digraph::out_neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("invalid vertex index");
  VertexSet s(n_);
  for (int u : out_[v]) s.insert(u);
  return s;
}

VertexSet Digraph::in_neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("invalid vertex index");
  VertexSet s(n_);
  for (int u : in_[v]) s.insert(u);
  return s;
}

int min_out_degree(const Digraph& g) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("min out-degree of an empty graph");
  int d = g.out_degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) d = std::min(d, g.out_degree(v));
  return d;
}

bool is_oriented(const Digraph& g) {
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.out(u))
      if (g.has_edge(v, u)) return false;
  return true;
}

InducedSubgraph induced_subgraph(const Digraph& g, const VertexSet& keep) {
  if (keep.universe() != g.vertex_count())
    throw std::invalid_argument("vertex set universe mismatch");
  InducedSubgraph res;
  res.to_parent = keep.to_vector();
  std::vector<int> to_child(g.vertex_count(), -1);
  for (std::size_t i = 0; i < res.to_parent.size(); ++i)
    to_child[res.to_parent[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (int u : res.to_parent)
    for (int v : g.out(u))
      if (to_child[v] >= 0) edges.emplace_back(to_child[u], to_child[v]);
  res.graph = Digraph::from_edges(static_cast<int>(res.to_parent.size()), edges);
  return res;
}

Digraph prune_to_exact_outdegree(const Digraph& g, int d) {
  if (d < 0) throw std::invalid_argument("negative out-degree target");
  if (min_out_degree(g) < d)
    throw std::invalid_argument("minimum out-degree below target");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(g.vertex_count()) * d);
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int i = 0; i < d; ++i) edges.emplace_back(u, g.out(u)[i]);
  return Digraph::from_edges(g.vertex_count(), edges);
}

std::int64_t count_two_paths(const Digraph& g, const VertexSet& from,
                             const VertexSet& mid, const VertexSet& to) {
  if (from.universe() != g.vertex_count() || mid.universe() != g.vertex_count() ||
      to.universe() != g.vertex_count())
    throw std::invalid_argument("vertex set universe mismatch");
  std::int64_t total = 0;
  mid.for_each([&](int y) {
    std::int64_t heads = 0;
    for (int x : g.in(y))
      if (from.contains(x)) ++heads;
    std::int64_t tails = 0, repeats = 0;
    for (int z : g.out(y))
      if (to.contains(z)) {
        ++tails;
        if (from.contains(z) && g.has_edge(z, y)) ++repeats;  // x == z walks
      }
    total += heads * tails - repeats;
  });
  return total;
}

}  // namespace grove
