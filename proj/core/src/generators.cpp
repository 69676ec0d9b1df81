#include "grove/generators.hpp"

#include <stdexcept>
#include <string>

#include "grove/errors.hpp"
#include "grove/rng.hpp"

namespace grove {

namespace {

void check_budget(std::int64_t vertices, std::int64_t max_vertices) {
  if (vertices > max_vertices)
    throw BudgetError("generator would create " + std::to_string(vertices) +
                      " vertices, budget is " + std::to_string(max_vertices));
}

// Sum of l^0 + ... + l^k with overflow guard against the given cap.
std::int64_t geometric_total(int k, std::int64_t l, std::int64_t cap) {
  std::int64_t total = 0, power = 1;
  for (int i = 0; i <= k; ++i) {
    total += power;
    if (total > cap) return cap + 1;
    if (i < k) {
      if (power > cap / l + 1) return cap + 1;
      power *= l;
    }
  }
  return total;
}

}  // namespace

std::int64_t branching_vertex_count(int k, int l) {
  return geometric_total(k, l, kDefaultVertexBudget * 8);
}

std::int64_t t_tree_vertex_count(int k, int l) {
  std::int64_t b = branching_vertex_count(k, l);
  std::int64_t leaves = 1;
  for (int i = 0; i < k; ++i) leaves *= l;
  return b + leaves * static_cast<std::int64_t>(k) * l;
}

LevelDigraph level_digraph(int k, int d, std::int64_t max_vertices) {
  if (k < 1 || d < 1) throw std::invalid_argument("level digraph needs k, d >= 1");

  std::vector<std::int64_t> level_size(k + 1), offset(k + 2, 0);
  std::int64_t power = 1;
  for (int i = 0; i <= k; ++i) {
    if (power > max_vertices / d + 1)
      throw BudgetError("level digraph size overflows the vertex budget");
    power *= d;
    level_size[i] = power;
    offset[i + 1] = offset[i] + power;
  }
  check_budget(offset[k + 1], max_vertices);

  const int n = static_cast<int>(offset[k + 1]);
  LevelDigraph res;
  res.k = k;
  res.d = d;
  res.level_of.resize(n);
  res.index_in_level.resize(n);
  for (int i = 0; i <= k; ++i)
    for (std::int64_t j = 0; j < level_size[i]; ++j) {
      res.level_of[offset[i] + j] = i;
      res.index_in_level[offset[i] + j] = static_cast<int>(j + 1);
    }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(offset[k + 1]) * d);
  for (int i = 0; i < k; ++i)
    for (std::int64_t j = 0; j < level_size[i]; ++j)
      for (int t = 0; t < d; ++t)
        edges.emplace_back(static_cast<int>(offset[i] + j),
                           static_cast<int>(offset[i + 1] + j * d + t));
  for (std::int64_t j = 0; j < level_size[k]; ++j)
    for (int t = 0; t < d; ++t)
      edges.emplace_back(static_cast<int>(offset[k] + j), t);

  res.graph = Digraph::from_edges(n, edges);
  return res;
}

OrientedTree out_branching(int k, int l, std::int64_t max_vertices) {
  if (k < 0 || l < 1)
    throw std::invalid_argument("branching needs k >= 0, l >= 1");
  std::int64_t total = geometric_total(k, l, max_vertices);
  check_budget(total, max_vertices);

  std::vector<std::pair<int, int>> edges;
  std::int64_t level_start = 0, level_count = 1;
  for (int i = 0; i < k; ++i) {
    std::int64_t next_start = level_start + level_count;
    for (std::int64_t p = 0; p < level_count; ++p)
      for (int t = 0; t < l; ++t)
        edges.emplace_back(static_cast<int>(level_start + p),
                           static_cast<int>(next_start + p * l + t));
    level_start = next_start;
    level_count *= l;
  }
  return OrientedTree::from_edges(static_cast<int>(total), edges);
}

OrientedTree spider(int k, int l, std::int64_t max_vertices) {
  if (k < 1 || l < 1) throw std::invalid_argument("spider needs k, l >= 1");
  std::int64_t total = static_cast<std::int64_t>(k) * l + 1;
  check_budget(total, max_vertices);

  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < l; ++j) {
    const int base = j * k + 1;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(base + i, base + i + 1);
    edges.emplace_back(base + k - 1, 0);
  }
  return OrientedTree::from_edges(static_cast<int>(total), edges);
}

OrientedTree t_tree(int k, int l, std::int64_t max_vertices) {
  if (k < 1 || l < 1) throw std::invalid_argument("t_tree needs k, l >= 1");
  std::int64_t b_total = geometric_total(k, l, max_vertices);
  check_budget(b_total, max_vertices);
  std::int64_t leaves = 1;
  for (int i = 0; i < k; ++i) leaves *= l;
  std::int64_t total = b_total + leaves * static_cast<std::int64_t>(k) * l;
  check_budget(total, max_vertices);

  auto branching = out_branching(k, l, max_vertices);
  auto edges = branching.digraph().edges();
  const std::int64_t leaf_start = b_total - leaves;
  for (std::int64_t j = 0; j < leaves; ++j) {
    const int center = static_cast<int>(leaf_start + j);
    const std::int64_t spider_base = b_total + j * k * l;
    for (int r = 0; r < l; ++r) {
      const int ray_base = static_cast<int>(spider_base + r * k);
      for (int i = 0; i + 1 < k; ++i)
        edges.emplace_back(ray_base + i, ray_base + i + 1);
      edges.emplace_back(ray_base + k - 1, center);
    }
  }
  return OrientedTree::from_edges(static_cast<int>(total), edges);
}

Digraph complete_digraph(int n) {
  if (n < 1) throw std::invalid_argument("complete digraph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) edges.emplace_back(u, v);
  return Digraph::from_edges(n, edges);
}

Digraph regular_tournament(int n) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("regular tournament needs odd n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= (n - 1) / 2; ++j) edges.emplace_back(i, (i + j) % n);
  return Digraph::from_edges(n, edges);
}

Digraph random_min_outdegree(int n, int d, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (d < 0 || d >= n)
    throw std::invalid_argument("need 0 <= d < n for exact out-degree d");
  SeededRng rng(seed);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * d);
  std::vector<int> candidates(n - 1);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < n - 1; ++i) candidates[i] = i < v ? i : i + 1;
    for (int i = 0; i < d; ++i) {
      int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1 - i)));
      std::swap(candidates[i], candidates[j]);
      edges.emplace_back(v, candidates[i]);
    }
  }
  return Digraph::from_edges(n, edges);
}

}  // namespace grove
