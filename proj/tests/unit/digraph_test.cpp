#include <doctest.h>

#include <stdexcept>

#include "grove/digraph.hpp"
#include "grove/generators.hpp"
#include "grove/rng.hpp"
#include "test_util.hpp"

using namespace grove;

namespace {

// Independent oracle: enumerate all ordered vertex triples.
std::int64_t two_paths_brute(const Digraph& g, const VertexSet& x_set,
                             const VertexSet& y_set, const VertexSet& z_set) {
  std::int64_t count = 0;
  const int n = g.vertex_count();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        if (!x_set.contains(x) || !y_set.contains(y) || !z_set.contains(z))
          continue;
        if (g.has_edge(x, y) && g.has_edge(y, z)) ++count;
      }
  return count;
}

Digraph three_cycle() {
  return Digraph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
}

}  // namespace

TEST_SUITE("digraph") {

TEST_CASE("construction rejects loops, duplicates, bad endpoints") {
  CHECK_THROWS_AS(Digraph::from_edges(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph::from_edges(2, {{0, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph::from_edges(2, {{0, 2}}), std::invalid_argument);
  // antiparallel pairs are fine
  CHECK(Digraph::from_edges(2, {{0, 1}, {1, 0}}).edge_count() == 2);
}

TEST_CASE("neighborhoods") {
  const auto single = Digraph::from_edges(2, {{0, 1}});
  CHECK(single.in_neighbors(1).to_vector() == std::vector<int>{0});
  CHECK(three_cycle().out_neighbors(0).to_vector() == std::vector<int>{1});
  CHECK(complete_digraph(3).in_neighbors(2).to_vector() == std::vector<int>{0, 1});
  CHECK_THROWS_AS(single.out_neighbors(2), std::invalid_argument);
}

TEST_CASE("min out-degree") {
  CHECK(min_out_degree(complete_digraph(5)) == 4);
  CHECK(min_out_degree(level_digraph(3, 2).graph) == 2);
  CHECK(min_out_degree(Digraph::from_edges(1, {})) == 0);
  CHECK_THROWS_AS(min_out_degree(Digraph{}), std::invalid_argument);
}

TEST_CASE("oriented test") {
  CHECK_FALSE(is_oriented(complete_digraph(2)));
  CHECK(is_oriented(regular_tournament(5)));
  CHECK(is_oriented(Digraph::from_edges(4, {})));
}

TEST_CASE("induced subgraph") {
  const auto cyc = three_cycle();
  auto sub = induced_subgraph(cyc, VertexSet::of(3, {0, 1}));
  CHECK(sub.graph.vertex_count() == 2);
  CHECK(sub.graph.edges() == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(sub.to_parent == std::vector<int>{0, 1});

  auto whole = induced_subgraph(cyc, VertexSet::all(3));
  CHECK(whole.graph == cyc);
  CHECK(whole.to_parent == std::vector<int>{0, 1, 2});

  // level 0 of the (1,2) level digraph induces no edges
  auto level = level_digraph(1, 2);
  VertexSet level0(level.graph.vertex_count());
  for (int v = 0; v < level.graph.vertex_count(); ++v)
    if (level.level_of[v] == 0) level0.insert(v);
  CHECK(level0.size() == 2);
  auto top = induced_subgraph(level.graph, level0);
  CHECK(top.graph.vertex_count() == 2);
  CHECK(top.graph.edge_count() == 0);
}

TEST_CASE("prune to exact out-degree") {
  const auto k4 = complete_digraph(4);
  CHECK(prune_to_exact_outdegree(k4, 3) == k4);

  auto pruned = prune_to_exact_outdegree(k4, 2);
  for (int v = 0; v < 4; ++v) CHECK(pruned.out_degree(v) == 2);
  for (const auto& [u, v] : pruned.edges()) CHECK(k4.has_edge(u, v));
  // smallest head indices survive
  CHECK(pruned.out(3) == std::vector<int>{0, 1});

  CHECK(prune_to_exact_outdegree(k4, 0).edge_count() == 0);
  CHECK_THROWS_AS(prune_to_exact_outdegree(k4, 4), std::invalid_argument);
}

TEST_CASE("two-path counting on fixed graphs") {
  const auto all3 = VertexSet::all(3);
  CHECK(count_two_paths(three_cycle(), all3, all3, all3) == 3);
  CHECK(count_two_paths(complete_digraph(3), all3, all3, all3) == 6);

  // middle vertices that are sinks contribute nothing
  const auto star_in = Digraph::from_edges(4, {{1, 0}, {2, 0}, {3, 0}});
  CHECK(count_two_paths(star_in, VertexSet::all(4), VertexSet::of(4, {0}),
                        VertexSet::all(4)) == 0);
}

TEST_CASE("degree sums equal the edge count") {
  SeededRng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(12));
    const auto g = test::random_digraph(n, rng);
    std::int64_t out_sum = 0, in_sum = 0;
    for (int v = 0; v < n; ++v) {
      out_sum += g.out_degree(v);
      in_sum += g.in_degree(v);
    }
    CHECK(out_sum == g.edge_count());
    CHECK(in_sum == g.edge_count());
  }
}

TEST_CASE("two-path counting matches the triple-enumeration oracle") {
  SeededRng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(9));  // up to 10 vertices
    const auto g = test::random_digraph(n, rng);
    VertexSet x(n), y(n), z(n);
    for (int v = 0; v < n; ++v) {
      if (rng.below(2)) x.insert(v);
      if (rng.below(2)) y.insert(v);
      if (rng.below(2)) z.insert(v);
    }
    CHECK(count_two_paths(g, x, y, z) == two_paths_brute(g, x, y, z));
    const auto all = VertexSet::all(n);
    CHECK(count_two_paths(g, all, all, all) == two_paths_brute(g, all, all, all));
  }
}

TEST_CASE("two-path counting is additive over a middle partition") {
  SeededRng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(8));
    const auto g = test::random_digraph(n, rng);
    const auto all = VertexSet::all(n);
    VertexSet y1(n), y2(n);
    for (int v = 0; v < n; ++v) (rng.below(2) ? y1 : y2).insert(v);
    CHECK(count_two_paths(g, all, set_union(y1, y2), all) ==
          count_two_paths(g, all, y1, all) + count_two_paths(g, all, y2, all));
  }
}

}  // TEST_SUITE
