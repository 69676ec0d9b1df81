#include <algorithm>
#include <stdexcept>

#include "grove/embedders.hpp"

namespace grove {

int spider2_degree_threshold(int l) {
  if (l < 1) throw std::invalid_argument("need l >= 1");
  for (int d = 1;; ++d) {
    const std::int64_t v = static_cast<std::int64_t>(d) * d -
                           2ll * l * d - 4ll * l * l;
    if (v >= 0) return d;
  }
}

namespace {

SpiderCertificate make_cert(int center, const std::vector<int>& outer,
                            const std::vector<int>& inner, int l) {
  SpiderCertificate cert;
  cert.center = center;
  cert.ray_length = 2;
  for (int i = 0; i < l; ++i) cert.rays.push_back({outer[i], inner[i]});
  return cert;
}

}  // namespace

std::optional<SpiderCertificate> find_spider2(const Digraph& host, int l,
                                              Spider2Stats* stats) {
  if (l < 1) throw std::invalid_argument("need l >= 1");
  Spider2Stats local;
  Spider2Stats& st = stats ? *stats : local;
  st = Spider2Stats{};
  if (host.vertex_count() == 0) return std::nullopt;

  const int d = min_out_degree(host);
  st.d = d;
  if (d == 0) return std::nullopt;
  const Digraph g = prune_to_exact_outdegree(host, d);

  const int n = g.vertex_count();
  VertexSet a_side(n), b_side(n);
  for (int v = 0; v < n; ++v)
    (g.in_degree(v) >= 2 * l ? a_side : b_side).insert(v);

  // Dense branch: a centre whose in-neighborhood holds l high-in-degree
  // vertices admits a direct two-stage greedy construction.
  {
    int center = -1;
    for (int r = 0; r < n && center < 0; ++r) {
      if (!a_side.contains(r)) continue;
      int cnt = 0;
      for (int u : g.in(r))
        if (a_side.contains(u) && ++cnt == l) break;
      if (cnt == l) center = r;
    }
    if (center >= 0) {
      st.direct = true;
      std::vector<int> inner;
      for (int u : g.in(center)) {
        if (static_cast<int>(inner.size()) == l) break;
        if (a_side.contains(u)) inner.push_back(u);
      }
      std::vector<char> used(n, 0);
      used[center] = 1;
      for (int u : inner) used[u] = 1;
      std::vector<int> outer;
      for (int i = 0; i < l; ++i) {
        int pick = -1;
        for (int x : g.in(inner[i]))
          if (!used[x]) {
            pick = x;
            break;
          }
        if (pick < 0)
          throw std::logic_error("dense spider branch ran out of in-neighbors");
        used[pick] = 1;
        outer.push_back(pick);
      }
      auto cert = make_cert(center, outer, inner, l);
      if (!validate_spider(host, cert))
        throw std::logic_error("spider finder produced an invalid certificate");
      return cert;
    }
  }

  if (a_side.empty()) return std::nullopt;

  // Centre maximizing the number of 2-paths V -> B -> {a}; ties take the
  // smallest index.
  const VertexSet everyone = VertexSet::all(n);
  int hub = -1;
  std::int64_t best_score = -1;
  a_side.for_each([&](int a) {
    VertexSet self(n);
    self.insert(a);
    const std::int64_t score = count_two_paths(g, everyone, b_side, self);
    if (score > best_score) {
      best_score = score;
      hub = a;
    }
  });
  st.hub = hub;

  std::vector<int> inner, outer;  // paired: outer[i] -> inner[i] -> hub
  std::vector<char> in_inner(n, 0), in_outer(n, 0);
  auto in_state = [&](int v) { return in_inner[v] || in_outer[v]; };

  std::vector<int> hub_b_preds;  // N^-(hub) restricted to B, ascending
  for (int u : g.in(hub))
    if (b_side.contains(u)) hub_b_preds.push_back(u);

  while (static_cast<int>(inner.size()) < l) {
    const int s = static_cast<int>(inner.size());
    bool moved = false;

    // extend: a fresh path x -> r -> hub with r in B outside the state
    for (int r : hub_b_preds) {
      if (in_state(r)) continue;
      int x_pick = -1;
      for (int x : g.in(r))
        if (x != hub && !in_state(x)) {
          x_pick = x;
          break;
        }
      if (x_pick < 0) continue;
      inner.push_back(r);
      outer.push_back(x_pick);
      in_inner[r] = 1;
      in_outer[x_pick] = 1;
      moved = true;
      break;
    }
    if (moved) continue;

    // exchange: replace the pair (q_i, b_i) with (q_i, x) and (b_i, y) for
    // distinct fresh x, y in B among the hub's predecessors
    for (int i = 0; i < s && !moved; ++i) {
      const int q = outer[i], b = inner[i];
      std::vector<int> xs, ys;
      for (int w : hub_b_preds) {
        if (in_state(w)) continue;
        if (g.has_edge(q, w)) xs.push_back(w);
        if (g.has_edge(b, w)) ys.push_back(w);
      }
      int x = -1, y = -1;
      if (!xs.empty() && !ys.empty()) {
        if (xs[0] != ys[0]) {
          x = xs[0];
          y = ys[0];
        } else if (ys.size() > 1) {
          x = xs[0];
          y = ys[1];
        } else if (xs.size() > 1) {
          x = xs[1];
          y = ys[0];
        }
      }
      if (x < 0) continue;
      inner[i] = x;
      in_inner[b] = 0;
      in_inner[x] = 1;
      inner.push_back(y);
      outer.push_back(b);
      in_inner[y] = 1;
      in_outer[b] = 1;
      moved = true;
    }

    if (!moved) {
      st.halted = true;
      st.halted_s = s;
      // no applicable move forces s*(d+4l) >= d*(d-l)
      if (static_cast<std::int64_t>(s) * (d + 4ll * l) <
          static_cast<std::int64_t>(d) * (d - l))
        throw std::logic_error("halted spider search violates its lower bound");
      return std::nullopt;
    }
  }

  auto cert = make_cert(hub, outer, inner, l);
  if (!validate_spider(host, cert))
    throw std::logic_error("spider finder produced an invalid certificate");
  return cert;
}

}  // namespace grove
