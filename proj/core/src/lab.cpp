#include "grove/lab.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "grove/embedders.hpp"
#include "grove/errors.hpp"
#include "grove/generators.hpp"
#include "grove/io.hpp"
#include "grove/parallel.hpp"

namespace grove {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void finalize(TrialReport& report, const Stopwatch& watch) {
  report.trials = report.rows.size();
  report.successes = 0;
  for (const auto& row : report.rows)
    if (row.success) ++report.successes;
  report.wall_time_s = watch.seconds();
}

}  // namespace

std::string TrialReport::to_text() const {
  std::string s = "experiment: " + experiment_id + "\n";
  for (const auto& [key, value] : parameters) s += key + ": " + value + "\n";
  s += "trials: " + std::to_string(trials) + "\n";
  s += "successes: " + std::to_string(successes) + "\n";
  s += "failures: " + std::to_string(failure_count()) + "\n";
  for (const auto& row : rows)
    if (!row.success)
      s += "failure: seed=" + std::to_string(row.seed) + " reason=" + row.note +
           "\n";
  return s;
}

std::string TrialReport::to_table() const {
  std::string s = "seed\tstatus\tnote\n";
  for (const auto& row : rows)
    s += std::to_string(row.seed) + "\t" + (row.success ? "ok" : "fail") +
         "\t" + row.note + "\n";
  return s;
}

bool verify_level_blocks(const OrientedTree& t, int d,
                         std::int64_t max_vertices) {
  if (is_grounded(t))
    throw std::invalid_argument("level-block check expects a non-grounded tree");
  const int levels = 2 * t.vertex_count();
  auto host = level_digraph(levels, d, max_vertices);
  return !brute_force_embed(host.graph, t).has_value();
}

const char* to_string(CensusStatus s) {
  switch (s) {
    case CensusStatus::EnforcibleKnown:
      return "ENFORCIBLE_KNOWN";
    case CensusStatus::NotEnforcible:
      return "NOT_ENFORCIBLE";
    case CensusStatus::Open:
      return "OPEN";
  }
  return "?";
}

namespace {

CensusStatus status_of(const TreeClassification& c) {
  if (!c.grounded) return CensusStatus::NotEnforcible;
  if (c.hub_criterion || c.out_arborescence || c.antidirected ||
      c.hub_set.size() <= 1)
    return CensusStatus::EnforcibleKnown;
  return CensusStatus::Open;
}

}  // namespace

std::vector<CensusRecord> tree_census(int n_max) {
  if (n_max < 1) throw std::invalid_argument("need n_max >= 1");
  if (n_max > 11)
    throw BudgetError("census beyond 11 vertices exceeds the desk-scale budget");
  std::vector<CensusRecord> records;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& tree : enumerate_oriented_trees(n)) {
      CensusRecord rec;
      rec.n = n;
      rec.edges = tree.digraph().edges();
      rec.classification = classify(tree);
      rec.status = status_of(rec.classification);
      records.push_back(std::move(rec));
    }
  }
  return records;
}

CensusSummary summarize_census(int n_max,
                               const std::vector<CensusRecord>& recs) {
  CensusSummary s;
  s.n_max = n_max;
  auto free_trees = enumerate_free_trees(n_max);
  s.free_trees.resize(n_max);
  for (int n = 1; n <= n_max; ++n)
    s.free_trees[n - 1] = static_cast<std::int64_t>(free_trees[n].size());
  s.oriented_trees.assign(n_max, 0);
  s.known.assign(n_max, 0);
  s.refuted.assign(n_max, 0);
  s.open.assign(n_max, 0);
  for (const auto& rec : recs) {
    ++s.oriented_trees[rec.n - 1];
    switch (rec.status) {
      case CensusStatus::EnforcibleKnown:
        ++s.known[rec.n - 1];
        break;
      case CensusStatus::NotEnforcible:
        ++s.refuted[rec.n - 1];
        break;
      case CensusStatus::Open:
        ++s.open[rec.n - 1];
        break;
    }
  }
  return s;
}

namespace {

std::string joined(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace

std::string to_text(const CensusSummary& s) {
  std::string out = "census-max-n: " + std::to_string(s.n_max) + "\n";
  out += "free-trees: " + joined(s.free_trees) + "\n";
  out += "oriented-trees: " + joined(s.oriented_trees) + "\n";
  out += "enforcible-known: " + joined(s.known) + "\n";
  out += "not-enforcible: " + joined(s.refuted) + "\n";
  out += "open: " + joined(s.open) + "\n";
  return out;
}

std::string to_text(const CensusRecord& r) {
  std::string out = "record: n=" + std::to_string(r.n) +
                    " status=" + to_string(r.status) + " edges=";
  for (std::size_t i = 0; i < r.edges.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(r.edges[i].first) + ">" +
           std::to_string(r.edges[i].second);
  }
  out += "\n";
  return out;
}

std::vector<HostCase> all_tournaments_upto(int n_max) {
  if (n_max < 1 || n_max > 6)
    throw BudgetError("tournament enumeration is limited to n <= 6");
  std::vector<HostCase> hosts;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const int bits = static_cast<int>(slots.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      std::vector<std::pair<int, int>> edges;
      edges.reserve(bits);
      for (int b = 0; b < bits; ++b) {
        auto [i, j] = slots[b];
        if (mask >> b & 1)
          edges.emplace_back(i, j);
        else
          edges.emplace_back(j, i);
      }
      hosts.push_back({"tournament n=" + std::to_string(n) +
                           " mask=" + std::to_string(mask),
                       mask, Digraph::from_edges(n, edges)});
    }
  }
  return hosts;
}

std::vector<HostCase> random_host_family(int n, int d, int count,
                                         std::uint64_t base_seed) {
  if (count < 0) throw std::invalid_argument("negative host count");
  std::vector<HostCase> hosts;
  hosts.reserve(count);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
    hosts.push_back({"random n=" + std::to_string(n) + " d=" +
                         std::to_string(d) + " seed=" + std::to_string(seed),
                     seed, random_min_outdegree(n, d, seed)});
  }
  return hosts;
}

std::uint64_t content_hash64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

TrialReport spider_scan(int k, int l, const std::vector<HostCase>& hosts,
                        int delta_target, const std::string& out_dir,
                        int jobs) {
  Stopwatch watch;
  TrialReport report;
  report.experiment_id = "spider-scan";
  report.parameters = {{"k", std::to_string(k)},
                       {"l", std::to_string(l)},
                       {"delta_target", std::to_string(delta_target)},
                       {"hosts", std::to_string(hosts.size())}};
  const OrientedTree pattern = spider(k, l);

  std::vector<const HostCase*> qualifying;
  for (const auto& host : hosts) {
    if (host.graph.vertex_count() == 0) continue;
    if (min_out_degree(host.graph) >= delta_target)
      qualifying.push_back(&host);
  }

  report.rows.resize(qualifying.size());
  parallel_for(jobs, static_cast<int>(qualifying.size()), [&](int i) {
    const HostCase& host = *qualifying[i];
    TrialRow row;
    row.seed = host.seed;
    if (brute_force_embed(host.graph, pattern)) {
      row.success = true;
    } else {
      // paranoid re-verification with the second implementation
      if (naive_embed_exists(host.graph, pattern))
        throw std::logic_error("embedder disagreement on " + host.label);
      row.success = false;
      row.note = "counterexample candidate: " + host.label;
    }
    report.rows[i] = std::move(row);
  });

  if (!out_dir.empty()) {
    for (std::size_t i = 0; i < qualifying.size(); ++i) {
      if (report.rows[i].success) continue;
      const std::string text = to_edge_list(qualifying[i]->graph);
      char name[32];
      std::snprintf(name, sizeof name, "%016llx",
                    static_cast<unsigned long long>(content_hash64(text)));
      const std::string path =
          out_dir + "/counterexample_" + name + ".txt";
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot write " + path);
      out << text;
      report.rows[i].note += " file=" + path;
    }
  }

  finalize(report, watch);
  return report;
}

TrialReport run_branching_trials(int k, int l, int d, int n, int trials,
                                 std::uint64_t base_seed, int jobs) {
  Stopwatch watch;
  if (trials < 0) throw std::invalid_argument("negative trial count");
  TrialReport report;
  report.experiment_id = "T34";
  report.parameters = {{"k", std::to_string(k)}, {"l", std::to_string(l)},
                       {"d", std::to_string(d)}, {"n", std::to_string(n)},
                       {"base_seed", std::to_string(base_seed)}};
  report.rows.resize(trials);
  const CommonProperty property = trivial_property();
  parallel_for(jobs, trials, [&](int i) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
    const Digraph host = random_min_outdegree(n, d, seed);
    TrialRow row;
    row.seed = seed;
    auto found = branching_with_property(host, property, k, l);
    row.success = found.has_value();
    if (!row.success) row.note = "not found";
    report.rows[i] = std::move(row);
  });
  finalize(report, watch);
  return report;
}

TrialReport run_spider2_trials(int l, int d, int n, int trials,
                               std::uint64_t base_seed, int jobs) {
  Stopwatch watch;
  if (trials < 0) throw std::invalid_argument("negative trial count");
  TrialReport report;
  report.experiment_id = "T18";
  report.parameters = {{"l", std::to_string(l)}, {"d", std::to_string(d)},
                       {"n", std::to_string(n)},
                       {"base_seed", std::to_string(base_seed)}};
  report.rows.resize(trials);
  parallel_for(jobs, trials, [&](int i) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
    const Digraph host = random_min_outdegree(n, d, seed);
    TrialRow row;
    row.seed = seed;
    Spider2Stats stats;
    auto found = find_spider2(host, l, &stats);
    row.success = found.has_value();
    if (!row.success)
      row.note = stats.halted
                     ? "not found (halted s=" + std::to_string(stats.halted_s) + ")"
                     : "not found";
    report.rows[i] = std::move(row);
  });
  finalize(report, watch);
  return report;
}

TrialReport run_ttree_trials(int k, int l, int d, int n,
                             const std::string& oracle_kind, int h, int trials,
                             std::uint64_t base_seed, int jobs) {
  Stopwatch watch;
  if (trials < 0) throw std::invalid_argument("negative trial count");
  if (h <= 0) {
    h = 3 * k;
    for (int i = 0; i <= k; ++i) h *= l;  // 3*k*l^(k+1)
  }
  if (oracle_kind == "instar" && k != 1)
    throw std::invalid_argument("the in-star oracle only applies at k = 1");
  if (oracle_kind != "instar" && oracle_kind != "brute")
    throw std::invalid_argument("unknown oracle kind: " + oracle_kind);

  TrialReport report;
  report.experiment_id = "T33";
  report.parameters = {{"k", std::to_string(k)}, {"l", std::to_string(l)},
                       {"d", std::to_string(d)}, {"n", std::to_string(n)},
                       {"oracle", oracle_kind},  {"h", std::to_string(h)},
                       {"base_seed", std::to_string(base_seed)}};
  report.rows.resize(trials);
  const int h_final = h;
  parallel_for(jobs, trials, [&](int i) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
    const Digraph host = random_min_outdegree(n, d, seed);
    const SpiderOracle oracle = oracle_kind == "instar"
                                    ? in_star_oracle(h_final)
                                    : brute_force_spider_oracle(k, h_final);
    TrialRow row;
    row.seed = seed;
    auto found = find_t_tree(host, k, l, oracle);
    row.success = found.has_value();
    if (!row.success) row.note = "not found";
    report.rows[i] = std::move(row);
  });
  finalize(report, watch);
  return report;
}

}  // namespace grove
