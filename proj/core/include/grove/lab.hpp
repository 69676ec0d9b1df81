#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grove/census.hpp"
#include "grove/digraph.hpp"
#include "grove/tree.hpp"

namespace grove {

struct TrialRow {
  std::uint64_t seed = 0;
  bool success = false;
  std::string note;
};

// Outcome of a batch experiment. The canonical serialization excludes
// wall_time_s so reports are byte-identical across runs for fixed parameters
// and base seed.
struct TrialReport {
  std::string experiment_id;
  std::vector<std::pair<std::string, std::string>> parameters;  // fixed order
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::vector<TrialRow> rows;
  double wall_time_s = 0;

  std::uint64_t failure_count() const { return trials - successes; }
  std::string to_text() const;   // fixed-order "key: value" lines
  std::string to_table() const;  // tab-separated per-trial rows
};

// True iff exhaustive search certifies that the level digraph with 2|T|
// levels and degree d avoids the (non-grounded) tree T.
bool verify_level_blocks(const OrientedTree& t, int d,
                         std::int64_t max_vertices = 1000000);

enum class CensusStatus { EnforcibleKnown, NotEnforcible, Open };
const char* to_string(CensusStatus s);

struct CensusRecord {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // canonical labeling
  TreeClassification classification;
  CensusStatus status = CensusStatus::Open;
};

// All oriented trees with up to n_max vertices, classified. n_max is capped
// at 11; the enumeration is exponential beyond desk scale.
std::vector<CensusRecord> tree_census(int n_max);

struct CensusSummary {
  int n_max = 0;
  std::vector<std::int64_t> free_trees;      // index n-1
  std::vector<std::int64_t> oriented_trees;  // index n-1
  std::vector<std::int64_t> known, refuted, open;
};

CensusSummary summarize_census(int n_max, const std::vector<CensusRecord>& recs);
std::string to_text(const CensusSummary& s);
std::string to_text(const CensusRecord& r);

struct HostCase {
  std::string label;
  std::uint64_t seed = 0;
  Digraph graph;
};

// Every tournament on 1..n_max vertices (all orientation masks; not deduped
// up to isomorphism).
std::vector<HostCase> all_tournaments_upto(int n_max);

std::vector<HostCase> random_host_family(int n, int d, int count,
                                         std::uint64_t base_seed);

// Runs exhaustive spider(k, l) search over every host with min out-degree at
// least delta_target. A miss is re-verified with the independent naive
// matcher before being recorded; when out_dir is nonempty the host is written
// there as an edge-list file named by content hash.
TrialReport spider_scan(int k, int l, const std::vector<HostCase>& hosts,
                        int delta_target, const std::string& out_dir = "",
                        int jobs = 1);

// Seeded random-host trials for the three embedder guarantees. Each failure
// row names its seed so the host can be regenerated.
TrialReport run_branching_trials(int k, int l, int d, int n, int trials,
                                 std::uint64_t base_seed, int jobs = 1);
TrialReport run_spider2_trials(int l, int d, int n, int trials,
                               std::uint64_t base_seed, int jobs = 1);
TrialReport run_ttree_trials(int k, int l, int d, int n,
                             const std::string& oracle_kind, int h, int trials,
                             std::uint64_t base_seed, int jobs = 1);

std::uint64_t content_hash64(std::string_view s);

}  // namespace grove
