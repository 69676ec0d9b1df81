// Command-line workbench: graph family generators, oriented-tree
// classification, embedding searches with printable certificates, and the
// experiment lab. Certificates go to stdout, diagnostics to stderr.
// Exit codes: 0 found/holds, 1 well-formed not-found/fails, 2 usage or I/O.

#include <cstdint>
#include <fstream>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "grove/census.hpp"
#include "grove/digraph.hpp"
#include "grove/embedders.hpp"
#include "grove/errors.hpp"
#include "grove/generators.hpp"
#include "grove/io.hpp"
#include "grove/lab.hpp"
#include "grove/tree.hpp"

namespace {

constexpr int kFound = 0;
constexpr int kNotFound = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

grove::Digraph load_graph(const std::string& path) {
  return grove::read_edge_list(slurp(path));
}

grove::OrientedTree load_tree(const std::string& path) {
  return grove::OrientedTree::from_digraph(load_graph(path));
}

struct GenOptions {
  int k = 1, d = 1, l = 1, n = 1;
  std::uint64_t seed = 0;
  bool meta = false;
  std::int64_t budget = grove::kDefaultVertexBudget;
};

struct EmbedOptions {
  std::string pattern, host;
  bool greedy = false;
};

struct LabScanOptions {
  int k = 2, l = 1, delta = 1;
  std::string family = "tournaments";
  int max_n = 4;
  int n = 20, d = 4, count = 20;
  std::uint64_t seed = 1;
  std::string out_dir;
  int jobs = 1;
  bool table = false;
};

struct LabTrialsOptions {
  std::string which;
  int k = 1, l = 2, d = -1, n = 100, trials = 100, h = 0;
  std::uint64_t seed = 1;
  std::string oracle = "instar";
  int jobs = 1;
  bool table = false;
};

int report_outcome(const grove::TrialReport& report, bool table) {
  std::cout << report.to_text();
  if (table) std::cout << report.to_table();
  std::cerr << "wall time: " << report.wall_time_s << " s\n";
  return report.failure_count() == 0 ? kFound : kNotFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oriented-tree embedding workbench"};
  app.require_subcommand(1);

  // gen
  auto gen = app.add_subcommand("gen", "emit a generated graph as an edge list");
  gen->require_subcommand(1);
  GenOptions g;
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget-vertices", g.budget, "generator vertex budget");
  };
  auto gen_level = gen->add_subcommand("level", "level digraph");
  gen_level->add_option("--k", g.k, "depth parameter")->required();
  gen_level->add_option("--d", g.d, "degree parameter")->required();
  gen_level->add_flag("--meta", g.meta, "emit 'vertex level index' lines instead");
  add_budget(gen_level);
  auto gen_spider = gen->add_subcommand("spider", "subdivided in-star");
  gen_spider->add_option("--k", g.k, "ray length")->required();
  gen_spider->add_option("--l", g.l, "ray count")->required();
  add_budget(gen_spider);
  auto gen_branching = gen->add_subcommand("branching", "complete out-arborescence");
  gen_branching->add_option("--k", g.k, "depth")->required();
  gen_branching->add_option("--l", g.l, "arity")->required();
  add_budget(gen_branching);
  auto gen_ttree = gen->add_subcommand("ttree", "branching with spider leaves");
  gen_ttree->add_option("--k", g.k, "depth / ray length")->required();
  gen_ttree->add_option("--l", g.l, "arity / ray count")->required();
  add_budget(gen_ttree);
  auto gen_complete = gen->add_subcommand("complete", "complete digraph");
  gen_complete->add_option("--n", g.n, "order")->required();
  auto gen_tournament = gen->add_subcommand("tournament", "rotational tournament");
  gen_tournament->add_option("--n", g.n, "order (odd)")->required();
  auto gen_random = gen->add_subcommand("random", "random exact-out-degree digraph");
  gen_random->add_option("--n", g.n, "order")->required();
  gen_random->add_option("--d", g.d, "out-degree")->required();
  gen_random->add_option("--seed", g.seed, "64-bit seed")->required();

  // classify
  auto classify_cmd = app.add_subcommand("classify", "classify an oriented tree");
  std::string classify_path;
  classify_cmd->add_option("tree", classify_path, "tree file or -")->required();

  // embed
  auto embed_cmd = app.add_subcommand("embed", "embed a tree into a host digraph");
  EmbedOptions e;
  embed_cmd->add_option("--pattern", e.pattern, "pattern tree file")->required();
  embed_cmd->add_option("--host", e.host, "host graph file")->required();
  bool brute_flag = false;
  auto brute_opt = embed_cmd->add_flag("--brute", brute_flag, "exhaustive backtracking (default)");
  auto greedy_opt = embed_cmd->add_flag("--greedy", e.greedy, "greedy out-arborescence embedding");
  brute_opt->excludes(greedy_opt);

  // spider2
  auto spider2_cmd = app.add_subcommand("spider2", "find a length-2 spider");
  std::string spider2_host;
  int spider2_l = 1;
  spider2_cmd->add_option("--host", spider2_host, "host graph file")->required();
  spider2_cmd->add_option("--l", spider2_l, "ray count")->required();

  // branch
  auto branch_cmd = app.add_subcommand("branch", "branching with a leaf property");
  std::string branch_host, branch_property = "trivial";
  int branch_k = 1, branch_l = 2;
  branch_cmd->add_option("--host", branch_host, "host graph file")->required();
  branch_cmd->add_option("--k", branch_k, "depth")->required();
  branch_cmd->add_option("--l", branch_l, "arity")->required();
  branch_cmd->add_option("--property", branch_property, "leaf property (trivial)");

  // ttree
  auto ttree_cmd = app.add_subcommand("ttree", "embed the composite tree");
  std::string ttree_host, ttree_oracle = "brute";
  int ttree_k = 1, ttree_l = 2, ttree_h = 0;
  ttree_cmd->add_option("--host", ttree_host, "host graph file")->required();
  ttree_cmd->add_option("--k", ttree_k, "depth / ray length")->required();
  ttree_cmd->add_option("--l", ttree_l, "arity / ray count")->required();
  ttree_cmd->add_option("--oracle", ttree_oracle, "spider oracle: brute or instar");
  ttree_cmd->add_option("--rays", ttree_h, "oracle ray count (default 3*k*l^(k+1))");

  // lab
  auto lab = app.add_subcommand("lab", "experiments");
  lab->require_subcommand(1);
  auto level_check = lab->add_subcommand("level-check", "level digraph avoidance check");
  std::string level_tree;
  int level_d = 2;
  std::int64_t level_budget = grove::kDefaultVertexBudget;
  level_check->add_option("--tree", level_tree, "non-grounded tree file")->required();
  level_check->add_option("--d", level_d, "degree parameter")->required();
  level_check->add_option("--budget-vertices", level_budget, "host vertex budget");

  LabScanOptions scan;
  auto scan_cmd = lab->add_subcommand("spider-scan", "scan a host family for spiders");
  scan_cmd->add_option("--k", scan.k, "ray length")->required();
  scan_cmd->add_option("--l", scan.l, "ray count")->required();
  scan_cmd->add_option("--delta", scan.delta, "minimum out-degree filter")->required();
  scan_cmd->add_option("--family", scan.family, "tournaments or random");
  scan_cmd->add_option("--max-n", scan.max_n, "tournament order cap");
  scan_cmd->add_option("--n", scan.n, "random host order");
  scan_cmd->add_option("--d", scan.d, "random host out-degree");
  scan_cmd->add_option("--count", scan.count, "random host count");
  scan_cmd->add_option("--seed", scan.seed, "base seed");
  scan_cmd->add_option("--out-dir", scan.out_dir, "directory for counterexample files");
  scan_cmd->add_option("--jobs", scan.jobs, "parallel workers");
  scan_cmd->add_flag("--table", scan.table, "append the per-trial table");

  LabTrialsOptions tr;
  auto trials_cmd = lab->add_subcommand("trials", "seeded random-host trials");
  trials_cmd->add_option("--which", tr.which, "T34, T18 or T33")->required();
  trials_cmd->add_option("--k", tr.k, "depth parameter");
  trials_cmd->add_option("--l", tr.l, "arity / ray count")->required();
  trials_cmd->add_option("--d", tr.d, "host out-degree (T18 default: threshold)");
  trials_cmd->add_option("--n", tr.n, "host order");
  trials_cmd->add_option("--trials", tr.trials, "trial count");
  trials_cmd->add_option("--seed", tr.seed, "base seed");
  trials_cmd->add_option("--oracle", tr.oracle, "T33 oracle: instar or brute");
  trials_cmd->add_option("--rays", tr.h, "T33 oracle ray count");
  trials_cmd->add_option("--jobs", tr.jobs, "parallel workers");
  trials_cmd->add_flag("--table", tr.table, "append the per-trial table");

  auto census_cmd = lab->add_subcommand("census", "oriented-tree census");
  int census_max_n = 8;
  bool census_records = false;
  census_cmd->add_option("--max-n", census_max_n, "largest tree order");
  census_cmd->add_flag("--records", census_records, "print every record");

  // export-dot
  auto dot_cmd = app.add_subcommand("export-dot", "emit a graph in DOT format");
  std::string dot_path;
  dot_cmd->add_option("graph", dot_path, "graph file or -")->required();

  try {
    app.parse(argc, argv);

    if (gen->parsed()) {
      if (gen_level->parsed()) {
        auto level = grove::level_digraph(g.k, g.d, g.budget);
        if (g.meta) {
          for (int v = 0; v < level.graph.vertex_count(); ++v)
            std::cout << v << " " << level.level_of[v] << " "
                      << level.index_in_level[v] << "\n";
        } else {
          std::cout << grove::to_edge_list(level.graph);
        }
      } else if (gen_spider->parsed()) {
        std::cout << grove::to_edge_list(grove::spider(g.k, g.l, g.budget).digraph());
      } else if (gen_branching->parsed()) {
        std::cout << grove::to_edge_list(grove::out_branching(g.k, g.l, g.budget).digraph());
      } else if (gen_ttree->parsed()) {
        std::cout << grove::to_edge_list(grove::t_tree(g.k, g.l, g.budget).digraph());
      } else if (gen_complete->parsed()) {
        std::cout << grove::to_edge_list(grove::complete_digraph(g.n));
      } else if (gen_tournament->parsed()) {
        std::cout << grove::to_edge_list(grove::regular_tournament(g.n));
      } else if (gen_random->parsed()) {
        std::cout << grove::to_edge_list(grove::random_min_outdegree(g.n, g.d, g.seed));
      }
      return kFound;
    }

    if (classify_cmd->parsed()) {
      std::cout << grove::to_text(grove::classify(load_tree(classify_path)));
      return kFound;
    }

    if (embed_cmd->parsed()) {
      const auto pattern = load_tree(e.pattern);
      const auto host = load_graph(e.host);
      if (e.greedy) {
        auto emb = grove::greedy_out_arborescence(host, pattern);
        std::cout << grove::to_text(emb, "root");
        return kFound;
      }
      auto emb = grove::brute_force_embed(host, pattern);
      if (!emb) {
        std::cerr << "no embedding\n";
        return kNotFound;
      }
      std::cout << grove::to_text(*emb, "root");
      return kFound;
    }

    if (spider2_cmd->parsed()) {
      const auto host = load_graph(spider2_host);
      auto cert = grove::find_spider2(host, spider2_l);
      if (!cert) {
        std::cerr << "no spider found\n";
        return kNotFound;
      }
      std::cout << grove::to_text(*cert);
      return kFound;
    }

    if (branch_cmd->parsed()) {
      if (branch_property != "trivial")
        throw CLI::ValidationError("--property", "only 'trivial' is supported");
      const auto host = load_graph(branch_host);
      auto emb = grove::branching_with_property(host, grove::trivial_property(),
                                                branch_k, branch_l);
      if (!emb) {
        std::cerr << "no branching found\n";
        return kNotFound;
      }
      std::cout << grove::to_text(*emb, "root");
      return kFound;
    }

    if (ttree_cmd->parsed()) {
      const auto host = load_graph(ttree_host);
      int h = ttree_h;
      if (h <= 0) {
        h = 3 * ttree_k;
        for (int i = 0; i <= ttree_k; ++i) h *= ttree_l;
      }
      grove::SpiderOracle oracle;
      if (ttree_oracle == "instar") {
        if (ttree_k != 1)
          throw CLI::ValidationError("--oracle", "instar needs --k 1");
        oracle = grove::in_star_oracle(h);
      } else if (ttree_oracle == "brute") {
        oracle = grove::brute_force_spider_oracle(ttree_k, h);
      } else {
        throw CLI::ValidationError("--oracle", "unknown oracle " + ttree_oracle);
      }
      auto emb = grove::find_t_tree(host, ttree_k, ttree_l, oracle);
      if (!emb) {
        std::cerr << "no composite tree found\n";
        return kNotFound;
      }
      std::cout << grove::to_text(*emb, "root");
      return kFound;
    }

    if (lab->parsed()) {
      if (level_check->parsed()) {
        const auto tree = load_tree(level_tree);
        const bool blocked = grove::verify_level_blocks(tree, level_d, level_budget);
        std::cout << "level-blocks: " << (blocked ? "true" : "false") << "\n";
        return blocked ? kFound : kNotFound;
      }
      if (scan_cmd->parsed()) {
        std::vector<grove::HostCase> hosts;
        if (scan.family == "tournaments") {
          hosts = grove::all_tournaments_upto(scan.max_n);
        } else if (scan.family == "random") {
          hosts = grove::random_host_family(scan.n, scan.d, scan.count, scan.seed);
        } else {
          throw CLI::ValidationError("--family", "unknown family " + scan.family);
        }
        if (!scan.out_dir.empty())
          std::filesystem::create_directories(scan.out_dir);
        auto report = grove::spider_scan(scan.k, scan.l, hosts, scan.delta,
                                         scan.out_dir, scan.jobs);
        return report_outcome(report, scan.table);
      }
      if (trials_cmd->parsed()) {
        grove::TrialReport report;
        if (tr.which == "T34") {
          if (tr.d < 0) throw CLI::ValidationError("--d", "required for T34");
          report = grove::run_branching_trials(tr.k, tr.l, tr.d, tr.n, tr.trials,
                                               tr.seed, tr.jobs);
        } else if (tr.which == "T18") {
          const int d = tr.d < 0 ? grove::spider2_degree_threshold(tr.l) : tr.d;
          report = grove::run_spider2_trials(tr.l, d, tr.n, tr.trials, tr.seed,
                                             tr.jobs);
        } else if (tr.which == "T33") {
          if (tr.d < 0) throw CLI::ValidationError("--d", "required for T33");
          report = grove::run_ttree_trials(tr.k, tr.l, tr.d, tr.n, tr.oracle,
                                           tr.h, tr.trials, tr.seed, tr.jobs);
        } else {
          throw CLI::ValidationError("--which", "expected T34, T18 or T33");
        }
        return report_outcome(report, tr.table);
      }
      if (census_cmd->parsed()) {
        auto records = grove::tree_census(census_max_n);
        std::cout << grove::to_text(grove::summarize_census(census_max_n, records));
        if (census_records)
          for (const auto& rec : records) std::cout << grove::to_text(rec);
        return kFound;
      }
    }

    if (dot_cmd->parsed()) {
      std::cout << grove::to_dot(load_graph(dot_path));
      return kFound;
    }

    std::cerr << "no command\n";
    return kUsage;
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) {
      // --help and friends
      return app.exit(err);
    }
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  }
}
