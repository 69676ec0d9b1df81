#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "grove/embedders.hpp"
#include "grove/generators.hpp"
#include "grove/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

fs::path work_dir() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / "grove_cli_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  const fs::path out_path = work_dir() / "stdout.txt";
  const std::string cmd = std::string(GROVE_CLI_PATH) + " " + args + " > " +
                          out_path.string() + " 2> /dev/null";
  const int raw = std::system(cmd.c_str());
  RunResult res;
  res.code = WEXITSTATUS(raw);
  std::ifstream in(out_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  res.out = buf.str();
  return res;
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path p = work_dir() / name;
  std::ofstream out(p);
  out << text;
  return p.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen emits parseable, deterministic edge lists") {
  auto a = run("gen level --k 3 --d 2");
  CHECK(a.code == 0);
  CHECK(a.out == grove::to_edge_list(grove::level_digraph(3, 2).graph));
  auto b = run("gen level --k 3 --d 2");
  CHECK(a.out == b.out);

  auto r1 = run("gen random --n 30 --d 4 --seed 7");
  auto r2 = run("gen random --n 30 --d 4 --seed 7");
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
}

TEST_CASE("gen level --meta lists vertex levels") {
  auto res = run("gen level --k 1 --d 2 --meta");
  CHECK(res.code == 0);
  CHECK(res.out == "0 0 1\n1 0 2\n2 1 1\n3 1 2\n4 1 3\n5 1 4\n");
}

TEST_CASE("classify rejects non-trees with a usage error") {
  const auto level = write_file("level.txt",
                                grove::to_edge_list(grove::level_digraph(3, 2).graph));
  auto res = run("classify " + level);
  CHECK(res.code == 2);
}

TEST_CASE("classify reports the fixed key order") {
  const auto tree = write_file("tree.txt", "5 4\n0 1\n2 1\n1 3\n4 3\n");
  auto res = run("classify " + tree);
  CHECK(res.code == 0);
  CHECK(res.out ==
        "hub_set: 1 3\n"
        "grounded: false\n"
        "antidirected: false\n"
        "out_arborescence: false\n"
        "hub_subtree_is_out_arborescence: true\n"
        "hub_criterion: false\n");
}

TEST_CASE("spider2 prints a validating certificate") {
  const auto host_graph = grove::complete_digraph(7);
  const auto host = write_file("k7.txt", grove::to_edge_list(host_graph));
  auto res = run("spider2 --host " + host + " --l 2");
  CHECK(res.code == 0);
  REQUIRE(res.out.rfind("center ", 0) == 0);

  // parse the certificate back and validate it
  std::istringstream lines(res.out);
  std::string label;
  int center = -1;
  lines >> label >> center;
  grove::TreeEmbedding emb;
  emb.map.assign(grove::spider(2, 2).vertex_count(), -1);
  int p = -1, h = -1;
  std::string arrow;
  while (lines >> p >> arrow >> h) emb.map[p] = h;
  CHECK(emb.map[0] == center);
  CHECK(grove::validate_embedding(host_graph, grove::spider(2, 2), emb));
}

TEST_CASE("embed exit codes distinguish found from not-found") {
  const auto pattern = write_file("ng5.txt", "5 4\n0 1\n2 1\n1 3\n4 3\n");
  const auto level = write_file("level_10_2.txt",
                                grove::to_edge_list(grove::level_digraph(10, 2).graph));
  auto res = run("embed --pattern " + pattern + " --host " + level + " --brute");
  CHECK(res.code == 1);
  CHECK(res.out.empty());

  const auto k8 = write_file("k8.txt", grove::to_edge_list(grove::complete_digraph(8)));
  auto hit = run("embed --pattern " + pattern + " --host " + k8 + " --brute");
  CHECK(hit.code == 0);
  CHECK(hit.out.rfind("root ", 0) == 0);

  const auto arb = write_file("b12.txt",
                              grove::to_edge_list(grove::out_branching(1, 2).digraph()));
  auto greedy = run("embed --pattern " + arb + " --host " + k8 + " --greedy");
  CHECK(greedy.code == 0);
}

TEST_CASE("branch and ttree pipelines") {
  const auto host = write_file("rand.txt",
                               grove::to_edge_list(grove::random_min_outdegree(60, 5, 2)));
  auto res = run("branch --host " + host + " --k 1 --l 2 --property trivial");
  CHECK(res.code == 0);
  CHECK(res.out.rfind("root ", 0) == 0);

  const auto k30 = write_file("k30.txt", grove::to_edge_list(grove::complete_digraph(30)));
  auto tt = run("ttree --host " + k30 + " --k 1 --l 2 --oracle brute");
  CHECK(tt.code == 0);

  auto nf = run("ttree --host " + write_file("k4.txt",
                                             grove::to_edge_list(grove::complete_digraph(4))) +
                " --k 1 --l 2 --oracle brute");
  CHECK(nf.code == 1);
}

TEST_CASE("lab level-check") {
  const auto tree = write_file("ng5b.txt", "5 4\n0 1\n2 1\n1 3\n4 3\n");
  auto res = run("lab level-check --tree " + tree + " --d 1");
  CHECK(res.code == 0);
  CHECK(res.out == "level-blocks: true\n");

  const auto grounded = write_file("path.txt", "3 2\n0 1\n1 2\n");
  auto bad = run("lab level-check --tree " + grounded + " --d 1");
  CHECK(bad.code == 2);
}

TEST_CASE("lab census") {
  auto res = run("lab census --max-n 4");
  CHECK(res.code == 0);
  CHECK(res.out.find("free-trees: 1 1 1 2\n") != std::string::npos);
  auto recs = run("lab census --max-n 3 --records");
  CHECK(recs.out.find("record: n=3") != std::string::npos);
}

TEST_CASE("lab trials and spider-scan") {
  auto res = run("lab trials --which T18 --l 2 --n 60 --trials 5 --seed 3 --jobs 2");
  CHECK(res.code == 0);
  CHECK(res.out.find("successes: 5") != std::string::npos);

  auto scan = run("lab spider-scan --k 2 --l 1 --family tournaments --max-n 4 --delta 1");
  CHECK(scan.code == 0);

  const auto dir = (work_dir() / "candidates").string();
  auto tight = run("lab spider-scan --k 3 --l 1 --family random --n 3 --d 1 "
                   "--count 1 --seed 5 --delta 1 --out-dir " + dir);
  CHECK(tight.code == 1);
  bool wrote = false;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().filename().string().rfind("counterexample_", 0) == 0)
      wrote = true;
  CHECK(wrote);
}

TEST_CASE("export-dot") {
  const auto path = write_file("edge.txt", "2 1\n0 1\n");
  auto res = run("export-dot " + path);
  CHECK(res.code == 0);
  CHECK(res.out == "digraph G {\n  v0;\n  v1;\n  v0 -> v1;\n}\n");
}

TEST_CASE("usage errors") {
  CHECK(run("nonsense").code == 2);
  CHECK(run("gen level --k 3").code == 2);              // missing --d
  CHECK(run("gen level --k 3 --d 2 --what 1").code == 2);  // unknown flag
  CHECK(run("classify missing_file.txt").code == 2);
  CHECK(run("gen level --k 40 --d 3").code == 2);  // budget
}

}  // TEST_SUITE
