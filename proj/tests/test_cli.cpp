#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "b4cat/cli.hpp"
#include "doctest.h"

using namespace b4cat;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

// Minimal reader for the strict subset of DOT emitted by the link command.
struct MiniDot {
  std::set<std::string> nodes;
  std::set<std::pair<std::string, std::string>> edges;
};

MiniDot parse_dot(const std::string& text) {
  MiniDot g;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  REQUIRE(line == "graph link {");
  while (std::getline(in, line)) {
    if (line == "}") return g;
    REQUIRE(line.size() > 3);
    REQUIRE(line.substr(0, 2) == "  ");
    REQUIRE(line.back() == ';');
    const std::string body = line.substr(2, line.size() - 3);
    const auto sep = body.find(" -- ");
    if (sep == std::string::npos) {
      g.nodes.insert(body);
    } else {
      g.edges.insert({body.substr(0, sep), body.substr(sep + 4)});
    }
  }
  FAIL("missing closing brace");
  return g;
}

}  // namespace

TEST_CASE("eq exit codes and output") {
  CliResult r = run({"eq", "aba", "bab"});
  CHECK(r.code == 0);
  CHECK(r.out == "equal\n");
  r = run({"eq", "a", "a"});
  CHECK(r.code == 0);
  r = run({"eq", "a", "b"});
  CHECK(r.code == 1);
  CHECK(r.out == "not-equal\n");
  r = run({"eq", "a", "g"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("position 1") != std::string::npos);
}

TEST_CASE("nf prints inf and one-line factors") {
  CHECK(run({"nf", "abacba"}).out == "inf=1 factors=[]\n");
  CHECK(run({"nf", ""}).out == "inf=0 factors=[]\n");
  CHECK(run({"nf", "a"}).out == "inf=0 factors=[2134]\n");
  CHECK(run({"nf", "aba"}).out == run({"nf", "bab"}).out);
}

TEST_CASE("spellings prints 16 deterministic lines") {
  const CliResult r = run({"spellings"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  CHECK(lines.size() == 16);
  CHECK(std::find(lines.begin(), lines.end(), "bac") != lines.end());
  CHECK(std::is_sorted(lines.begin(), lines.end()));
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
  CHECK(run({"verify", "--radius", "99"}).code == 2);
  CHECK(run({"ball", "--radius", "1"}).code == 2);  // missing --out
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"ball", "--radius", "1", "--out", "/nonexistent-dir/x"}).code == 2);
}

TEST_CASE("verify presentation suite passes and is deterministic") {
  const CliResult first = run({"verify", "--suite", "presentation"});
  CHECK(first.code == 0);
  CHECK(first.out.find("CHECK presentation-1-aba=bab PASS") != std::string::npos);
  CHECK(first.out.find("SUITE presentation PASS") != std::string::npos);
  CHECK(first.out.find("FAIL") == std::string::npos);
  const CliResult second = run({"verify", "--suite", "presentation"});
  CHECK(first.out == second.out);

  // 13 presentation equalities are individually reported.
  int equality_checks = 0;
  std::istringstream in(first.out);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("CHECK presentation-", 0) == 0) ++equality_checks;
  CHECK(equality_checks == 13);
}

TEST_CASE("verify link suite reports the structural counts") {
  const CliResult r = run({"verify", "--suite", "link"});
  CHECK(r.code == 0);
  CHECK(r.out.find("CHECK link-arcs PASS 16 arcs") != std::string::npos);
  CHECK(r.out.find("CHECK link-girth PASS girth 6") != std::string::npos);
  CHECK(r.out.find("CHECK spellings-count PASS 16 of 216") != std::string::npos);
}

TEST_CASE("verify all at radius 0 is degenerate but passing") {
  const CliResult r = run({"verify", "--suite", "all", "--radius", "0",
                           "--samples", "20"});
  CHECK(r.code == 0);
  CHECK(r.out.find("OVERALL PASS") != std::string::npos);
}

TEST_CASE("ball export writes byte-identical files") {
  const std::string path1 = "cli_ball_1.txt";
  const std::string path2 = "cli_ball_2.txt";
  CHECK(run({"ball", "--radius", "1", "--out", path1}).code == 0);
  CHECK(run({"ball", "--radius", "1", "--out", path2}).code == 0);
  std::ifstream f1(path1), f2(path2);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());
  CHECK(s1.str().rfind("BALL radius=1 vertices=13 edges=28 triangles=16\n", 0) == 0);
  std::remove(path1.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("link text output for the base vertex") {
  const CliResult r = run({"link"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("LINK center=- nodes=12 arcs=16\n", 0) == 0);
  const CliResult shifted = run({"link", "--vertex", "a"});
  CHECK(shifted.code == 0);
  CHECK(shifted.out.find("nodes=12 arcs=16") != std::string::npos);
}

TEST_CASE("link DOT output parses as a graph with 12 nodes and 16 edges") {
  const CliResult r = run({"link", "--format", "dot"});
  CHECK(r.code == 0);
  const MiniDot g = parse_dot(r.out);
  CHECK(g.nodes.size() == 12);
  CHECK(g.edges.size() == 16);
  // Arcs reference declared nodes only.
  for (const auto& [u, v] : g.edges) {
    CHECK(g.nodes.count(u) == 1);
    CHECK(g.nodes.count(v) == 1);
  }
  // Letter-labeled equivariance: same arc set at a shifted vertex.
  const MiniDot h = parse_dot(run({"link", "--vertex", "ab", "--format", "dot"}).out);
  CHECK(g.edges == h.edges);
}

TEST_CASE("help is available") {
  const CliResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}
