#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "goldens.hpp"
#include "json.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(REVMULT_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST(Cli, GraphText) {
  auto r = run("graph --g 8 --k 5");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "Young graph: 8 nodes, 16 edges"));
  EXPECT_TRUE(contains(r.out, "family: h"));
}

TEST(Cli, GraphPruningReport) {
  auto r = run("graph --g 8 --k 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "pruned 2 nodes, 5 edges"));
  EXPECT_TRUE(contains(r.out, "family: 1089"));
}

TEST(Cli, GraphJsonAndDot) {
  auto j = run("graph --g 40 --k 13 --format json");
  ASSERT_EQ(j.status, 0);
  auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["node_count"], 15);
  EXPECT_EQ(doc["edge_count"], 22);
  auto s = run("graph --g 40 --k 13 --format json --include-start");
  EXPECT_EQ(nlohmann::json::parse(s.out)["node_count"], 16);
  auto d = run("graph --g 10 --k 9 --format dot");
  EXPECT_EQ(d.status, 0);
  EXPECT_EQ(d.out.rfind("digraph young_10_9 {", 0), 0u);
}

TEST(Cli, NoGraphExitCode) {
  auto r = run("graph --g 12 --k 7");
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.out, "no Young graph"));
  EXPECT_EQ(run("enumerate --g 12 --k 7").status, 2);
  EXPECT_EQ(run("gf --g 12 --k 7").status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("graph --g 10").status, 1);
  EXPECT_EQ(run("graph --g 10 --k 10").status, 1);
  EXPECT_EQ(run("graph --g 10 --k 9 --format xml").status, 1);
  EXPECT_EQ(run("enumerate --g 10 --k 4 --count 3 --max-digits 5").status, 1);
  EXPECT_EQ(run("verify 1089").status, 1);
  EXPECT_EQ(run("survey --max-g 101").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
}

TEST(Cli, Enumerate) {
  auto r = run("enumerate --g 10 --k 4 --count 3 --format bfile");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1 2178\n2 21978\n3 219978\n");
  auto t = run("enumerate --g 24 --k 13 --count 1");
  EXPECT_TRUE(contains(t.out, "(1,0,9,16,18,1,6,5,13)_24"));
  auto d = run("enumerate --g 10 --k 9 --max-digits 6 --format json");
  EXPECT_EQ(nlohmann::json::parse(d.out)["multiples"].size(), 3u);
  EXPECT_EQ(run("enumerate --g 10 --k 9 --max-digits 40 --budget 3").status, 3);
}

TEST(Cli, GeneratingFunction) {
  auto r = run("gf --g 10 --k 9 --terms 14");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "C(x) = x^4*(1 + x) / (1 - x^2 - x^4)"));
  EXPECT_TRUE(contains(r.out, "c_0..c_13: 0 0 0 0 1 1 1 1 2 2 3 3 5 5"));
  auto b = run("gf --g 24 --k 17 --budget 5 --terms 14");
  EXPECT_EQ(b.status, 3);
  EXPECT_TRUE(contains(b.out, "budget exceeded"));
  EXPECT_TRUE(contains(b.out, "c_0..c_13:"));
}

TEST(Cli, Verify) {
  auto r = run("verify \"(1,1,2,7,6,6,5)_8\" --k 5");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "carries =  0 0 1 4 4 4 3 0"));
  EXPECT_TRUE(contains(r.out, "yes:"));
  auto d = run("verify 2178 --g 10 --k 4 --format json");
  auto j = nlohmann::json::parse(d.out);
  EXPECT_TRUE(j["reverse_multiple"].get<bool>());
  auto no = run("verify 1234 --g 10 --k 4");
  EXPECT_EQ(no.status, 0);
  EXPECT_TRUE(contains(no.out, "no:"));
}

TEST(Cli, Survey) {
  auto r = run("survey --max-g 20 --jobs 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, goldens::kSurveyTable);
}

TEST(Cli, AuditJson) {
  auto r = run("audit --max-g 20 --format json");
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["checks"]["C1"]["counterexamples"], 0);
  EXPECT_EQ(j["first_complete"]["3"], nlohmann::json::array({11, 3}));
}

TEST(Cli, OutFile) {
  const std::string path = ::testing::TempDir() + "revmult_out.txt";
  EXPECT_EQ(run("enumerate --g 10 --k 9 --count 2 --format bfile --out " + path).status, 0);
  std::ifstream f(path);
  std::stringstream text;
  text << f.rdbuf();
  EXPECT_EQ(text.str(), "1 1089\n2 10989\n");
}
