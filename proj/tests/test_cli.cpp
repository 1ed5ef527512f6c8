#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CUNTZ_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe))
    out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST(Cli, Normalize) {
  auto r = run("normalize --algebra O2 \"s1s1' + s2s2'\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "I\n");
  r = run("normalize --algebra O2 -- \"-s1 s1'\"");
  EXPECT_EQ(r.out, "-I + s2 s2'\n");
  EXPECT_EQ(run("normalize --algebra O3 s4").code, 2);
  EXPECT_EQ(run("normalize --algebra O3 \"s1 +\"").code, 2);
  EXPECT_EQ(run("normalize --algebra X1 s1").code, 2);
}

TEST(Cli, Equals) {
  EXPECT_EQ(run("equals --algebra O2 \"s1s1' + s2s2'\" I").code, 0);
  auto r = run("equals --algebra Oinf \"s1s1' + s2s2'\" I");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("not equal"), std::string::npos);
}

TEST(Cli, HomApply) {
  auto r = run("hom apply --family f --args 1,2 s3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "s2 s2\n");
  EXPECT_EQ(run("hom apply --family f --args 1,2 --algebra O3 s3").out, "s2 s2\n");
  EXPECT_EQ(run("hom apply --family f --args 1,2 --algebra O2 s1").code, 2);
  EXPECT_EQ(run("hom apply --family finf --args 2 \"s4 s1'\"").out, "s3 s2 s1'\n");
  EXPECT_EQ(run("hom apply --family q --args 2,1 s3").out, "s2 s1\n");
  EXPECT_EQ(run("hom apply --family f --args 2,3 s1").code, 2);
  EXPECT_EQ(run("hom apply --family g --args 1 s1").code, 2);
}

TEST(Cli, InfiniteBoundFromEnvironment) {
  EXPECT_EQ(run("hom apply --family finf --args 1 s40").code, 0);
  const std::string env = "CUNTZ_INF_BOUND=abc ";
  const std::string cmd = env + CUNTZ_CLI + " hom apply --family finf --args 1 s1 >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}

TEST(Cli, VerifySuites) {
  EXPECT_EQ(run("verify inverse-system --max 24").code, 0);
  EXPECT_EQ(run("verify psi --chain 1,2,4 --expr \"s1 s3' + 2 s5\"").code, 0);
  EXPECT_EQ(run("verify decomposition --n 2 --max-len 6").code, 0);
  EXPECT_EQ(run("verify uhf --r 2 --depth 3").code, 0);
  EXPECT_EQ(run("verify state --max 12").code, 0);
}

TEST(Cli, VerifySuitesRefuteMutations) {
  for (const char* args : {"verify inverse-system --max 6", "verify psi --chain 1,2,4 --expr \"s1 s3' + 2 s5\"",
                           "verify decomposition --n 2 --max-len 4", "verify uhf --r 2 --depth 3",
                           "verify state --max 6"}) {
    auto r = run(std::string(args) + " --mutate");
    EXPECT_EQ(r.code, 1) << args;
    EXPECT_NE(r.out.find("FAIL"), std::string::npos) << args;
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("verify").code, 2);
  EXPECT_EQ(run("verify psi --chain 2,3 --expr s1").code, 2);
  EXPECT_EQ(run("verify state --max 0").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, PosetGraph) {
  const std::string path = "cli_graph_test.dot";
  std::remove(path.c_str());
  auto r = run("poset graph --max 8 --out " + path);
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string dot = ss.str();
  EXPECT_EQ(dot.rfind("digraph embeddability {", 0), 0u);
  EXPECT_NE(dot.find("\"O7\" -> \"O4\";"), std::string::npos);
  EXPECT_EQ(dot.find("\"O5\" -> \"O2\";"), std::string::npos);
  std::remove(path.c_str());
  EXPECT_NE(run("poset graph --max 8 --reverse").out.find("\"3\" -> \"6\";"), std::string::npos);
}

TEST(Cli, ProfiniteReport) {
  auto r = run("profinite report --depth 5 --bound 100 --format kv");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("witness_depth=5\n"), std::string::npos);
  r = run("profinite report --depth 9 --bound 1000000");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("inconclusive"), std::string::npos);
  EXPECT_EQ(run("profinite report --depth 3 --bound x").code, 2);
}

TEST(Cli, Partition) {
  auto r = run("partition --chain 1,2,4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("R1=O2 |s1", 0), 0u);
  EXPECT_EQ(run("partition --chain 2,3").code, 2);
}
