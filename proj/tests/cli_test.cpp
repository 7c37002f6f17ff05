#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "gsplit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = gsplit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gsplit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::string named(const std::string& name) {
    return file(name + ".txt", gsplit::io::graph_to_string(gsplit::oracle::gen_named(name)));
  }

 private:
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, RecognizeUnipolar) {
  auto r = run({"recognize", named("P5")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "UNIPOLAR\ncenter: 1 2\nclique 1: 0\nclique 2: 3 4\n");
}

TEST_F(Cli, RecognizeCoUnipolar) {
  auto r = run({"recognize", named("C6")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "CO-UNIPOLAR\ncenter: 0 2 4\nclique 1: 1 3 5\n");
}

TEST_F(Cli, RecognizeNeither) {
  auto r = run({"recognize", named("G_c")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "NOT-GENERALIZED-SPLIT\n");
}

TEST_F(Cli, RecognizeDumpsTwoSat) {
  // Fill edges inside the center force a transferable-set search.
  auto r = run({"recognize", "--dump-2sat", named("C4")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "UNIPOLAR\ncenter: 0 1\nclique 1: 2 3\n");
}

TEST_F(Cli, SolveOnC6) {
  auto g = named("C6");
  EXPECT_EQ(run({"solve", "--problem", "mis", g}).out, "mis 3\n1 3 5\n");
  EXPECT_EQ(run({"solve", "--problem", "clique", g}).out.substr(0, 9), "clique 2\n");
  auto cover = run({"solve", "--problem", "cover", g});
  EXPECT_EQ(cover.code, 0);
  EXPECT_EQ(cover.out.substr(0, 8), "cover 3\n");
  EXPECT_EQ(run({"solve", "--problem", "coloring", g}).out.substr(0, 11), "coloring 2\n");
}

TEST_F(Cli, SolveWithSuppliedSplit) {
  auto g = named("P5");
  auto split = file("split.txt", "center: 2 3\nclique 1: 0 1\nclique 2: 4\n");
  auto r = run({"solve", "--problem", "cover", g, "--split", split});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "cover 3\npart 1: 0 1\npart 2: 2 3\npart 3: 4\n");
  auto bad = file("bad.txt", "center: 0\nclique 1: 1 2 3 4\n");
  EXPECT_EQ(run({"solve", "--problem", "cover", g, "--split", bad}).code, 2);
}

TEST_F(Cli, SolveRejectsNonGeneralizedSplit) {
  auto r = run({"solve", "--problem", "mis", named("G_c")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("not generalized split"), std::string::npos);
}

TEST_F(Cli, PerfectCode) {
  EXPECT_EQ(run({"perfect-code", named("C6")}).out, "perfect-code 2\n0 3\n");
  auto none = run({"perfect-code", named("C7")});
  EXPECT_EQ(none.code, 1);
  EXPECT_EQ(none.out, "perfect-code none\n");
  auto k = file("k.txt", "1 2\n");
  EXPECT_EQ(run({"perfect-code", named("P4"), "--split-graph", k}).out, "perfect-code 2\n0 3\n");
  EXPECT_EQ(run({"perfect-code", named("P30")}).code, 2);
  EXPECT_EQ(run({"perfect-code", named("P30"), "--max-n", "30"}).code, 0);
}

TEST_F(Cli, Reduce) {
  auto f = file("f.txt", "3 1\n0 1 2\n");
  auto r = run({"reduce", f});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 4), "7 6\n");
  auto two = file("two.txt", "3 2\n0 1 2\n0 1 2\n");
  EXPECT_EQ(run({"reduce", two}).out.substr(0, 5), "8 10\n");
  EXPECT_EQ(run({"reduce", "--bipartite", two}).out.substr(0, 4), "8 9\n");
}

TEST_F(Cli, GenIsDeterministic) {
  auto a = run({"gen", "gnp", "--seed", "3", "--n", "8", "--p", "0.5"});
  auto b = run({"gen", "gnp", "--seed", "3", "--n", "8", "--p", "0.5"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto u = run({"gen", "unipolar", "--seed", "3", "--n", "8", "--k", "2"});
  EXPECT_NE(u.out.find("# planted split:"), std::string::npos);
  EXPECT_EQ(run({"gen", "named", "--name", "C4"}).out, "4 4\n0 1\n0 3\n1 2\n2 3\n");
  EXPECT_EQ(run({"gen", "named", "--name", "bogus"}).code, 2);
}

TEST_F(Cli, CheckSuites) {
  auto r = run({"check", "--suite", "optimize", "--budget", "10", "--seed", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "suite optimize seed 2 budget 10\nsummary: 10 checked, 0 mismatches\n");
}

TEST_F(Cli, CheckTriangulation) {
  auto r = run({"check", "--triangulation", named("C4")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4 5\n0 1\n0 2\n0 3\n1 2\n2 3\n# fill:\n# 0 2\n");
}

TEST_F(Cli, InputErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"recognize"}).code, 2);
  EXPECT_EQ(run({"recognize", "/nonexistent/graph.txt"}).code, 2);
  auto bad = file("bad.txt", "3 1\n0 0\n");
  auto r = run({"recognize", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("gsplit: ", 0), 0u);
  EXPECT_EQ(run({"solve", "--problem", "sort", named("P5")}).code, 2);
  EXPECT_EQ(run({"check"}).code, 2);
}

TEST_F(Cli, Help) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("recognize"), std::string::npos);
}
