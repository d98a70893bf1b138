#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef YOUNGDIM_CLI_PATH
#error "YOUNGDIM_CLI_PATH must name the youngdim executable"
#endif

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status = -1;
  std::string out;  // stdout and stderr, interleaved
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string("'") + YOUNGDIM_CLI_PATH + "' " + args + " 2>&1";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("youngdim-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string out(const std::string& sub) const { return "--out '" + (dir_ / sub).string() + "'"; }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GreedyWritesSequence) {
  const Outcome r = run("greedy --mode strict --target 1000 --start \"\" " + out("g"));
  ASSERT_EQ(r.status, 0) << r.out;
  const std::string seq = slurp(dir_ / "g" / "greedy-strict.seq");
  EXPECT_EQ(seq.substr(0, seq.find('\n')), "strict;");
  EXPECT_EQ(std::count(seq.begin(), seq.end(), '\n'), 1001);
  EXPECT_TRUE(fs::exists(dir_ / "g" / "greedy-strict-c.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "g" / "greedy.config"));
}

TEST_F(Cli, ResumeMatchesFreshRun) {
  for (const char* mode : {"strict", "standard"}) {
    ASSERT_EQ(run(std::string("greedy --mode ") + mode + " --target 2000 " + out("fresh")).status, 0);
    ASSERT_EQ(run(std::string("greedy --mode ") + mode + " --target 1000 " + out("part")).status, 0);
    const fs::path part = dir_ / "part" / (std::string("greedy-") + mode + ".seq");
    const std::string first = slurp(part);
    // in place
    Outcome r = run("greedy --target 2000 --resume '" + part.string() + "' " + out("part"));
    ASSERT_EQ(r.status, 0) << r.out;
    const std::string fresh = slurp(dir_ / "fresh" / (std::string("greedy-") + mode + ".seq"));
    EXPECT_EQ(slurp(part), fresh);
    EXPECT_EQ(fresh.substr(0, first.size()), first);
    // into another directory
    r = run("greedy --target 3000 --resume '" + part.string() + "' " + out("copy"));
    ASSERT_EQ(r.status, 0) << r.out;
    ASSERT_EQ(run(std::string("greedy --mode ") + mode + " --target 3000 " + out("fresh3")).status, 0);
    EXPECT_EQ(slurp(dir_ / "copy" / (std::string("greedy-") + mode + ".seq")),
              slurp(dir_ / "fresh3" / (std::string("greedy-") + mode + ".seq")));
    fs::remove_all(dir_ / "part");
  }
}

TEST_F(Cli, ResumeRejectsTamperedFile) {
  ASSERT_EQ(run("greedy --mode strict --target 50 " + out("t")).status, 0);
  const fs::path seq = dir_ / "t" / "greedy-strict.seq";
  std::string text = slurp(seq);
  const std::size_t cut = text.rfind(';');
  text = text.substr(0, cut + 1) + "0.5\n";
  std::ofstream(seq) << text;
  const Outcome r = run("greedy --target 60 --resume '" + seq.string() + "' " + out("t2"));
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("ERROR:consistency:"), std::string::npos) << r.out;
}

TEST_F(Cli, ConfigFileAndOverride) {
  const fs::path conf = dir_ / "run.conf";
  std::ofstream(conf) << "# strict run\nmode=strict\ntarget=300\nseed=5\n";
  ASSERT_EQ(run("greedy --config '" + conf.string() + "' " + out("a")).status, 0);
  ASSERT_EQ(run("greedy --mode strict --target 300 " + out("b")).status, 0);
  EXPECT_EQ(slurp(dir_ / "a" / "greedy-strict.seq"), slurp(dir_ / "b" / "greedy-strict.seq"));
  ASSERT_EQ(run("greedy --config '" + conf.string() + "' --mode standard " + out("c")).status, 0);
  EXPECT_TRUE(fs::exists(dir_ / "c" / "greedy-standard.seq"));
  // the written config reproduces the run
  ASSERT_EQ(run("greedy --config '" + (dir_ / "a" / "greedy.config").string() + "' " + out("d")).status, 0);
  EXPECT_EQ(slurp(dir_ / "a" / "greedy-strict.seq"), slurp(dir_ / "d" / "greedy-strict.seq"));
}

TEST_F(Cli, PlancherelDeterministic) {
  ASSERT_EQ(run("plancherel --mode strict --target 1 --seed 3 " + out("p")).status, 0);
  EXPECT_EQ(slurp(dir_ / "p" / "plancherel-strict-n1-s3.txt"), "1\n");
  ASSERT_EQ(run("plancherel --mode strict --target 500 --seed 8 --count 3 " + out("x")).status, 0);
  ASSERT_EQ(run("plancherel --mode strict --target 500 --seed 8 --count 3 " + out("y")).status, 0);
  const std::string x = slurp(dir_ / "x" / "plancherel-strict-n500-s8.txt");
  EXPECT_EQ(x, slurp(dir_ / "y" / "plancherel-strict-n500-s8.txt"));
  EXPECT_EQ(std::count(x.begin(), x.end(), '\n'), 3);
}

TEST_F(Cli, MergeBatchAndPair) {
  Outcome r = run("merge --mode strict --target 200 --pairs 4 --budget 1000 --seed 2 " + out("m"));
  ASSERT_EQ(r.status, 0) << r.out;
  const std::string csv = slurp(dir_ / "m" / "merge-strict.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "pair;size_a;size_b;merged_at;steps_a;steps_b;budget_exhausted");
  EXPECT_NE(csv.find("summary;pairs=4;merged=4;max_steps="), std::string::npos) << csv;

  r = run("merge --mode strict --a 5,3,1 --b 5,3,1 " + out("same"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_NE(slurp(dir_ / "same" / "merge-strict.csv").find("\n0;9;9;9;0;0;0\n"), std::string::npos);

  r = run("merge --mode strict --a 30 --b 7,6,5,4,3,2,1 --budget 5000 " + out("col"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_NE(slurp(dir_ / "col" / "merge-strict.csv").find("merged=1;"), std::string::npos);
}

TEST_F(Cli, ExhaustiveListsSmallMaxima) {
  const Outcome r = run("exhaustive --mode strict --nmax 30 " + out("e"));
  ASSERT_EQ(r.status, 0) << r.out;
  const std::string csv = slurp(dir_ / "e" / "exhaustive-strict.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n;partition;lnDim;c;provenance");
  EXPECT_NE(csv.find("\n5;4,1;"), std::string::npos);
  EXPECT_EQ(csv.find("\n5;3,2;"), std::string::npos);

  const Outcome cap = run("exhaustive --mode standard --nmax 61 " + out("cap"));
  EXPECT_EQ(cap.status, 2);
  EXPECT_NE(cap.out.find("ERROR:capacity:"), std::string::npos) << cap.out;
  EXPECT_EQ(run("exhaustive --mode standard --nmax 12 --max-dp-level 10 " + out("cap2")).status, 2);
}

TEST_F(Cli, SearchWritesBestSequence) {
  const Outcome r = run("search --mode strict --target 80 --seed-count 2 --passes 2 " + out("s"));
  ASSERT_EQ(r.status, 0) << r.out;
  const std::string csv = slurp(dir_ / "s" / "search-strict.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n;partition;lnDim;c;provenance");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 81);
  EXPECT_NE(r.out.find("regular tail"), std::string::npos);
}

TEST_F(Cli, AnalyzeAndFit) {
  ASSERT_EQ(run("greedy --mode strict --target 3000 " + out("g")).status, 0);
  const std::string seq = (dir_ / "g" / "greedy-strict.seq").string();
  Outcome r = run("analyze --input '" + seq + "' --window 1000:3000 " + out("a"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("window 1000:3000"), std::string::npos);
  for (const char* f : {"differences.csv", "levels.csv", "step-positions.csv"}) {
    EXPECT_TRUE(fs::exists(dir_ / "a" / f)) << f;
  }
  const std::string diffs = slurp(dir_ / "a" / "differences.csv");
  EXPECT_EQ(std::count(diffs.begin(), diffs.end(), '\n'), 3000);

  r = run("fit --input '" + seq + "' " + out("f"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("window=600:3000"), std::string::npos) << r.out;

  // synthetic n,c input recovers the model
  const fs::path csv = dir_ / "synthetic.csv";
  {
    std::ofstream o(csv);
    o << "n,c\n";
    o.precision(21);
    for (int n = 100; n <= 5000; ++n) o << n << ',' << 0.7L + 4.3L / std::sqrt(static_cast<long double>(n)) << '\n';
  }
  r = run("fit --input '" + csv.string() + "' --window 100:5000 " + out("f2"));
  ASSERT_EQ(r.status, 0) << r.out;
  const std::size_t c = r.out.find("C=");
  const std::size_t a = r.out.find(" a=");
  ASSERT_NE(c, std::string::npos);
  EXPECT_NEAR(std::stold(r.out.substr(c + 2)), 0.7L, 1e-12L);
  EXPECT_NEAR(std::stold(r.out.substr(a + 3)), 4.3L, 1e-12L);
}

TEST_F(Cli, ErrorLines) {
  struct Case {
    std::string args;
    std::string code;
  };
  const std::vector<Case> cases{
      {"greedy --mode strict --start 2,2 --target 10 " + out("x"), "ERROR:format:"},
      {"greedy --mode wide " + out("x"), "ERROR:format:"},
      {"greedy --target 0 " + out("x"), "ERROR:argument:"},
      {"greedy --mode strict --start 5,4 --target 3 " + out("x"), "ERROR:contract:"},
      {"analyze " + out("x"), "ERROR:argument:"},
      {"fit --input '" + (dir_ / "missing.csv").string() + "' " + out("x"), "ERROR:io:"},
      {"greedy --target abc " + out("x"), "ERROR:format:"},
      {"greedy --colour blue", "ERROR:usage:"},
      {"", "ERROR:usage:"},
  };
  for (const Case& c : cases) {
    const Outcome r = run(c.args);
    EXPECT_EQ(r.status, 2) << c.args;
    EXPECT_EQ(r.out.rfind(c.code, 0), 0u) << c.args << "\n" << r.out;
  }
}
