#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "boxcover/boxcover.hpp"

using namespace boxcover;
namespace fs = std::filesystem;

namespace {

const std::string kCli = BOXCOVER_CLI;
const fs::path kCorpus = BOXCOVER_CORPUS_DIR;

struct Run {
  int status;
  std::string out;
};

// Runs the CLI with `args`, capturing stdout; stderr is discarded.
Run run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = ::pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string corpus(const std::string& rel) { return (kCorpus / rel).string(); }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("boxcover_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
    return tmp(name);
  }
  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, SolveGreedyOnOneRedPoint) {
  const auto r = run("solve bcc --greedy " + corpus("points/single_red.pts"));
  EXPECT_EQ(r.status, 0);
  std::istringstream in(r.out);
  EXPECT_EQ(io::read_cover(in).size(), 1u);
}

TEST_F(CliTest, SolveSbccExactMatchesCorpus) {
  const auto r = run("solve sbcc --exact " + corpus("points/checker.pts"));
  EXPECT_EQ(r.status, 0);
  std::istringstream in(r.out);
  EXPECT_EQ(io::read_cover(in).size(), 4u);
}

TEST_F(CliTest, GenVcOnTriangleThenExtract) {
  const auto pts = tmp("k3.pts"), cert = tmp("k3.json"), cover = tmp("k3.cover");
  ASSERT_EQ(run("gen vc-bcc " + corpus("vc/triangle.graph") + " -o " + pts + " --cert " + cert).status, 0);
  const auto s = io::load_points(pts);
  EXPECT_EQ(s.count(Color::Red), 9u);
  EXPECT_GT(s.count(Color::Blue), 0u);
  ASSERT_EQ(run("solve bcc --exact " + pts + " -o " + cover).status, 0);
  EXPECT_EQ(io::load_cover(cover).size(), 5u);
  const auto vc = run("transform extract-vc --in " + cover + " --points " + pts + " --cert " + cert);
  EXPECT_EQ(vc.status, 0);
  EXPECT_EQ(vc.out.substr(0, 2), "2\n");
}

TEST_F(CliTest, SrpcRoundTrip) {
  const auto pts = tmp("l.pts"), cert = tmp("l.json"), cover = tmp("l.cover");
  ASSERT_EQ(run("gen srpc-sbcc " + corpus("srpc/l_shape.poly") + " -o " + pts + " --cert " + cert).status, 0);
  ASSERT_EQ(run("solve sbcc " + pts + " -o " + cover).status, 0);
  const auto r = run("transform extract-srpc --in " + cover + " --points " + pts + " --cert " + cert);
  EXPECT_EQ(r.status, 0);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  EXPECT_EQ(lines, io::load_cover(cover).size());
}

TEST_F(CliTest, DisjointifyRing) {
  const auto r = run("transform disjointify --in " + corpus("fill/ring_around_blue.cover") + " --points " +
                     corpus("fill/ring_around_blue.pts"));
  EXPECT_EQ(r.status, 0);
  std::istringstream in(r.out);
  const auto z = io::read_cover(in);
  EXPECT_TRUE(interiors_pairwise_disjoint(z));
  EXPECT_TRUE(is_valid_sbcc(z, io::load_points(corpus("fill/ring_around_blue.pts"))));
}

TEST_F(CliTest, AnalyzePolygon) {
  const auto r = run("analyze polygon " + corpus("srpc/annulus.poly"));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("holes 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("cover 4\n"), std::string::npos);
  const auto c = run("analyze small-complement " + corpus("srpc/annulus.poly"));
  EXPECT_NE(c.out.find("complement_cover 5\n"), std::string::npos);
}

TEST_F(CliTest, BenchFiftyTrialsAllRatiosAtLeastOne) {
  const auto r = run("bench sbcc --trials 50 --points 12 --seed 7");
  EXPECT_EQ(r.status, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, io::kBenchHeader);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string t; std::getline(ss, t, ',');) f.push_back(t);
    ASSERT_EQ(f.size(), 10u);
    EXPECT_EQ(f[9], "0");
    EXPECT_GE(std::stod(f[6]), 1.0) << line;
  }
  EXPECT_EQ(rows, 50u);
}

TEST_F(CliTest, SeedsAreDeterministic) {
  EXPECT_EQ(run("gen random --points 15 --seed 4").out, run("gen random --points 15 --seed 4").out);
  EXPECT_NE(run("gen random --points 15 --seed 4").out, run("gen random --points 15 --seed 5").out);
  const auto pts = write("p.pts", run("gen random --points 9 --seed 2").out);
  EXPECT_EQ(run("transform perturb " + pts + " --seed 1").out, run("transform perturb " + pts + " --seed 1").out);
}

TEST_F(CliTest, RenderIsByteIdentical) {
  const std::string args = "render --points " + corpus("fill/nested_rings.pts") + " --cover " +
                           corpus("fill/nested_rings.cover") + " --polygon " + corpus("srpc/annulus.poly");
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("<svg", 0), 0u);
  EXPECT_NE(run("render").status, 0);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run("solve bcc " + write("bad.pts", "R 0 0\nQ 1 1\n")).status, 1);
  EXPECT_EQ(run("solve bcc /nonexistent.pts").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
  const auto big = write("big.pts", run("gen random --points 40 --seed 3").out);
  EXPECT_EQ(run("solve sbcc --budget 1 " + big).status, 2);
  EXPECT_EQ(run("solve sbcc " + big).status, 0);
  EXPECT_EQ(::system(("BOXCOVER_BUDGET=1 " + kCli + " solve sbcc " + big + " >/dev/null 2>&1").c_str()) >> 8, 2);
}
