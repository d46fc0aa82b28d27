#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperdrift/cli.hpp"
#include "hyperdrift/xorsat.hpp"

using namespace hyperdrift;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("hyperdrift_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  static XorSatInstance read_instance(const std::string& p) {
    std::ifstream in(p);
    return parse_instance(in);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenCompleteWritesInstanceAndWitness) {
  const auto r = run({"gen", "complete", "-k", "5", "-n", "7", "--seed", "1", "--out", path("c.xnf")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto inst = read_instance(path("c.xnf"));
  EXPECT_EQ(inst.num_equations(), 21u);
  std::ifstream w(path("c.xnf.witness"));
  EXPECT_TRUE(inst.satisfies(parse_assignment(w)));
}

TEST_F(CliTest, GenFamilies) {
  ASSERT_EQ(run({"gen", "triadic-cycle", "-m", "18", "--out", path("t.xnf")}).code, 0);
  EXPECT_EQ(read_instance(path("t.xnf")).num_equations(), 18u);
  ASSERT_EQ(run({"gen", "ctd", "--graph", "k4", "--out", path("k4.xnf")}).code, 0);
  EXPECT_EQ(read_instance(path("k4.xnf")).num_equations(), 4u);
  EXPECT_TRUE(fs::exists(path("k4.xnf.init")));
  ASSERT_EQ(run({"gen", "random-k-uniform", "-n", "10", "-m", "8", "-k", "3", "--seed", "2", "--out", path("r.xnf")}).code, 0);
  EXPECT_EQ(read_instance(path("r.xnf")).uniform_width(), 3u);
  ASSERT_EQ(run({"gen", "hnru", "-n", "5", "-r", "2", "--seed", "2", "--out", path("h.xnf")}).code, 0);
  EXPECT_EQ(read_instance(path("h.xnf")).uniform_width(), 4u);
  ASSERT_EQ(run({"gen", "sphere-hex", "--side", "2", "--out", path("s.xnf")}).code, 0);
  EXPECT_EQ(read_instance(path("s.xnf")).num_equations(), 48u);
  const auto hg = run({"gen", "complete", "-k", "3", "-n", "5", "--seed", "1", "--emit-hypergraph"});
  EXPECT_EQ(hg.out.substr(0, 7), "h 5 10\n");
  const auto dual = run({"gen", "triadic-cycle", "-m", "4", "--dual"});
  EXPECT_EQ(dual.out.substr(0, 6), "h 4 8\n");
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "complete", "-k", "5", "-n", "7"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "wheel"}).code, kExitUsage);
  EXPECT_EQ(run({"check", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "x.xnf"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "complete", "-k", "6", "-n", "5", "--seed", "1"}).code, kExitUsage);
}

TEST_F(CliTest, IoErrors) {
  EXPECT_EQ(run({"solve", path("missing.xnf"), "--seed", "1"}).code, kExitIo);
  std::ofstream(path("bad.xnf")) << "p xnf 2 1\n1 5 0\n";
  const auto r = run({"solve", path("bad.xnf"), "--seed", "1"});
  EXPECT_EQ(r.code, kExitIo);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST_F(CliTest, SolveSatisfiedStartAndSingleEquation) {
  ASSERT_EQ(run({"gen", "complete", "-k", "5", "-n", "7", "--z", "1010101", "--out", path("c.xnf")}).code, 0);
  const auto r = run({"solve", path("c.xnf"), "--seed", "4", "--trials", "5", "--start", "file:" + path("c.xnf.witness")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("mean=0 "), std::string::npos);

  std::ofstream(path("one.xnf")) << "p xnf 2 1\n1 0 1 0\n";
  std::ofstream(path("zero.txt")) << "00\n";
  const auto s = run({"solve", path("one.xnf"), "--seed", "1", "--trials", "20", "--start", "file:" + path("zero.txt"),
                      "--format", "json"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_NE(s.out.find("\"mean\": 1.0"), std::string::npos) << s.out;
}

TEST_F(CliTest, SolveIsByteReproducible) {
  ASSERT_EQ(run({"gen", "complete", "-k", "5", "-n", "8", "--seed", "3", "--out", path("c.xnf")}).code, 0);
  const std::vector<std::string> args = {"solve", path("c.xnf"), "--seed", "9", "--trials", "30", "--start", "distance"};
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, 20), "trial,steps,censored");
  auto with_traj = args;
  with_traj.insert(with_traj.end(), {"--trajectory", path("traj.csv")});
  ASSERT_EQ(run(with_traj).code, 0);
  EXPECT_EQ(slurp(path("traj.csv")).substr(0, 10), "t,unsat,u\n");
}

TEST_F(CliTest, DriftTauClassifyOnTriadicCycle) {
  ASSERT_EQ(run({"gen", "triadic-cycle", "-m", "12", "--out", path("t.xnf")}).code, 0);
  const auto d = run({"drift", "--dual", path("t.xnf"), "--exact"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(d.out.substr(0, d.out.find('\n')), "delta,size,min,mean,max,undefined_count");
  EXPECT_NE(d.err.find("min=1/5"), std::string::npos);
  const auto t = run({"tau", "--dual", path("t.xnf")});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("tau_odd = "), std::string::npos);
  const auto c = run({"classify", "--dual", path("t.xnf")});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("acyclic: yes"), std::string::npos);
  EXPECT_NE(c.out.find("CaseI"), std::string::npos);
}

TEST_F(CliTest, DriftByDensityOnCompleteHypergraph) {
  const auto hg = run({"gen", "complete", "-k", "5", "-n", "40", "--seed", "1", "--emit-hypergraph", "--out", path("k.hg")});
  ASSERT_EQ(hg.code, 0);
  const auto d = run({"drift", path("k.hg"), "--by-density"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(std::count(d.out.begin(), d.out.end(), '\n'), 20);
}

TEST_F(CliTest, CheckExitCodes) {
  const auto r = run({"check", "counterexamples"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(run({"check", "coupling", "-n", "5", "--trials", "20", "--graphs", "4"}).code, 0);
}

TEST_F(CliTest, BenchWritesOneRowPerSize) {
  const auto r = run({"bench", "triadic-cycle", "--sizes", "6:18:6", "--trials", "5", "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
  const auto c = run({"bench", "complete", "--sizes", "7,8", "--trials", "5", "--seed", "1", "--start", "half"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(run({"bench", "complete", "--sizes", "9:7", "--seed", "1"}).code, kExitUsage);
}
