#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qlgca_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result run(const std::string& args) {
    const auto out = dir_ / "stdout.txt";
    const auto err = dir_ / "stderr.txt";
    const std::string cmd = std::string(QLGCA_CLI) + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
  }

  fs::path path(const std::string& name) const { return dir_ / name; }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }

 private:
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, InvariantsD1Q3) {
  const auto r = run("invariants --model d1q3");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rank"], 14);
  EXPECT_EQ(j["invariant_count"], 50);
  EXPECT_EQ(j["fixed_basis_strings"].size(), 8u);
}

TEST_F(Cli, InvariantsIdentity) {
  const auto r = run("invariants --model fhp --collisions identity");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rank"], 0);
  EXPECT_EQ(j["invariant_count"], 4096);
}

TEST_F(Cli, InvariantsTableAndCsv) {
  const auto r = run("invariants --model d1q3 --format csv --table " + path("t.csv").string());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("d1q3,all,3,14,50"), std::string::npos);
  EXPECT_FALSE(slurp(path("t.csv")).empty());
}

TEST_F(Cli, VerifyBuiltInCircuits) {
  auto r = run("verify fhp-b234 --out " + path("p.csv").string());
  EXPECT_EQ(r.code, 0) << r.err;
  const auto csv = slurp(path("p.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 65);
  r = run("verify d1q3-qpe");
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST_F(Cli, VerifyCorruptedCircuitFailsWithRow) {
  ASSERT_EQ(run("circuit d1q3-qpe --out " + path("c.txt").string()).code, 0);
  std::string text = slurp(path("c.txt"));
  const auto pos = text.find("X 0 |");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 5, "X 1 |");
  write("bad.txt", text);
  const auto r = run("verify d1q3-qpe --circuit " + path("bad.txt").string());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("first failing row 2"), std::string::npos) << r.err;
}

TEST_F(Cli, VerifyMalformedCircuitIsInputError) {
  write("junk.txt", "qubits 5\nX 9\n");
  const auto r = run("verify d1q3-qpe --circuit " + path("junk.txt").string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run("verify nonsense").code, 2);
}

TEST_F(Cli, SimulateD1Q3WorkedExample) {
  const auto r = run("simulate --model d1q3 --steps 1");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("1 6 0 5 7 0"), std::string::npos);
  EXPECT_NE(r.out.find("0,10,0,0"), std::string::npos);
  EXPECT_NE(r.out.find("1,10,0,0"), std::string::npos);
}

TEST_F(Cli, SimulateFhpDeterministicAndConserving) {
  const auto a = path("a"), b = path("b");
  ASSERT_EQ(run("simulate --model fhp --steps 20 --seed 5 --width 8 --height 6 --out " + a.string()).code, 0);
  ASSERT_EQ(run("simulate --model fhp --steps 20 --seed 5 --width 8 --height 6 --out " + b.string()).code, 0);
  EXPECT_EQ(slurp(a / "trajectory.txt"), slurp(b / "trajectory.txt"));
  std::istringstream q(slurp(a / "quantities.csv"));
  std::string line, first;
  std::getline(q, line);
  std::getline(q, first);
  first = first.substr(first.find(','));
  while (std::getline(q, line)) EXPECT_EQ(line.substr(line.find(',')), first);
}

TEST_F(Cli, SimulateMalformedLattice) {
  write("l.txt", "d1q3 3\n0 1 9\n");
  const auto r = run("simulate --lattice " + path("l.txt").string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2, column 5"), std::string::npos) << r.err;
  write("e.txt", "d1q3 4\n0 0 0 0\n");
  const auto empty = run("simulate --lattice " + path("e.txt").string() + " --steps 3");
  EXPECT_EQ(empty.code, 0);
  EXPECT_NE(empty.out.find("# step 3\nd1q3 4\n0 0 0 0"), std::string::npos);
}

TEST_F(Cli, QpeSpectrumAndHistogram) {
  const auto r = run("qpe --model fhp --quantity mass --histogram " + path("h.csv").string() +
                     " --states 1,2,4,8,16,32");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 65);
  EXPECT_FALSE(slurp(path("h.csv")).empty());
  EXPECT_EQ(run("qpe --quantity energy").code, 2);
  EXPECT_EQ(run("qpe --ancillas 0").code, 2);
}

TEST_F(Cli, NogoCertificate) {
  const auto r = run("nogo --restarts 200");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["infeasible"].get<bool>());
  EXPECT_GE(j["min_residual"].get<double>(), 0.1);
  EXPECT_EQ(j["contradiction_chain"]["derived"], "A+B = 0");
  const auto relaxed = nlohmann::json::parse(run("nogo --relaxed --restarts 20").out);
  EXPECT_FALSE(relaxed["infeasible"].get<bool>());
}

TEST_F(Cli, D1Q2RunIsExactAndDeterministic) {
  const auto r = run("d1q2 --shots 1000 --seed 3 --out " + path("d1.csv").string());
  ASSERT_EQ(r.code, 0) << r.err;
  ASSERT_EQ(run("d1q2 --shots 1000 --seed 3 --out " + path("d2.csv").string()).code, 0);
  const auto csv = slurp(path("d1.csv"));
  EXPECT_EQ(csv, slurp(path("d2.csv")));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 25 * 64);
  EXPECT_EQ(run("d1q2 --cells 48").code, 2);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("simulate --model hex").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}
