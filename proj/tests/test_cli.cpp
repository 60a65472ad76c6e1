#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace sra;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "sra");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args) {
  auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

std::string value_str(const json& rep) { return rep["value"]["str"].get<std::string>(); }

}  // namespace

TEST(Cli, EvalExamples) {
  std::vector<std::string> base = {"eval", "--n", "3", "--kappa", "+1", "--nu", "1/3", "--params", "2/3", "--no-meta"};
  auto with = [&](const std::string& e) {
    auto a = base;
    a.push_back(e);
    return a;
  };
  EXPECT_EQ(value_str(run_json(with("a0*b1 - b1*a0"))), "0");
  EXPECT_EQ(value_str(run_json(with("S1"))), "2/3");
  EXPECT_EQ(value_str(run_json(with("L2"))), "0");
}

TEST(Cli, NegativeKappaAndEvenN) {
  auto r = run_json({"eval", "--n", "3", "--kappa", "-1", "--nu", "1/2", "--family", "half", "--no-meta", "S0"});
  EXPECT_EQ(value_str(r), "1/3");
  auto e = run_json({"eval", "--n", "4", "--nu", "1/3,1/5", "--params", "1,2", "--no-meta", "S2"});
  EXPECT_EQ(value_str(e), "2");
}

TEST(Cli, SingularScanTraceDims) {
  auto rep = run_json({"singular-scan", "--n", "3", "--z-range", "-4:4", "--no-meta"});
  std::vector<int> dims;
  for (const auto& row : rep["rows"]) dims.push_back(row["solution_dim"].get<int>());
  EXPECT_EQ(dims, (std::vector<int>{1, 0, 1, 1, 0, 1, 1, 0, 1}));
  auto empty = run({"singular-scan", "--n", "3", "--z-range", "1:0", "--no-meta"});
  EXPECT_EQ(empty.code, 0);
  EXPECT_TRUE(json::parse(empty.out)["rows"].empty());
}

TEST(Cli, SingularScanEvenLabels) {
  auto rep = run_json({"singular-scan", "--n", "4", "--mu-pairs", "1:1,1:1/2,1/2:1,7/3:1/3,1/3:1/4", "--no-meta"});
  std::vector<std::string> fams;
  for (const auto& row : rep["rows"]) fams.push_back(row["family"].get<std::string>());
  EXPECT_EQ(fams, (std::vector<std::string>{"Ak1", "Ak3", "Ak4", "Ak5", "generic"}));
}

TEST(Cli, GramAndNullcheck) {
  auto g = run_json({"gram", "--n", "3", "--nu", "1/3", "--family", "z=1", "--degree", "2", "--no-meta"});
  EXPECT_EQ(g["gram"]["degree"].get<int>(), 2);
  auto spec = degenerate_family(3, 1, DegenerateFamily::integer(1));
  auto back = gram_from_json(g["gram"], spec.algebra());
  EXPECT_EQ(to_json(back, spec.algebra()).dump(), g["gram"].dump());
  EXPECT_EQ(back.rank, gram_matrix(spec, 2).rank);

  auto n = run({"nullcheck", "--n", "3", "--nu", "1/3", "--family", "z=1", "--degree", "4", "--no-meta"});
  EXPECT_EQ(n.code, 0);
  EXPECT_EQ(json::parse(n.out)["message"].get<std::string>(), "all candidates annihilate degree ≤ 4");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"gram", "--n", "3", "--nu", "1/4", "--family", "z=1", "--degree", "2"}).code, 2);
  EXPECT_EQ(run({"gram", "--n", "3", "--family", "z=3", "--degree", "2"}).code, 2);
  EXPECT_EQ(run({"nullcheck", "--n", "3", "--nu", "1/4", "--params", "1"}).code, 2);
  EXPECT_EQ(run({"ideal-compare", "--n", "3", "--family", "z=3"}).code, 2);
  auto bad = run({"eval", "--n", "3", "--nu", "1/3", "--params", "2/3", "a0*(b1"});
  EXPECT_EQ(bad.code, 3);
  EXPECT_NE(bad.err.find("position"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).code, 3);
  EXPECT_EQ(run({"eval", "--n", "3", "--kappa", "2", "--nu", "1/3", "S0"}).code, 3);
}

TEST(Cli, ConfigOverridesFlags) {
  std::string path = ::testing::TempDir() + "sra_cli_config.json";
  {
    std::ofstream f(path);
    f << R"({"n": 3, "nu": "1/3", "params": ["2/3"], "expr": "S2", "no_meta": true})";
  }
  auto rep = run_json({"eval", "--n", "5", "--nu", "1/4", "--config", path, "S0"});
  EXPECT_EQ(value_str(rep), "2/3");
  EXPECT_FALSE(rep.contains("meta"));
  std::remove(path.c_str());
}

TEST(Cli, DeterministicWithoutMeta) {
  std::vector<std::string> a = {"genfun-dump", "--n", "3", "--nu", "1/3", "--family", "z=1", "--no-meta"};
  auto r1 = run(a), r2 = run(a);
  EXPECT_EQ(r1.code, 0);
  EXPECT_EQ(r1.out, r2.out);
  auto with_meta = run_json({"genfun-dump", "--n", "3", "--nu", "1/3", "--family", "z=1"});
  EXPECT_TRUE(with_meta.contains("meta"));
  for (const auto& row : json::parse(r1.out)["rows"]) EXPECT_TRUE(row["quasipoly"].get<bool>());
}

TEST(Cli, CsvAndOutputFile) {
  std::string path = ::testing::TempDir() + "sra_cli_out.csv";
  auto r = run({"singular-scan", "--n", "3", "--kappa", "-1", "--nu-list", "1/2,1/4", "--format", "csv", "--no-meta",
                "--output", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), "nu,solution_dim,family,basis\n1/2,1,th2_item3,1/4; 1\n1/4,0,nondegenerate,[]\n");
  std::remove(path.c_str());
}

TEST(Cli, IdealCompareReport) {
  auto rep = run_json({"ideal-compare", "--n", "3", "--family", "z=1", "--degree", "1", "--no-meta"});
  EXPECT_TRUE(rep["frequency_sets_equal"].get<bool>());
  auto back = ideal_report_from_json(rep);
  EXPECT_EQ(back.kernels.size(), 2u);
}
