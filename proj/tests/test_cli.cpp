#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bilab/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "bilab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  int code = bilab::cli::main(static_cast<int>(argv.size()), argv.data(), o, e);
  return {code, o.str(), e.str()};
}

const std::vector<std::string> kPolyP1{"poly", "--rho1", "1", "--rho2", "2", "--r1", "1/2", "--r2", "1/4", "--nmax", "2"};

}  // namespace

TEST(CliPoly, ExampleEigenvalues) {
  auto r = cli(kPolyP1);
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = bilab::Json::parse(r.out);
  ASSERT_EQ(j["polynomials"].size(), 3u);
  EXPECT_EQ(j["polynomials"][0]["lambda"], "11/4");
  EXPECT_EQ(j["polynomials"][1]["lambda"], "-15/4");
  EXPECT_EQ(j["polynomials"][2]["lambda"], "19/4");
  // B_1 = x - 8/13 for these parameters.
  EXPECT_EQ(j["polynomials"][1]["coeffs"], (bilab::Json{"-8/13", "1"}));
  EXPECT_EQ(j["grid"][0]["x_s"], "1");
}

TEST(CliPoly, CsvIsRfc4180) {
  auto args = kPolyP1;
  args.insert(args.end(), {"--format", "csv"});
  auto r = cli(args);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "n,lambda,A,C,c0,c1,c2\r\n"
            "0,11/4,5/13,0,1,,\r\n"
            "1,-15/4,52/17,-18/13,-8/13,1,\r\n"
            "2,19/4,6/7,-1/17,2/17,1/17,1\r\n");
}

TEST(CliCsv, QuotesSpecialFields) {
  EXPECT_EQ(bilab::cli::csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(bilab::cli::csv_field("say \"x\""), "\"say \"\"x\"\"\"");
  EXPECT_EQ(bilab::cli::csv_field("3/4"), "3/4");
}

TEST(CliPoly, DegenerateExitsTwoNamingParameter) {
  auto r = cli({"poly", "--r1", "1/2", "--r2", "1/2", "--rho1", "0", "--rho2", "0", "--nmax", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("1-r1-r2"), std::string::npos) << r.err;
}

TEST(CliPoly, RejectsDecimalLiterals) {
  auto r = cli({"poly", "--rho1", "0.5", "--rho2", "2", "--r1", "1/2", "--r2", "1/4"});
  EXPECT_EQ(r.code, 2);
}

TEST(CliRacah, ExampleIdentificationsAndK3) {
  auto r = cli({"racah", "--mu", "1/4,1/3,1/2", "--N", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = bilab::Json::parse(r.out);
  EXPECT_EQ(j["identifications"]["rho1"], "5/12");
  EXPECT_EQ(j["identifications"]["rho2"], "13/6");
  EXPECT_EQ(j["identifications"]["r1"], "1/12");
  EXPECT_EQ(j["identifications"]["r2"], "23/12");
  EXPECT_EQ(j["k3_spectrum"], (bilab::Json{"13/12", "-25/12", "37/12"}));
  EXPECT_EQ(j["tridiagonal"]["B"][0], "-20/19");
  EXPECT_EQ(j["tridiagonal"]["D"][1], "-93/38");
  EXPECT_TRUE(j["report"]["summary"]["ok"]);
}

TEST(CliRacah, SingleStateModule) {
  auto r = cli({"racah", "--mu", "1/4,1/3,1/2", "--N", "0"});
  ASSERT_EQ(r.code, 0);
  auto j = bilab::Json::parse(r.out);
  EXPECT_EQ(j["tridiagonal"]["K1"].size(), 1u);
  ASSERT_EQ(j["grid"].size(), 1u);
  EXPECT_EQ(j["grid"][0]["x_s"], "5/12");
}

TEST(CliRacah, InadmissibleMuExitsTwo) {
  EXPECT_EQ(cli({"racah", "--mu", "-1/2,0,0", "--N", "1"}).code, 2);
  EXPECT_EQ(cli({"racah", "--mu", "1/4,1/3", "--N", "1"}).code, 2);
}

TEST(CliWeights, PositiveAndNormalized) {
  auto r = cli({"weights", "--mu", "1/4,1/3,1/2", "--N", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = bilab::Json::parse(r.out);
  double total = 0;
  for (const auto& n : j["nodes"]) {
    EXPECT_GT(n["weight"].get<double>(), 0);
    total += n["weight"].get<double>();
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(CliDirac, PerSliceReport) {
  auto r = cli({"dirac", "--maxdeg", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = bilab::Json::parse(r.out);
  bool saw_slice2 = false, saw_variant = false;
  for (const auto& rep : j["reports"])
    for (const auto& e : rep["entries"]) {
      saw_slice2 = saw_slice2 || e["degree"] == 2;
      saw_variant = saw_variant || e.contains("required");
    }
  EXPECT_TRUE(saw_slice2);
  EXPECT_TRUE(saw_variant);
}

TEST(CliVerify, ScopeDiracSmall) {
  auto r = cli({"verify", "--scope", "dirac", "--maxdeg", "2", "--tuples", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(CliVerify, BiSeedSevenUsesFiftyTuples) {
  auto r = cli({"verify", "--scope", "bi", "--maxdeg", "10", "--seed", "7"});
  ASSERT_EQ(r.code, 0);
  auto j = bilab::Json::parse(r.out);
  EXPECT_EQ(j["suites"][0]["tuples"], 50);
  EXPECT_EQ(j["seed"], 7);
}

TEST(CliVerify, DeterministicJson) {
  auto a = cli({"verify", "--scope", "all", "--seed", "11", "--tuples", "3"});
  auto b = cli({"verify", "--scope", "all", "--seed", "11", "--tuples", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto c = cli({"verify", "--scope", "all", "--seed", "12", "--tuples", "3", "--detail"});
  EXPECT_NE(a.out, c.out);
}

TEST(CliVerify, InjectedFaultExitsOne) {
  EXPECT_EQ(cli({"verify", "--scope", "sl1", "--inject-fault"}).code, 1);
  EXPECT_EQ(cli({"verify", "--scope", "all", "--tuples", "2", "--inject-fault"}).code, 1);
}

TEST(CliVerify, InvalidFlagsExitTwo) {
  EXPECT_EQ(cli({"verify", "--scope", "everything"}).code, 2);
  EXPECT_EQ(cli({"verify", "--format", "xml"}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
}

TEST(CliOutput, WritesFile) {
  const std::string path = "cli_out_test.json";
  auto args = kPolyP1;
  args.insert(args.end(), {"--out", path});
  auto r = cli(args);
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), cli(kPolyP1).out);
  std::remove(path.c_str());
}
