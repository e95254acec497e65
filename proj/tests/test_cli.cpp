#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "irbar/report_json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = irbar::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(IRBAR_DATA_DIR) + "/" + name; }

std::string golden(const std::string& name) {
  std::ifstream f(std::string(IRBAR_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, Determinants) {
  EXPECT_EQ(run({"det", data("b2.mat")}).out, "-[-7,-4]\n");
  EXPECT_EQ(run({"det", data("b1.mat")}).out, "-[-7,6]\n");
}

TEST(Cli, MatchesGoldenFiles) {
  EXPECT_EQ(run({"det", data("b1.mat")}).out, golden("b1_det.txt"));
  EXPECT_EQ(run({"inv", data("b2.mat")}).out, golden("b2_inv.txt"));
  EXPECT_EQ(run({"eig", data("b3.mat")}).out, golden("b3_eig_phi.txt"));
  EXPECT_EQ(run({"eig", data("b3.mat"), "--convention", "paper"}).out, golden("b3_eig_paper.txt"));
  EXPECT_EQ(run({"--convention", "paper", "eig", data("b3.mat")}).out, golden("b3_eig_paper.txt"));
  EXPECT_EQ(run({"diag", data("b3.mat")}).out, golden("b3_diag.txt"));
  EXPECT_EQ(run({"exp", data("b3.mat")}).out, golden("b3_exp.txt"));
}

TEST(Cli, PaperConventionListsSixEigenvalues) {
  const Result r = run({"eig", data("b3.mat"), "--convention", "paper"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("X6 "), std::string::npos);
  EXPECT_NE(r.out.find("[0.38196601125010515,6.372281323269014]"), std::string::npos);
  EXPECT_NE(r.out.find("[-2.8669818343581808,3.325600569209071]"), std::string::npos);
}

TEST(Cli, ReadsStandardInput) {
  const Result r = run({"det", "-"}, "[1,2] [-1,3]\n[-1,3] [1,7]\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-[-7,-4]\n");
}

TEST(Cli, ProductOfTwoFiles) {
  const Result r = run({"prod", data("b3.mat"), data("b3.mat")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"det", "-"}, "").code, 2);
  EXPECT_NE(run({"det", "-"}, "").err.find("ParseError"), std::string::npos);
  EXPECT_EQ(run({"det", "-"}, "[1,2] [x,3]\n[1,2] [1,2]\n").code, 2);
  EXPECT_EQ(run({"det", data("missing.mat")}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"eig", data("b3.mat"), "--convention", "other"}).code, 2);
  EXPECT_EQ(run({"inv", data("b1.mat")}).code, 3);
  EXPECT_EQ(run({"diag", "-"}, "[1,1] [0,0]\n[0,0] [1,1]\n").code, 3);
  EXPECT_EQ(run({"exp", data("b3.mat"), "--method", "series", "--kmax", "5"}).code, 4);
  EXPECT_EQ(run({"eigvec", data("b3.mat"), "--value", "1,2"}).code, 2);
  EXPECT_EQ(run({"eig", "-"}, "[1,2]\n").code, 2);
}

TEST(Cli, Eigenvectors) {
  const Result r = run({"eigvec", data("b3.mat"), "--value", "2.618033988749895,6.372281323269014"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("V1 [1,1] [1.6180339887498947,2.186140661634507]  case POS,POS"), std::string::npos);
  const Result near = run({"eigvec", data("b3.mat"), "--value", "2.6180339,6.3722813"});
  EXPECT_EQ(near.code, 0);
}

TEST(Cli, ExpMethods) {
  const Result s = run({"exp", data("b3.mat"), "--method", "series"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out.rfind("series (36 terms)", 0), 0u);
  const Result d = run({"exp", "-", "--method", "both"}, "[1,1] [0,0]\n[0,0] [1,1]\n");
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("diagonalization unavailable"), std::string::npos);
}

TEST(Cli, JsonOutput) {
  const Result r = run({"eig", data("b3.mat"), "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = irbar::Json::parse(r.out);
  EXPECT_EQ(j["eigenvalues"].size(), 5u);
  EXPECT_EQ(j["eigenvalues"][0]["case"], "POS");
  EXPECT_EQ(j["eigenvalues"][0]["is_central"], true);
  EXPECT_EQ(j["eigenvalues"][0]["matched_center"], 4.5);
  EXPECT_TRUE(j["eigenvalues"][1]["matched_center"].is_null());
  const auto d = irbar::Json::parse(run({"det", data("b2.mat"), "--json"}).out);
  EXPECT_EQ(d["det"]["text"], "-[-7,-4]");
  const auto e = irbar::Json::parse(run({"exp", data("b3.mat"), "--json"}).out);
  EXPECT_EQ(e["terms_used"], 36);
  EXPECT_TRUE(e["deviation"].is_number());
}

TEST(Cli, CheckSelectedLaws) {
  const Result ok = run({"check", "--law", "associativity", "--law", "distributivity", "--samples", "500"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("[2,12] vs [1,12]"), std::string::npos);
  const Result bad = run({"check", "--law", "inverse_law", "--samples", "100"});
  EXPECT_EQ(bad.code, 1);
  const Result js = run({"check", "--law", "embedding", "--samples", "100", "--seed", "9", "--json"});
  const auto j = irbar::Json::parse(js.out);
  EXPECT_EQ(j["seed"], 9);
  EXPECT_EQ(j["probes"][0]["samples"], 100);
}
