#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gspin/cli.hpp"
#include "gspin/json_io.hpp"

namespace gspin::cli {
namespace {

struct Result {
  int code;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return Result{code, out.str()};
}

const std::string kPlane = R"({"field":"Q","gram":[[0,1],[1,0]]})";

TEST(Cli, UnknownSubcommandIsUsageError) {
  Result r = call({"frobnicate"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_EQ(r.json().at("error").at("kind"), "UsageError");
}

TEST(Cli, MissingSubcommandIsUsageError) { EXPECT_EQ(call({}).code, kUsage); }

TEST(Cli, HelpExitsZero) {
  Result r = call({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("localperiod"), std::string::npos);
}

TEST(Cli, EmptyDecompositionIsDomainError) {
  Result r = call({"lgroup", "compgroup", "--decomp", "[]"});
  EXPECT_EQ(r.code, kFailure);
  EXPECT_EQ(r.json().at("error").at("kind"), "InvalidDecomposition");
}

TEST(Cli, BadJsonNamesTheFlag) {
  Result r = call({"quad", "invariants", "--space", "{not json"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_EQ(r.json().at("error").at("flag"), "--space");
}

TEST(Cli, RunConfigValidation) {
  Result tol = call({"suite", "--criterion", "5", "--tol", "0"});
  EXPECT_EQ(tol.code, kUsage);
  EXPECT_EQ(tol.json().at("error").at("flag"), "--tol");
  Result k = call({"localperiod", "verify", "--case", "n2_inert", "--q", "3", "--random", "1", "--K", "9"});
  EXPECT_EQ(k.code, kUsage);
  EXPECT_EQ(k.json().at("error").at("flag"), "--K");
  EXPECT_THROW(validate(RunConfig{7, -1.0, 200}), UsageError);
  EXPECT_NO_THROW(validate(RunConfig{}));
}

TEST(Cli, BadChoiceIsUsageError) {
  EXPECT_EQ(call({"lgroup", "compgroup", "--decomp", "[]", "--convention", "sideways"}).code, kUsage);
}

TEST(Cli, QuadInvariants) {
  Result r = call({"quad", "invariants", "--space", kPlane});
  ASSERT_EQ(r.code, kOk);
  Json j = r.json();
  EXPECT_EQ(j.at("discriminant"), -1);
  EXPECT_EQ(j.at("places")[0].at("witt_index"), 1);
  Result s = call({"quad", "invariants", "--space", kPlane, "--disc", "signed"});
  EXPECT_EQ(s.json().at("discriminant"), 1);
}

TEST(Cli, DegenerateSpaceIsDomainError) {
  Result r = call({"quad", "invariants", "--space", R"({"field":"Q","gram":[[1,0],[0,0]]})"});
  EXPECT_EQ(r.code, kFailure);
  EXPECT_EQ(r.json().at("error").at("kind"), "DegenerateForm");
}

TEST(Cli, HilbertSymbol) {
  Result r = call({"quad", "hilbert", "--a", "-1", "--b", "-1", "--place", "2"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.json().at("symbol"), -1);
  EXPECT_EQ(call({"quad", "hilbert", "--a", "-1", "--b", "-1", "--place", "4"}).code, kUsage);
}

TEST(Cli, CliffordGSpinVerdicts) {
  const std::string space = R"({"field":"Q","gram":[[1,0],[0,1]]})";
  Result ok = call({"clifford", "gspin", "--space", space, "--x", R"([{"indices":[1,2],"coeff":"1"}])"});
  EXPECT_EQ(ok.code, kOk);
  EXPECT_EQ(ok.json().at("norm"), "1");
  Result no = call({"clifford", "gspin", "--space", space, "--x", R"([{"indices":[1],"coeff":"1"}])"});
  EXPECT_EQ(no.code, kFailure);
  EXPECT_EQ(no.json().at("rejection").at("clause"), "NotEven");
}

TEST(Cli, LowRankReport) {
  Result r = call({"structure", "verify-lowrank", "--space", R"({"field":"Q","gram":[[1]]})", "--samples", "5"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.json().at("case"), 1);
  EXPECT_EQ(r.json().at("seed"), 7);
}

TEST(Cli, LFactorDelta) {
  Result r = call({"lfactor", "delta", "--dim", "5", "--q", "2"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.json().at("exact"), "64/45");
}

TEST(Cli, LFactorQFromClass) {
  Result r = call({"lfactor", "std", "--class", R"({"family":"odd","satake":[[0,1]],"similitude":[1,0],"q":3})"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NEAR(r.json().at("value")[0].get<double>(), 0.9, 1e-12);
  EXPECT_EQ(call({"lfactor", "std", "--class", R"({"family":"odd","satake":[[0,1]]})"}).code, kUsage);
}

TEST(Cli, LocalPeriodSingleAndNegativeControl) {
  std::vector<std::string> base{"localperiod", "verify", "--case", "n2_split", "--q", "3", "--satake", "[0.6,0.8]",
                                "--chars", "[[1,0],[1,0]]"};
  EXPECT_EQ(call(base).code, kOk);
  base.push_back("--omit-delta");
  Result control = call(base);
  EXPECT_EQ(control.code, kFailure);
  EXPECT_NEAR(control.json().at("rel_error").get<double>(), 1.0 / 8.0, 1e-9);
}

TEST(Cli, LocalPeriodBatch) {
  auto path = std::filesystem::temp_directory_path() / "gspin_cli_batch.json";
  {
    std::ofstream f(path);
    f << R"([{"case":"n2_inert","q":5,"satake":[1,0],"chars":[1,0]},
             {"case":"n3_split","q":2,"satake":[[0.6,0.8],[1,0],[0,1]]}])";
  }
  Result r = call({"localperiod", "verify", "--batch", path.string()});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, kOk) << r.out;
  EXPECT_EQ(r.json().at("summary").at("passed"), 2);
  EXPECT_EQ(call({"localperiod", "verify", "--batch", "/nonexistent/batch.json"}).code, kUsage);
}

TEST(Cli, SameSeedGivesIdenticalBytes) {
  std::vector<std::string> args{"localperiod", "verify", "--case", "n3_split", "--q", "3", "--random", "4", "--seed", "11"};
  Result a = call(args);
  Result b = call(args);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  args.back() = "12";
  EXPECT_NE(call(args).out, a.out);
}

TEST(Cli, SuiteSubsetAndOutFile) {
  auto path = std::filesystem::temp_directory_path() / "gspin_cli_suite.json";
  Result r = call({"suite", "--criterion", "5", "--criterion", "6", "--out", path.string()});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  Json j = Json::parse(f);
  std::filesystem::remove(path);
  EXPECT_EQ(j.at("criteria").size(), 2U);
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_EQ(call({"suite"}).code, kUsage);
  EXPECT_EQ(call({"suite", "--criterion", "9"}).code, kUsage);
}

}  // namespace
}  // namespace gspin::cli
