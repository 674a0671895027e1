#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "twistzhu/cli/cli.hpp"
#include "twistzhu/cli/report.hpp"
#include "twistzhu/cli/suites.hpp"

using namespace twistzhu::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CliAj, KOneIsAllZero) {
  const auto r = run({"aj", "--k", "1", "--order", "5"});
  EXPECT_EQ(r.code, kExitPass);
  for (int j = 1; j <= 5; ++j)
    EXPECT_NE(r.out.find("a_" + std::to_string(j) + " = 0\n"), std::string::npos) << r.out;
}

TEST(CliAj, KTwo) {
  const auto r = run({"aj", "--k", "2", "--order", "3"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("a_1 = -1/2"), std::string::npos);
  EXPECT_NE(r.out.find("a_2 = 1/4"), std::string::npos);
  EXPECT_NE(r.out.find("a_3 = -3/16"), std::string::npos);
}

TEST(CliAj, Json) {
  const auto r = run({"aj", "--k", "3", "--order", "4", "--json"});
  ASSERT_EQ(r.code, kExitPass);
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["k"], 3);
  EXPECT_EQ(doc["a"], Json({"-1", "2/3", "-2/3", "7/9"}));
}

TEST(CliAj, BadFlags) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"aj", "--k", "0", "--order", "3"},
                                                                  {"aj", "--k", "2"},
                                                                  {"aj", "--k", "x", "--order", "3"},
                                                                  {"aj", "--k", "2", "--order", "3", "--bogus"},
                                                                  {},
                                                                  {"frobnicate"}}) {
    const auto r = run(args);
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("error"), std::string::npos);
  }
}

TEST(CliHelp, GoesToStandardOutput) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
  r = run({"verify", "--help"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("--max-weight"), std::string::npos);
  EXPECT_EQ(r.out.find("--corrupt-aj"), std::string::npos);
  r = run({"--version"});
  EXPECT_EQ(r.out, std::string(kToolVersion) + "\n");
}

TEST(CliZhu, Examples) {
  auto r = run({"zhu", "--op", "star", "--u", "a(-1)|0>", "--v", "a(-1)|0>"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "a(-1)^2|0>\n");
  r = run({"zhu", "--op", "star", "--u", "|0>", "--v", "a(-3)|0>"});
  EXPECT_EQ(r.out, "a(-3)|0>\n");
  r = run({"zhu", "--op", "circ", "--u", "a(-1)|0>", "--v", "|0>"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("a(-2)|0>"), std::string::npos);
  EXPECT_NE(r.out.find("a(-1)|0>"), std::string::npos);
}

TEST(CliZhu, TwistedOps) {
  auto r = run({"zhu", "--op", "star_g", "--k", "2", "--u", "[|0> | |0>]", "--v", "[a(-1)|0> | |0>]"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_FALSE(r.out.empty());
  r = run({"zhu", "--op", "circ_g", "--k", "2", "--u", "[a(-1)|0> | |0>] - [|0> | a(-1)|0>]", "--v",
           "[|0> | |0>]", "--json"});
  ASSERT_EQ(r.code, kExitPass);
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["op"], "circ_g");
  EXPECT_FALSE(doc["result"].get<std::string>().empty());
}

TEST(CliZhu, ParseErrorsReportPosition) {
  const auto r = run({"zhu", "--op", "star", "--u", "a(1)|0>", "--v", "|0>"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("position 2"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("\n    ^"), std::string::npos) << r.err;
  EXPECT_EQ(run({"zhu", "--op", "star_g", "--k", "2", "--u", "[|0>]", "--v", "|0>"}).code, kExitUsage);
  EXPECT_EQ(run({"zhu", "--op", "cross", "--u", "|0>", "--v", "|0>"}).code, kExitUsage);
}

TEST(CliVerify, IdentitiesPass) {
  const auto r = run({"verify", "--suite", "identities", "--k", "4"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("identities/eta-system/k=4"), std::string::npos);
}

TEST(CliVerify, MainPassesAtLowWeight) {
  const auto r = run({"verify", "--suite", "main", "--k", "2", "--max-weight", "2", "--json"});
  EXPECT_EQ(r.code, kExitPass);
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["schema"], kReportSchema);
  EXPECT_EQ(doc["summary"]["fail"], 0);
  EXPECT_GT(doc["summary"]["pass"].get<int>(), 0);
  int circ = 0, star = 0;
  for (const auto& c : doc["checks"]) {
    const auto id = c["id"].get<std::string>();
    circ += id.starts_with("main/circ/");
    star += id.starts_with("main/star/");
  }
  EXPECT_EQ(circ, 16);  // 4 x 4 basis pairs at k = 2
  EXPECT_EQ(star, 16);
}

TEST(CliVerify, FaultInjectionIsDetected) {
  const auto r = run({"verify", "--suite", "main", "--k", "2", "--max-weight", "2", "--corrupt-aj", "2"});
  EXPECT_EQ(r.code, kExitCheckFailed);
  EXPECT_NE(r.out.find("FAIL main/"), std::string::npos);
  const auto clean = run({"verify", "--suite", "identities", "--k", "2", "--corrupt-aj", "2"});
  EXPECT_EQ(clean.code, kExitPass);
}

TEST(CliVerify, DeterministicOutput) {
  const std::vector<std::string> args{"verify", "--suite", "change-of-var", "--trials", "25", "--seed", "42", "--json"};
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, kExitPass);
  EXPECT_EQ(a.out, b.out);
  const auto c = run({"verify", "--suite", "change-of-var", "--trials", "25", "--seed", "43", "--json"});
  EXPECT_NE(a.out, c.out);
  const auto t1 = run({"verify", "--k", "2", "--max-weight", "1"});
  const auto t2 = run({"verify", "--k", "2", "--max-weight", "1"});
  EXPECT_EQ(t1.out, t2.out);
}

TEST(CliVerify, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "twistzhu_cli_out_test.json";
  std::filesystem::remove(path);
  const auto r = run({"verify", "--suite", "identities", "--k", "2", "--json", "--out", path.string()});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(Json::parse(buf.str())["config"]["suite"], "identities");
  std::filesystem::remove(path);
  EXPECT_EQ(run({"aj", "--k", "2", "--order", "2", "--out", "/nonexistent-dir/x"}).code, kExitUsage);
}

TEST(CliVerify, LargeEnvelopeWarns) {
  const auto r = run({"verify", "--suite", "identities", "--k", "9"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Report, SkippedNeedsReason) {
  Report rep(Json::object());
  CheckRecord rec;
  rec.id = "x";
  rec.status = Status::skipped;
  EXPECT_THROW(rep.add(rec), std::logic_error);
  rec.reason = "not applicable";
  rep.add(rec);
  EXPECT_EQ(rep.count(Status::skipped), 1);
  EXPECT_FALSE(rep.any_failed());
  const auto doc = rep.to_json();
  EXPECT_EQ(doc["checks"][0]["status"], "skipped");
  EXPECT_EQ(doc["checks"][0]["reason"], "not applicable");
  EXPECT_EQ(doc["summary"]["total"], 1);
  EXPECT_NE(rep.to_text().find("SKIP x"), std::string::npos);
}

TEST(Suites, UnknownSuiteIsRejected) {
  VerifyOptions o;
  o.suite = "nope";
  EXPECT_THROW(run_verify(o), std::invalid_argument);
}
