#include <gtest/gtest.h>

#include <sstream>

#include "wres/cli.hpp"

using namespace wres;
using cli::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(cli::RunConfig rc) {
  std::ostringstream out, err;
  int code = cli::run(rc, out, err);
  return {code, out.str(), err.str()};
}

cli::RunConfig make(cli::Command cmd, std::optional<int> n = std::nullopt, int p1 = 1, int p2 = 1) {
  cli::RunConfig rc;
  rc.command = cmd;
  rc.n = n;
  rc.p1 = p1;
  rc.p2 = p2;
  rc.format = cli::Format::json;
  return rc;
}

}  // namespace

TEST(CliCompute, DimensionFourTotal) {
  Result r = run(make(cli::Command::compute, 4));
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["phi_total_expr"], "0");
  for (const char* key : {"config", "cases", "phi_total_expr", "interior_constant_expr", "gravitational",
                          "special_c_expr", "notes"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  for (const auto& c : j["cases"]) {
    for (const char* key : {"label", "spec", "value_expr", "paper_value_expr", "agrees"}) EXPECT_TRUE(c.contains(key));
  }
  EXPECT_EQ(j["gravitational"]["ratios"].size(), 2u);
}

TEST(CliCompute, MixedConfigurationReportsDeviation) {
  Result r = run(make(cli::Command::compute, 6, 1, 3));
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["phi_total_expr"], "0");
  EXPECT_TRUE(j["special_c_expr"].is_null());
  EXPECT_EQ(j["cases"][4]["value_expr"], "(-1/16)*(65*a - 7*b)*pi*S(4)");
  EXPECT_FALSE(j["cases"][4]["agrees"].get<bool>());
}

TEST(CliCompute, ExactOverrides) {
  cli::RunConfig rc = make(cli::Command::compute, 4);
  rc.a = make_rational(1, 2);
  rc.b = Rational(3);
  json j = json::parse(run(rc).out);
  EXPECT_EQ(j["at"]["cases"]["aII"], "(-9/16)*pi*S(2)");
  EXPECT_EQ(j["at"]["phi_total_expr"], "0");
}

TEST(CliCompute, StableAcrossRuns) {
  EXPECT_EQ(run(make(cli::Command::compute, 6, 2, 2)).out, run(make(cli::Command::compute, 6, 2, 2)).out);
}

TEST(CliCompute, TextFormat) {
  cli::RunConfig rc = make(cli::Command::compute, 6, 2, 2);
  rc.format = cli::Format::text;
  Result r = run(rc);
  EXPECT_NE(r.out.find("phi_total 0"), std::string::npos);
  EXPECT_NE(r.out.find("DIFFERS"), std::string::npos);
}

TEST(CliCases, DimensionThree) {
  json j = json::parse(run(make(cli::Command::cases, 3)).out);
  ASSERT_EQ(j["cases"].size(), 1u);
  EXPECT_EQ(j["cases"][0]["prefactor"], "-i");
  EXPECT_EQ(j["cases"][0]["r"], -1);
  EXPECT_EQ(j["cases"][0]["l"], -1);
}

TEST(CliErrors, ConfigurationErrorsExitTwo) {
  Result r = run(make(cli::Command::compute, 4, 2, 1));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("(3,1,1), (4,1,1), (6,2,2), (6,1,3)"), std::string::npos);
  EXPECT_EQ(run(make(cli::Command::compute)).code, 2);
  cli::RunConfig bad = make(cli::Command::oracle);
  bad.trials = 0;
  EXPECT_EQ(run(bad).code, 2);
}

TEST(CliVerify, PaperSuiteFailsOnFinalDeviations) {
  Result r = run(make(cli::Command::verify));
  EXPECT_EQ(r.code, 1);
  json j = json::parse(r.out);
  EXPECT_EQ(j["failures"], 6);
  EXPECT_EQ(j["notes"], 2);
  for (const auto& c : j["checks"]) {
    if (c["status"] == "FAIL") {
      EXPECT_NE(c["detail"].get<std::string>().find("registered"), std::string::npos);
    }
  }
}

TEST(CliVerify, InternalSuitePasses) {
  cli::RunConfig rc = make(cli::Command::verify);
  rc.suite = cli::Suite::internal;
  rc.trials = 1;
  Result r = run(rc);
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(CliOracle, SingleConfiguration) {
  cli::RunConfig rc = make(cli::Command::oracle, 4);
  rc.trials = 2;
  Result r = run(rc);
  ASSERT_EQ(r.code, 0) << r.out;
  json j = json::parse(r.out);
  EXPECT_TRUE(j["all_agree"].get<bool>());
  EXPECT_EQ(j["results"].size(), 5u);
}

TEST(CliReport, ExpressionRoundTrip) {
  for (const auto& c : supported_configs()) {
    TheoremReport r = phi_total(c);
    std::vector<Expr> exprs{r.phi_total, r.phi_total_published, r.interior_constant, r.K, r.I_Gr_b};
    for (const auto& cr : r.cases) exprs.push_back(cr.contribution.value());
    for (const auto& f : r.ratios) exprs.insert(exprs.end(), {f.value, f.ratio, f.published_ratio});
    for (const auto& e : exprs) EXPECT_EQ(parse_expr(e.render()), e) << e.render();
  }
  EXPECT_EQ(parse_expr(published::special_c().render()), published::special_c());
}
