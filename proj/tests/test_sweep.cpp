#include "gctc/sweep.hpp"

#include <gtest/gtest.h>

#include "json.hpp"
#include "oracles.hpp"

namespace gctc {
namespace {

using json = nlohmann::json;

TEST(Sieve, Examples) {
  EXPECT_EQ(sieve_primes(3, 20), (std::vector<std::uint64_t>{3, 5, 7, 11, 13, 17, 19}));
  EXPECT_TRUE(sieve_primes(90, 96).empty());
  EXPECT_EQ(sieve_primes(2, 2), (std::vector<std::uint64_t>{2}));
  EXPECT_THROW(sieve_primes(1, 10), Error);
  EXPECT_THROW(sieve_primes(10, 5), Error);
}

TEST(Sieve, MatchesTrialDivision) {
  EXPECT_EQ(sieve_primes(3, 5000), oracle::primes_upto(5000));
}

TEST(Config, ParsesKeyValueText) {
  const auto cfg = parse_config_text(R"(
# comment
checks = thm_i, cor_1_9
prime_min = 5
prime_max = 50   # trailing
params = 4:1, 3:-2
m_mode = explicit
m = 4, 36
t_min = 2
t_max = 4
threads = 3
format = csv
)");
  EXPECT_EQ(cfg.checks, (std::vector<std::string>{"thm_i", "cor_1_9"}));
  EXPECT_EQ(cfg.prime_min, 5u);
  EXPECT_EQ(cfg.prime_max, 50u);
  EXPECT_EQ(cfg.params, (std::vector<std::pair<std::int64_t, std::int64_t>>{{4, 1}, {3, -2}}));
  EXPECT_EQ(cfg.m_mode, MMode::kExplicit);
  EXPECT_EQ(cfg.m_values, (std::vector<std::int64_t>{4, 36}));
  EXPECT_EQ(cfg.t_min, 2);
  EXPECT_EQ(cfg.t_max, 4);
  EXPECT_EQ(cfg.threads, 3u);
  EXPECT_EQ(cfg.format, ReportFormat::kCsv);
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(parse_config_text("bogus = 1"), Error);
  EXPECT_THROW(parse_config_text("prime_max = ten"), Error);
  EXPECT_THROW(parse_config_text("no equals sign"), Error);
  EXPECT_THROW(parse_config_text("params = 4"), Error);
  SweepConfig cfg;
  cfg.checks = {"thm_iii"};
  try {
    validate(cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kUnknownCheck);
  }
  cfg.checks = {};
  cfg.prime_min = 2;
  EXPECT_THROW(validate(cfg), Error);
}

TEST(Config, GridExpansion) {
  SweepConfig cfg;
  cfg.grid = {1, 2, -1, 0};
  EXPECT_EQ(expand_params(cfg),
            (std::vector<std::pair<std::int64_t, std::int64_t>>{{1, -1}, {1, 0}, {2, -1}, {2, 0}}));
}

TEST(Sweep, EmptyPrimeRange) {
  SweepConfig cfg;
  cfg.prime_min = 90;
  cfg.prime_max = 96;
  const auto report = run_sweep(cfg);
  EXPECT_TRUE(report.verdicts.empty());
  EXPECT_EQ(report.summary.pass + report.summary.fail + report.summary.skip, 0u);
}

TEST(Sweep, NoIntegerMIsSkipped) {
  SweepConfig cfg;
  cfg.checks = {"thm_ii"};
  cfg.params = {{2, 2}};
  cfg.prime_max = 40;
  const auto report = run_sweep(cfg);
  ASSERT_FALSE(report.verdicts.empty());
  for (const auto& v : report.verdicts) EXPECT_TRUE(v.skipped());
  EXPECT_EQ(report.summary.skip, report.verdicts.size());
}

TEST(Sweep, ExplicitMFiltersInvalidValues) {
  SweepConfig cfg;
  cfg.checks = {"thm_ii"};
  cfg.params = {{4, 1}};
  cfg.m_mode = MMode::kExplicit;
  cfg.m_values = {4, 5, 36};
  cfg.prime_min = 5;
  cfg.prime_max = 30;
  const auto report = run_sweep(cfg);
  for (const auto& v : report.verdicts) {
    ASSERT_TRUE(v.m.has_value());
    EXPECT_TRUE(*v.m == 4 || *v.m == 36);
  }
  EXPECT_EQ(report.summary.fail, 0u);
}

TEST(Sweep, SortedAndTallied) {
  SweepConfig cfg;
  cfg.prime_max = 30;
  cfg.grid = {-2, 2, -2, 2};
  const auto report = run_sweep(cfg);
  EXPECT_EQ(report.config.checks, known_checks());
  EXPECT_EQ(report.summary.fail, 0u);
  EXPECT_EQ(report.summary.pass + report.summary.skip, report.verdicts.size());
  for (std::size_t i = 1; i < report.verdicts.size(); ++i) {
    const auto& a = report.verdicts[i - 1];
    const auto& b = report.verdicts[i];
    EXPECT_LE(std::tie(a.check, a.p), std::tie(b.check, b.p));
  }
}

TEST(Sweep, DeterministicAcrossThreadCounts) {
  SweepConfig cfg;
  cfg.prime_max = 60;
  cfg.grid = {-2, 2, -2, 2};
  cfg.threads = 1;
  const auto one = run_sweep(cfg);
  cfg.threads = 8;
  const auto eight = run_sweep(cfg);
  EXPECT_EQ(emit_report(one, ReportFormat::kJson), emit_report(eight, ReportFormat::kJson));
  EXPECT_EQ(emit_report(one, ReportFormat::kCsv), emit_report(eight, ReportFormat::kCsv));
}

TEST(Report, JsonShape) {
  SweepConfig cfg;
  cfg.checks = {"cor_1_9"};
  cfg.prime_max = 11;
  const auto doc = json::parse(emit_report(run_sweep(cfg), ReportFormat::kJson));
  ASSERT_TRUE(doc.contains("config"));
  ASSERT_EQ(doc["verdicts"].size(), 4u);
  const auto& first = doc["verdicts"][0];
  EXPECT_EQ(first["check"], "cor_1_9");
  EXPECT_EQ(first["p"], 3);
  EXPECT_TRUE(first["holds"].is_null());
  EXPECT_EQ(first["params"]["b"], 4);
  EXPECT_EQ(doc["verdicts"][1]["holds"], true);
  EXPECT_EQ(doc["summary"]["pass"], 3);
  EXPECT_EQ(doc["summary"]["skip"], 1);
  EXPECT_EQ(doc["summary"]["total"], 4);
  EXPECT_FALSE(doc["config"].contains("threads"));
}

TEST(Report, CsvShape) {
  SweepConfig cfg;
  cfg.checks = {"mortenson"};
  cfg.prime_max = 7;
  const auto csv = emit_report(run_sweep(cfg), ReportFormat::kCsv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "check,p,b,c,m,t,e,lhs,rhs,holds,skip_reason");
  EXPECT_NE(csv.find("mortenson,5,,,16,,2,1,1,true,"), std::string::npos) << csv;
}

TEST(RunCheck, Dispatch) {
  EXPECT_TRUE(run_check("cor_1_9", 7, {}, {}, {}, {}).passed());
  EXPECT_TRUE(run_check("thm_ii", 7, 4, 1, 36, {}).passed());
  EXPECT_TRUE(run_check("bc2_family", 11, 5, 4, {}, {}).passed());
  EXPECT_THROW(run_check("thm_ii", 7, 4, 1, {}, {}), Error);
  EXPECT_THROW(run_check("nope", 7, {}, {}, {}, {}), Error);
  EXPECT_THROW(run_check("bc2_family", 11, 5, 3, {}, {}), Error);
}

}  // namespace
}  // namespace gctc
