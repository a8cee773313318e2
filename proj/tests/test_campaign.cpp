#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>

#include "supercong/campaign.hpp"

using namespace supercong;

namespace {

CampaignConfig small_config(std::vector<std::string> checks, PrimeRange primes, long m_max = 4) {
  CampaignConfig c;
  c.checks = std::move(checks);
  c.primes = primes;
  c.m_max = m_max;
  return c;
}

}  // namespace

TEST(Parsing, CheckList) {
  EXPECT_EQ(parse_check_list("main_A,main_B"), (std::vector<std::string>{"main_A", "main_B"}));
  EXPECT_EQ(parse_check_list("all").size(), check_registry().size());
  EXPECT_THROW(parse_check_list("bogus"), ConfigError);
  EXPECT_THROW(parse_check_list(""), ConfigError);
}

TEST(Parsing, RangesListsFormats) {
  const PrimeRange r = parse_prime_range("5..200");
  EXPECT_EQ(r.lo, 5u);
  EXPECT_EQ(r.hi, 200u);
  EXPECT_THROW(parse_prime_range("5-200"), ConfigError);
  EXPECT_THROW(parse_prime_range("x..7"), ConfigError);
  EXPECT_EQ(parse_int_list("1,2, 3"), (std::vector<long>{1, 2, 3}));
  EXPECT_EQ(parse_format("csv"), OutputFormat::Csv);
  EXPECT_THROW(parse_format("xml"), ConfigError);
}

TEST(Validation, Bounds) {
  EXPECT_THROW(validate(small_config({"main_A"}, {3, 7})), ConfigError);
  EXPECT_THROW(validate(small_config({"main_A"}, {5, 7}, 1)), ConfigError);
  CampaignConfig zero_workers = small_config({"main_A"}, {5, 7});
  zero_workers.workers = 0;
  EXPECT_THROW(validate(zero_workers), ConfigError);
  EXPECT_NO_THROW(validate(small_config({"main_A"}, {5, 7})));
}

TEST(ConfigFile, ParsesAndFlagsCanOverride) {
  const std::string path = ::testing::TempDir() + "supercong_test.ini";
  {
    std::ofstream out(path);
    out << "# campaign\n[verify]\nchecks = main_A, mortenson\nprimes = 5..31\nm-max = 6\n"
           "a_values = 1,2\njobs = 3\nformat = csv\nmodulus.main_B = 2\n; trailing comment\n";
  }
  CampaignConfig c;
  apply_config_entries(c, read_config_file(path));
  std::remove(path.c_str());
  EXPECT_EQ(c.checks, (std::vector<std::string>{"main_A", "mortenson"}));
  ASSERT_TRUE(c.primes);
  EXPECT_EQ(c.primes->hi, 31u);
  EXPECT_EQ(c.m_max, 6);
  EXPECT_EQ(c.a_values, (std::vector<long>{1, 2}));
  EXPECT_EQ(c.workers, 3u);
  EXPECT_EQ(c.format, OutputFormat::Csv);
  EXPECT_EQ(c.modulus_overrides.at("main_B"), 2u);
  EXPECT_THROW(apply_config_entries(c, {{"colour", "blue"}}), ConfigError);
  EXPECT_THROW(read_config_file("/nonexistent/supercong.ini"), ConfigError);
}

TEST(Campaign, OneRecordPerTask) {
  const CampaignConfig c = small_config({"main_A", "main_B"}, {5, 13});
  const auto result = run_campaign(c);
  // Parameters with m <= 4: 1/2, 1/3, 2/3, 1/4, 3/4, for 4 primes and 2 checks.
  EXPECT_EQ(result.records.size(), 2u * 4u * 5u);
  EXPECT_EQ(result.exit_status, exit_status::kAllPass);
  EXPECT_TRUE(std::is_sorted(result.records.begin(), result.records.end(), record_less));
}

TEST(Campaign, SingleTheoremFiveRecord) {
  const auto result = run_campaign(small_config({"theorem5_first"}, {5, 5}));
  ASSERT_EQ(result.records.size(), 1u);
  const auto j = nlohmann::json::parse(records_to_json(result.records));
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["p"], 5);
  EXPECT_EQ(j[0]["lhs_residue"], "122");
  EXPECT_EQ(j[0]["rhs_residue"], "122");
  EXPECT_EQ(j[0]["modulus"], "125");
  EXPECT_EQ(j[0]["pass"], true);
}

TEST(Campaign, ExitStatuses) {
  EXPECT_EQ(run_campaign(small_config({"mortenson"}, {5, 31})).exit_status, exit_status::kAllPass);
  // partial_fraction breaks at p = 5, x = 4/7.
  EXPECT_EQ(run_campaign(small_config({"partial_fraction"}, {5, 5}, 7)).exit_status, exit_status::kTheoremFailure);

  CheckRecord finding;
  finding.check = "conjecture";
  finding.category = CheckCategory::Conjecture;
  finding.p = 5;
  finding.k = 2;
  CheckRecord theorem_fail = finding;
  theorem_fail.check = "main_A";
  theorem_fail.category = CheckCategory::Theorem;
  CheckRecord ok = finding;
  ok.pass = true;
  EXPECT_EQ(exit_status_for({ok}), exit_status::kAllPass);
  EXPECT_EQ(exit_status_for({ok, finding}), exit_status::kConjectureCounterexample);
  EXPECT_EQ(exit_status_for({finding, theorem_fail}), exit_status::kTheoremFailure);
  EXPECT_NE(records_to_text({finding}).find("findings"), std::string::npos);
}

TEST(Campaign, WorkerCountDoesNotChangeReport) {
  CampaignConfig c = small_config({"main_A", "conjecture", "lemma2_shift", "mortenson"}, {5, 61}, 6);
  c.workers = 1;
  const std::string one = records_to_json(run_campaign(c).records);
  c.workers = 4;
  const std::string four = records_to_json(run_campaign(c).records);
  EXPECT_EQ(one, four);
}

TEST(Reports, JsonRoundTripsByteForByte) {
  CampaignConfig c = small_config({"main_A", "beta_identity", "central_binomial_transfer"}, {5, 11});
  const std::string text = records_to_json(run_campaign(c).records);
  const auto j = nlohmann::json::parse(text);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.dump(2) + "\n", text);
  for (const auto& rec : j) {
    EXPECT_TRUE(rec["modulus"].is_string());
    if (!rec["lhs_residue"].is_null()) EXPECT_TRUE(rec["lhs_residue"].is_string());
  }
}

TEST(Reports, SkippedRecordsAreMarked) {
  const auto result = run_campaign(small_config({"main_A"}, {5, 5}, 5));
  std::size_t skipped = 0;
  for (const auto& r : result.records) skipped += r.skipped;
  EXPECT_EQ(skipped, 0u);  // parameters with p | m are not generated
  const std::string json = records_to_json({run_check({"main_A", 5, 1, 5, {}, {}})});
  const auto j = nlohmann::json::parse(json);
  EXPECT_EQ(j[0]["status"], "skipped");
  EXPECT_FALSE(j[0]["reason"].is_null());
}

TEST(Reports, CsvLayout) {
  const auto result = run_campaign(small_config({"main_A"}, {5, 5}, 2));
  const std::string csv = records_to_csv(result.records);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "check,p,r,m,a,k,lhs,rhs,modulus,pass");
  EXPECT_NE(csv.find("main_A,5,1,2,,2,22,22,25,true"), std::string::npos) << csv;
  EXPECT_EQ(records_to_csv({}), "check,p,r,m,a,k,lhs,rhs,modulus,pass\n");
}

TEST(Tables, Quotient) {
  const auto rows = quotient_table({5, 7}, {RationalParameter::make(1, 2)});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].p, 5u);
  EXPECT_EQ(rows[0].value, ExactRational(2483, 16384));
  EXPECT_EQ(rows[0].residue, 12);
  EXPECT_EQ(rows[1].residue, 1);
  EXPECT_TRUE(quotient_table({14, 16}, {RationalParameter::make(1, 2)}).empty());
  const std::string csv = format_quotient_table(rows, OutputFormat::Csv);
  EXPECT_NE(csv.find("2483/16384"), std::string::npos);
}

TEST(Tables, Harmonic) {
  const auto rows = harmonic_table(3, 2);
  bool found = false;
  for (const auto& row : rows)
    if (row.n == 3 && row.s == Composition({1, 2})) {
      found = true;
      EXPECT_EQ(row.value, ExactRational(5, 12));
    }
  EXPECT_TRUE(found);
  for (std::size_t i = 1; i < rows.size(); ++i)
    EXPECT_TRUE(std::tie(rows[i - 1].n, rows[i - 1].s) < std::tie(rows[i].n, rows[i].s));
  // Depth 1 and 2 with parts in {1, 2}: 2 + 4 compositions for each n = 0..3.
  EXPECT_EQ(rows.size(), 4u * 6u);
  const auto j = nlohmann::json::parse(format_harmonic_table(rows, OutputFormat::Json));
  EXPECT_EQ(j.size(), rows.size());
  EXPECT_TRUE(harmonic_table(3, 0).empty());
}
