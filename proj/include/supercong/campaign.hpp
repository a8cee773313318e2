#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supercong/congruences.hpp"
#include "supercong/primes.hpp"

namespace supercong {

/// Invalid campaign configuration (maps to exit status 2).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { Json, Csv, Text };

struct CampaignConfig {
  std::vector<std::string> checks;  // registry names, "all" already expanded
  std::optional<PrimeRange> primes;  // unset: 5..default cap of each check
  long m_max = 10;
  std::vector<long> a_values{1, 2, 3};
  std::map<std::string, unsigned> modulus_overrides;
  unsigned workers = 1;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> output_path;
  bool exact_everywhere = false;
  Prime cross_check_limit = 50;  // both paths are run and compared for p <= this
};

namespace exit_status {
inline constexpr int kAllPass = 0;
inline constexpr int kTheoremFailure = 1;
inline constexpr int kUsage = 2;
inline constexpr int kConjectureCounterexample = 3;
}  // namespace exit_status

std::vector<std::string> parse_check_list(const std::string& text);
PrimeRange parse_prime_range(const std::string& text);  // "LO..HI"
std::vector<long> parse_int_list(const std::string& text);
OutputFormat parse_format(const std::string& text);

/// Reads `key = value` lines ('#' and ';' start comments, [sections] ignored).
std::map<std::string, std::string> read_config_file(const std::string& path);
/// Applies entries: checks, primes, m_max, a_values, jobs, format, output,
/// exact, cross_check_limit, modulus.<check>.
void apply_config_entries(CampaignConfig& config, const std::map<std::string, std::string>& entries);

/// Throws ConfigError on an invalid configuration.
void validate(const CampaignConfig& config);

/// All tasks of a configuration, in generation order.
std::vector<CheckTask> campaign_tasks(const CampaignConfig& config);

struct CampaignResult {
  std::vector<CheckRecord> records;  // sorted with record_less
  int exit_status = exit_status::kAllPass;
  std::size_t failures = 0;
  std::size_t findings = 0;
  std::size_t skipped = 0;
  std::size_t discrepancies = 0;
};

/// Runs every task on `workers` threads and sorts the records.
CampaignResult run_campaign(const CampaignConfig& config);

int exit_status_for(const std::vector<CheckRecord>& records);

std::string format_records(const std::vector<CheckRecord>& records, OutputFormat format);
std::string records_to_json(const std::vector<CheckRecord>& records);
std::string records_to_csv(const std::vector<CheckRecord>& records);
std::string records_to_text(const std::vector<CheckRecord>& records);

// --- exploration tables ----------------------------------------------------

struct QuotientRow {
  Prime p;
  long r;
  long m;
  ExactRational value;
  BigInt residue;  // mod p^k
  unsigned k;
};

/// Q_p(x) for every prime in range and every parameter, sorted by (p, r, m).
/// Parameters with p | m are left out.
std::vector<QuotientRow> quotient_table(PrimeRange primes, const std::vector<RationalParameter>& params,
                                        unsigned k = 2);

struct HarmonicRow {
  unsigned long n;
  Composition s;
  ExactRational value;
};

/// H_n(s) for 0 <= n <= n_max and every s with 1 <= depth <= depth_max and
/// every part in 1..part_max, sorted by (n, s).
std::vector<HarmonicRow> harmonic_table(unsigned long n_max, unsigned part_max, unsigned depth_max = 2);

std::string format_quotient_table(const std::vector<QuotientRow>& rows, OutputFormat format);
std::string format_harmonic_table(const std::vector<HarmonicRow>& rows, OutputFormat format);

}  // namespace supercong
