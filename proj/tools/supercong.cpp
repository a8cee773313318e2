// Command-line front end: verify congruence campaigns, print exploration
// tables, list the available checks.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "supercong/campaign.hpp"

namespace sc = supercong;

namespace {

unsigned default_jobs() {
  if (const char* env = std::getenv("SUPERCONG_JOBS")) {
    try {
      const long j = std::stol(env);
      if (j > 0) return static_cast<unsigned>(j);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid SUPERCONG_JOBS='" << env << "'\n";
  }
  return 1;
}

int write_output(const std::string& text, const std::optional<std::string>& path) {
  if (!path) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << *path << "'\n";
    return sc::exit_status::kUsage;
  }
  out << text;
  return 0;
}

struct VerifyOptions {
  std::string checks = "all";
  std::string primes;
  long m_max = 10;
  std::string a_values;
  unsigned jobs = 1;
  std::string format = "json";
  std::string output;
  std::string config;
  bool exact = false;
  std::vector<std::string> modulus;
  long cross_check_limit = 50;
};

sc::CampaignConfig build_config(const VerifyOptions& o, const CLI::App& cmd) {
  sc::CampaignConfig config;
  config.checks = sc::parse_check_list("all");
  config.workers = default_jobs();
  if (!o.config.empty()) sc::apply_config_entries(config, sc::read_config_file(o.config));

  auto given = [&](const char* name) { return cmd.get_option(name)->count() > 0; };
  if (given("--checks")) config.checks = sc::parse_check_list(o.checks);
  if (given("--primes")) config.primes = sc::parse_prime_range(o.primes);
  if (given("--m-max")) config.m_max = o.m_max;
  if (given("--a-values")) config.a_values = sc::parse_int_list(o.a_values);
  if (given("--jobs")) config.workers = o.jobs;
  if (given("--format")) config.format = sc::parse_format(o.format);
  if (given("--output")) config.output_path = o.output;
  if (given("--exact")) config.exact_everywhere = o.exact;
  if (given("--cross-check-limit")) config.cross_check_limit = static_cast<sc::Prime>(o.cross_check_limit);
  for (const std::string& entry : o.modulus) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) throw sc::ConfigError("--modulus expects CHECK=K, got '" + entry + "'");
    sc::apply_config_entries(config, {{"modulus." + entry.substr(0, eq), entry.substr(eq + 1)}});
  }
  sc::validate(config);
  return config;
}

int run_verify(const sc::CampaignConfig& config) {
  const sc::CampaignResult result = sc::run_campaign(config);
  if (const int rc = write_output(sc::format_records(result.records, config.format), config.output_path)) return rc;
  std::cerr << result.records.size() << " records: " << result.failures << " theorem failures, " << result.findings
            << " conjecture findings, " << result.discrepancies << " path discrepancies, " << result.skipped
            << " skipped\n";
  if (result.findings) {
    std::cerr << "findings (conjecture counterexamples):\n";
    for (const sc::CheckRecord& r : result.records)
      if (!r.skipped && !r.pass && r.category == sc::CheckCategory::Conjecture)
        std::cerr << "  " << r.check << " p=" << r.p << " x=" << *r.r << "/" << *r.m << "\n";
  }
  return result.exit_status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of truncated hypergeometric supercongruences"};
  app.require_subcommand(1);

  VerifyOptions v;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify->add_option("--checks", v.checks, "Comma-separated check names, or 'all'");
  verify->add_option("--primes", v.primes, "Prime range LO..HI (default: 5..cap of each check)");
  verify->add_option("--m-max", v.m_max, "Largest denominator m of x = r/m");
  verify->add_option("--a-values", v.a_values, "Shift values a for the lemma checks, e.g. 1,2,3");
  verify->add_option("--jobs", v.jobs, "Worker threads (default: $SUPERCONG_JOBS or 1)");
  verify->add_option("--format", v.format, "json | csv | text");
  verify->add_option("--output", v.output, "Write the report to PATH instead of stdout");
  verify->add_option("--config", v.config, "INI-style key = value campaign file; flags override it");
  verify->add_flag("--exact", v.exact, "Use exact rational arithmetic for every prime");
  verify->add_option("--modulus", v.modulus, "Override a check's modulus exponent, CHECK=K (repeatable)");
  verify->add_option("--cross-check-limit", v.cross_check_limit,
                     "Evaluate both exact and modular paths for p up to this bound");

  std::string table_kind;
  std::string t_primes = "5..7";
  std::vector<std::string> t_x;
  long t_m_max = 0;
  unsigned t_k = 2;
  unsigned long t_n_max = 5;
  unsigned t_part_max = 2;
  unsigned t_depth_max = 2;
  std::string t_format = "text";
  std::string t_output;
  CLI::App* table = app.add_subcommand("table", "Tabulate Q_p(x) or multiple harmonic sums");
  table->add_option("kind", table_kind, "quotient | harmonic")->required()->check(CLI::IsMember({"quotient", "harmonic"}));
  table->add_option("--primes", t_primes, "Prime range LO..HI (quotient)");
  table->add_option("--x", t_x, "Parameters r/m (quotient; default 1/2 unless --m-max is given)");
  table->add_option("--m-max", t_m_max, "Use every reduced r/m with m <= N (quotient)");
  table->add_option("--k", t_k, "Residue modulus exponent (quotient)");
  table->add_option("--n-max", t_n_max, "Largest n (harmonic)");
  table->add_option("--part-max", t_part_max, "Largest exponent s_i (harmonic)");
  table->add_option("--depth-max", t_depth_max, "Largest depth (harmonic)");
  table->add_option("--format", t_format, "json | csv | text");
  table->add_option("--output", t_output, "Write to PATH instead of stdout");

  std::string l_format = "text";
  CLI::App* list = app.add_subcommand("list-checks", "List the available checks");
  list->add_option("--format", l_format, "text | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return sc::exit_status::kUsage;
  }

  try {
    if (*verify) return run_verify(build_config(v, *verify));

    if (*table) {
      const sc::OutputFormat format = sc::parse_format(t_format);
      const std::optional<std::string> out = t_output.empty() ? std::nullopt : std::optional(t_output);
      if (table_kind == "quotient") {
        std::vector<sc::RationalParameter> params;
        if (t_m_max > 0) params = sc::parameters_up_to(t_m_max);
        for (const std::string& x : t_x) {
          const sc::ExactRational q = sc::ExactRational::parse(x);
          params.push_back(sc::RationalParameter::make(q.numerator().get_si(), q.denominator().get_si()));
        }
        if (params.empty()) params.push_back(sc::RationalParameter::make(1, 2));
        if (t_k < 1) throw sc::ConfigError("--k must be positive");
        return write_output(sc::format_quotient_table(sc::quotient_table(sc::parse_prime_range(t_primes), params, t_k), format),
                            out);
      }
      return write_output(sc::format_harmonic_table(sc::harmonic_table(t_n_max, t_part_max, t_depth_max), format), out);
    }

    if (*list) {
      if (l_format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const sc::CheckDefinition& d : sc::check_registry())
          out.push_back({{"name", d.name},
                         {"category", sc::to_string(d.category)},
                         {"k", d.default_k},
                         {"exact_only", d.exact_only},
                         {"prime_cap", d.default_prime_cap()},
                         {"summary", d.summary}});
        std::cout << out.dump(2) << "\n";
      } else {
        for (const sc::CheckDefinition& d : sc::check_registry())
          std::cout << d.name << "\t" << sc::to_string(d.category) << "\tmod p^" << d.default_k
                    << (d.exact_only ? " (exact)" : "") << "\tp<=" << d.default_prime_cap() << "\t" << d.summary
                    << "\n";
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {  // ConfigError and bad parameters
    std::cerr << "error: " << e.what() << "\n";
    return sc::exit_status::kUsage;
  }
  return 0;
}
