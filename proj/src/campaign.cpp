#include "supercong/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "supercong/special_values.hpp"

namespace supercong {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long parse_long(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid " + what + ": '" + text + "'");
  }
}

bool parse_bool(const std::string& text) {
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  throw ConfigError("invalid boolean: '" + text + "'");
}

}  // namespace

std::vector<std::string> parse_check_list(const std::string& text) {
  std::vector<std::string> out;
  for (const std::string& name : split(text, ',')) {
    if (name == "all") {
      for (const CheckDefinition& d : check_registry()) out.push_back(d.name);
      continue;
    }
    if (!find_check(name)) throw ConfigError("unknown check '" + name + "'");
    out.push_back(name);
  }
  if (out.empty()) throw ConfigError("no checks selected");
  // Keep first occurrence only.
  std::vector<std::string> unique;
  for (const std::string& n : out)
    if (std::find(unique.begin(), unique.end(), n) == unique.end()) unique.push_back(n);
  return unique;
}

PrimeRange parse_prime_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ConfigError("prime range must look like LO..HI, got '" + text + "'");
  const long lo = parse_long(trim(text.substr(0, dots)), "prime range");
  const long hi = parse_long(trim(text.substr(dots + 2)), "prime range");
  if (lo < 0 || hi < 0) throw ConfigError("prime range bounds must be nonnegative");
  return {static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi)};
}

std::vector<long> parse_int_list(const std::string& text) {
  std::vector<long> out;
  for (const std::string& item : split(text, ',')) out.push_back(parse_long(item, "integer list"));
  return out;
}

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "text") return OutputFormat::Text;
  throw ConfigError("unknown format '" + text + "' (expected json, csv or text)");
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';' || line[0] == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

void apply_config_entries(CampaignConfig& config, const std::map<std::string, std::string>& entries) {
  for (const auto& [raw_key, value] : entries) {
    std::string key = raw_key;
    std::replace(key.begin(), key.end(), '-', '_');
    if (key == "checks") {
      config.checks = parse_check_list(value);
    } else if (key == "primes") {
      config.primes = parse_prime_range(value);
    } else if (key == "m_max") {
      config.m_max = parse_long(value, "m_max");
    } else if (key == "a_values") {
      config.a_values = parse_int_list(value);
    } else if (key == "jobs") {
      const long j = parse_long(value, "jobs");
      if (j < 1) throw ConfigError("jobs must be positive");
      config.workers = static_cast<unsigned>(j);
    } else if (key == "format") {
      config.format = parse_format(value);
    } else if (key == "output") {
      config.output_path = value;
    } else if (key == "exact") {
      config.exact_everywhere = parse_bool(value);
    } else if (key == "cross_check_limit") {
      config.cross_check_limit = static_cast<Prime>(parse_long(value, "cross_check_limit"));
    } else if (key.rfind("modulus.", 0) == 0) {
      const std::string check = key.substr(8);
      if (!find_check(check)) throw ConfigError("modulus override for unknown check '" + check + "'");
      const long k = parse_long(value, "modulus exponent");
      if (k < 1) throw ConfigError("modulus exponent must be positive");
      config.modulus_overrides[check] = static_cast<unsigned>(k);
    } else {
      throw ConfigError("unknown configuration key '" + raw_key + "'");
    }
  }
}

void validate(const CampaignConfig& config) {
  if (config.checks.empty()) throw ConfigError("no checks selected");
  for (const std::string& c : config.checks)
    if (!find_check(c)) throw ConfigError("unknown check '" + c + "'");
  if (config.primes) {
    if (config.primes->lo < 5) throw ConfigError("prime range must start at 5 or above");
    if (config.primes->hi < config.primes->lo) throw ConfigError("prime range is empty (HI < LO)");
  }
  if (config.m_max < 2) throw ConfigError("m-max must be at least 2");
  for (long a : config.a_values)
    if (a < 1) throw ConfigError("a-values must be positive");
  if (config.workers < 1) throw ConfigError("jobs must be positive");
}

std::vector<CheckTask> campaign_tasks(const CampaignConfig& config) {
  std::vector<CheckTask> tasks;
  std::optional<std::vector<Prime>> shared_primes;
  if (config.primes) shared_primes = primes_in_range(*config.primes);
  for (const std::string& name : config.checks) {
    const CheckDefinition& def = *find_check(name);
    const std::vector<Prime> primes =
        shared_primes ? *shared_primes : primes_in_range({5, def.default_prime_cap()});
    std::optional<unsigned> k;
    if (auto it = config.modulus_overrides.find(name); it != config.modulus_overrides.end()) k = it->second;
    auto more = expand_tasks(def, primes, config.m_max, config.a_values, k);
    tasks.insert(tasks.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }
  return tasks;
}

namespace {

CheckRecord evaluate(const CheckTask& task, const CampaignConfig& config) {
  const bool small = task.p <= config.cross_check_limit;
  const CheckDefinition& def = *find_check(task.check);
  if (def.exact_only) return run_check(task, EvalPath::Exact);
  if (!small) return run_check(task, config.exact_everywhere ? EvalPath::Exact : EvalPath::Modular);
  CheckRecord exact = run_check(task, EvalPath::Exact);
  if (exact.skipped) return exact;
  const CheckRecord modular = run_check(task, EvalPath::Modular);
  exact.cross_checked = true;
  if (!same_outcome(exact, modular)) {
    exact.discrepancy = true;
    exact.pass = false;
  }
  return exact;
}

}  // namespace

int exit_status_for(const std::vector<CheckRecord>& records) {
  bool theorem_failure = false;
  bool finding = false;
  for (const CheckRecord& r : records) {
    if (r.skipped) continue;
    if (r.discrepancy) theorem_failure = true;
    if (r.pass) continue;
    (r.category == CheckCategory::Conjecture ? finding : theorem_failure) = true;
  }
  if (theorem_failure) return exit_status::kTheoremFailure;
  if (finding) return exit_status::kConjectureCounterexample;
  return exit_status::kAllPass;
}

CampaignResult run_campaign(const CampaignConfig& config) {
  validate(config);
  const std::vector<CheckTask> tasks = campaign_tasks(config);

  // Fill the Bernoulli cache before any worker starts.
  Prime max_bernoulli_prime = 0;
  for (const CheckTask& t : tasks)
    if (find_check(t.check)->needs_bernoulli) max_bernoulli_prime = std::max(max_bernoulli_prime, t.p);
  if (max_bernoulli_prime >= 5) BernoulliCache::global().ensure(static_cast<unsigned>(max_bernoulli_prime - 3));

  std::vector<CheckRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) records[i] = evaluate(tasks[i], config);
  };
  {
    std::vector<std::jthread> pool;
    const unsigned n = std::max(1u, std::min<unsigned>(config.workers, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1))));
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
  }
  std::sort(records.begin(), records.end(), record_less);

  CampaignResult result;
  for (const CheckRecord& r : records) {
    if (r.skipped) {
      ++result.skipped;
      continue;
    }
    if (r.discrepancy) ++result.discrepancies;
    if (!r.pass) ++(r.category == CheckCategory::Conjecture ? result.findings : result.failures);
  }
  result.exit_status = exit_status_for(records);
  result.records = std::move(records);
  return result;
}

// --- serialization -----------------------------------------------------------

namespace {

nlohmann::json optional_number(const std::optional<long>& v) { return v ? nlohmann::json(*v) : nlohmann::json(); }

nlohmann::json optional_residue(const std::optional<BigInt>& v) { return v ? nlohmann::json(v->get_str()) : nlohmann::json(); }

std::string status_of(const CheckRecord& r) {
  if (r.skipped) return "skipped";
  if (r.discrepancy) return "discrepancy";
  return "checked";
}

std::string path_of(const CheckRecord& r) {
  if (r.cross_checked) return "exact+modular";
  return to_string(r.path);
}

std::string text_or_dash(const std::optional<long>& v) { return v ? std::to_string(*v) : "-"; }

std::string residue_or_dash(const std::optional<BigInt>& v) { return v ? v->get_str() : "-"; }

std::string modulus_text(const CheckRecord& r) { return r.k == 0 ? "exact" : r.modulus().get_str(); }

}  // namespace

std::string records_to_json(const std::vector<CheckRecord>& records) {
  nlohmann::json out = nlohmann::json::array();
  for (const CheckRecord& r : records) {
    nlohmann::json j;
    j["a"] = optional_number(r.a);
    j["category"] = to_string(r.category);
    j["check"] = r.check;
    j["diff_valuation"] = r.skipped ? nlohmann::json() : nlohmann::json(r.diff_valuation);
    j["k"] = r.k;
    j["lhs_residue"] = optional_residue(r.lhs_residue);
    j["m"] = optional_number(r.m);
    j["modulus"] = r.modulus().get_str();
    j["p"] = r.p;
    j["pass"] = r.pass;
    j["path"] = path_of(r);
    j["r"] = optional_number(r.r);
    j["reason"] = r.skipped ? nlohmann::json(r.skip_reason) : nlohmann::json();
    j["rhs_residue"] = optional_residue(r.rhs_residue);
    j["status"] = status_of(r);
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::string records_to_csv(const std::vector<CheckRecord>& records) {
  std::ostringstream os;
  os << "check,p,r,m,a,k,lhs,rhs,modulus,pass\n";
  auto opt = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string(); };
  auto res = [](const std::optional<BigInt>& v) { return v ? v->get_str() : std::string(); };
  for (const CheckRecord& r : records) {
    os << r.check << ',' << r.p << ',' << opt(r.r) << ',' << opt(r.m) << ',' << opt(r.a) << ',' << r.k << ','
       << res(r.lhs_residue) << ',' << res(r.rhs_residue) << ',' << r.modulus().get_str() << ','
       << (r.skipped ? "skipped" : (r.pass ? "true" : "false")) << '\n';
  }
  return os.str();
}

std::string records_to_text(const std::vector<CheckRecord>& records) {
  std::ostringstream os;
  std::size_t failures = 0, findings = 0, skipped = 0;
  for (const CheckRecord& r : records) {
    os << std::left << std::setw(26) << r.check << " p=" << std::setw(5) << r.p;
    if (r.r) os << " x=" << *r.r << "/" << *r.m;
    else if (r.m) os << " m=" << *r.m;
    if (r.a) os << " a=" << *r.a;
    if (r.skipped) {
      os << "  SKIPPED (" << r.skip_reason << ")\n";
      ++skipped;
      continue;
    }
    os << "  lhs=" << residue_or_dash(r.lhs_residue) << " rhs=" << residue_or_dash(r.rhs_residue)
       << " mod " << modulus_text(r) << " v=" << r.diff_valuation << "  " << (r.pass ? "PASS" : "FAIL");
    if (r.discrepancy) os << " (exact/modular DISCREPANCY)";
    os << '\n';
    if (!r.pass) ++(r.category == CheckCategory::Conjecture ? findings : failures);
  }
  os << "\n" << records.size() << " records, " << failures << " theorem failures, " << findings
     << " conjecture findings, " << skipped << " skipped\n";
  if (findings) {
    os << "findings:\n";
    for (const CheckRecord& r : records)
      if (!r.skipped && !r.pass && r.category == CheckCategory::Conjecture)
        os << "  " << r.check << " p=" << r.p << " x=" << text_or_dash(r.r) << "/" << text_or_dash(r.m) << '\n';
  }
  return os.str();
}

std::string format_records(const std::vector<CheckRecord>& records, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return records_to_json(records);
    case OutputFormat::Csv: return records_to_csv(records);
    case OutputFormat::Text: return records_to_text(records);
  }
  return {};
}

// --- tables ------------------------------------------------------------------

std::vector<QuotientRow> quotient_table(PrimeRange primes, const std::vector<RationalParameter>& params, unsigned k) {
  std::vector<QuotientRow> rows;
  for (const Prime p : primes_in_range(primes)) {
    if (p <= 3) continue;
    for (const RationalParameter& x : params) {
      if (!x.compatible_with(p)) continue;
      ExactRational value = pochhammer_quotient_exact(x, p);
      BigInt residue = reduce_mod(value, p, k).value();
      rows.push_back({p, x.r(), x.m(), std::move(value), std::move(residue), k});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const QuotientRow& a, const QuotientRow& b) {
    return std::tie(a.p, a.r, a.m) < std::tie(b.p, b.r, b.m);
  });
  return rows;
}

std::vector<HarmonicRow> harmonic_table(unsigned long n_max, unsigned part_max, unsigned depth_max) {
  std::vector<Composition> all;
  std::vector<unsigned> parts;
  // Odometer over {1..part_max}^d for each depth d.
  for (unsigned d = 1; d <= depth_max && part_max > 0; ++d) {
    parts.assign(d, 1);
    for (;;) {
      all.emplace_back(parts);
      std::size_t i = d;
      while (i > 0 && parts[i - 1] == part_max) parts[--i] = 1;
      if (i == 0) break;
      ++parts[i - 1];
    }
  }
  std::sort(all.begin(), all.end());
  std::vector<HarmonicRow> rows;
  if (all.empty()) return rows;
  MhsTable table(n_max);
  for (unsigned long n = 0; n <= n_max; ++n)
    for (const Composition& s : all) rows.push_back({n, s, table.value(n, s)});
  return rows;
}

std::string format_quotient_table(const std::vector<QuotientRow>& rows, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      nlohmann::json out = nlohmann::json::array();
      for (const QuotientRow& r : rows)
        out.push_back({{"p", r.p},
                       {"r", r.r},
                       {"m", r.m},
                       {"value", r.value.to_string()},
                       {"residue", r.residue.get_str()},
                       {"modulus", prime_power(r.p, r.k).get_str()}});
      return out.dump(2) + "\n";
    }
    case OutputFormat::Csv:
      os << "p,r,m,value,residue,modulus\n";
      for (const QuotientRow& r : rows)
        os << r.p << ',' << r.r << ',' << r.m << ',' << r.value << ',' << r.residue.get_str() << ','
           << prime_power(r.p, r.k).get_str() << '\n';
      return os.str();
    case OutputFormat::Text:
      for (const QuotientRow& r : rows)
        os << "Q_" << r.p << "(" << r.r << "/" << r.m << ") = " << r.value << "  == " << r.residue.get_str()
           << " (mod " << prime_power(r.p, r.k).get_str() << ")\n";
      return os.str();
  }
  return {};
}

std::string format_harmonic_table(const std::vector<HarmonicRow>& rows, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      nlohmann::json out = nlohmann::json::array();
      for (const HarmonicRow& r : rows)
        out.push_back({{"n", r.n},
                       {"s", r.s.to_string()},
                       {"depth", r.s.depth()},
                       {"weight", r.s.weight()},
                       {"value", r.value.to_string()}});
      return out.dump(2) + "\n";
    }
    case OutputFormat::Csv:
      os << "n,s,depth,weight,value\n";
      for (const HarmonicRow& r : rows)
        os << r.n << ",\"" << r.s.to_string() << "\"," << r.s.depth() << ',' << r.s.weight() << ',' << r.value << '\n';
      return os.str();
    case OutputFormat::Text:
      for (const HarmonicRow& r : rows) os << "H_" << r.n << r.s.to_string() << " = " << r.value << '\n';
      return os.str();
  }
  return {};
}

}  // namespace supercong
