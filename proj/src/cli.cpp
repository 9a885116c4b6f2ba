#include "flatperm/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "flatperm/closed_forms.hpp"
#include "flatperm/errors.hpp"
#include "flatperm/recurrences.hpp"
#include "flatperm/series.hpp"
#include "flatperm/verify.hpp"

namespace flatperm::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "text";
  std::string out_path;
  // distribution
  std::string pattern;
  int n = 0;
  std::string method = "recurrence";
  // table / verify
  int n_max = 8;
  // verify
  std::string suite = "all";
  // series
  std::string which;
  int order = static_cast<int>(kDefaultSeriesOrder);
};

int brute_cap_from_env() {
  const char* raw = std::getenv("FLATPERM_MAX_N");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationCap;
  const std::string_view text(raw);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw UsageError("FLATPERM_MAX_N must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

Json coefficient_object(const QPoly& p) {
  Json obj = Json::object();
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) obj[std::to_string(i)] = p.coeffs()[i].get_str();
  return obj;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

// Fixed-point rendering, rounded half away from zero.
std::string decimal_string(const Rational& r, int digits) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = sgn(r) < 0;
  const Rational a = abs(r);
  BigInt scaled = (2 * a.get_num() * scale + a.get_den()) / (2 * a.get_den());
  const BigInt whole = scaled / scale;
  std::string frac = BigInt(scaled % scale).get_str();
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return (negative && scaled != 0 ? "-" : "") + whole.get_str() + "." + frac;
}

// --- distribution

std::string cmd_distribution(const Config& cfg, int brute_cap, int& exit_code) {
  const VincularPattern3 pat = VincularPattern3::parse(cfg.pattern);
  const std::optional<PatternId> id = parse_pattern_id(pat.to_string());
  const bool want_rec = cfg.method != "brute";
  const bool want_brute = cfg.method != "recurrence";
  if (want_rec && !id) {
    throw UsageError("no recurrence for " + pat.to_string() + "; use --method brute");
  }

  std::optional<QPoly> rec, brute;
  if (want_rec) rec = distribution_table(*id, cfg.n)[cfg.n];
  if (want_brute) brute = brute_distribution(cfg.n, pat, brute_cap);
  const bool both = rec && brute;
  const bool match = both && *rec == *brute;
  if (both && !match) exit_code = kVerificationFailed;
  const QPoly& primary = rec ? *rec : *brute;

  std::ostringstream os;
  if (cfg.format == "json") {
    Json j;
    j["pattern"] = pat.to_string();
    j["n"] = cfg.n;
    j["method"] = cfg.method;
    j["coefficients"] = coefficient_object(primary);
    if (both) {
      j["brute_coefficients"] = coefficient_object(*brute);
      j["match"] = match;
    }
    os << render_json(j);
  } else if (cfg.format == "csv") {
    os << (both ? "exponent,recurrence,brute\n" : "exponent,coefficient\n");
    const std::size_t len = std::max(primary.coeffs().size(), brute ? brute->coeffs().size() : 0);
    for (std::size_t i = 0; i < len; ++i) {
      os << i << ',' << primary.coeff(i).get_str();
      if (both) os << ',' << brute->coeff(i).get_str();
      os << '\n';
    }
  } else {
    os << "pattern " << pat.to_string() << ", n=" << cfg.n << '\n';
    if (rec) os << "recurrence: " << rec->to_string() << '\n';
    if (brute) os << "brute:      " << brute->to_string() << '\n';
    if (both) os << "match: " << (match ? "true" : "false") << '\n';
  }
  return os.str();
}

// --- table

std::string cmd_table(const Config& cfg) {
  if (cfg.n_max < 1) throw UsageError("--n-max must be >= 1");
  if (cfg.n_max > kRecurrenceCap) throw CapExceeded("table", cfg.n_max, kRecurrenceCap);
  std::vector<TablePattern> rows(kTablePatterns.begin(), kTablePatterns.end());
  if (!cfg.pattern.empty()) {
    const auto p = parse_table_pattern(cfg.pattern);
    if (!p) throw UsageError("table has no row for pattern " + cfg.pattern);
    rows = {*p};
  }

  std::ostringstream os;
  Json list = Json::array();
  if (cfg.format == "csv") os << "pattern,n,avoiders,average_num,average_den\n";
  if (cfg.format == "text") {
    os << std::left << std::setw(8) << "pattern" << std::setw(6) << "n" << std::setw(24) << "avoiders"
       << "average\n";
  }
  for (TablePattern p : rows) {
    for (int n = 1; n <= cfg.n_max; ++n) {
      const BigInt a = avoiders(p, n);
      const Rational avg = average_occurrences(p, n);
      if (cfg.format == "json") {
        Json row;
        row["pattern"] = std::string(name(p));
        row["n"] = n;
        row["avoiders"] = a.get_str();
        row["average"] = to_string(avg);
        row["average_num"] = avg.get_num().get_str();
        row["average_den"] = avg.get_den().get_str();
        row["average_decimal"] = decimal_string(avg, 6);
        list.push_back(std::move(row));
      } else if (cfg.format == "csv") {
        os << name(p) << ',' << n << ',' << a.get_str() << ',' << avg.get_num().get_str() << ','
           << avg.get_den().get_str() << '\n';
      } else {
        os << std::left << std::setw(8) << name(p) << std::setw(6) << n << std::setw(24) << a.get_str()
           << to_string(avg) << " (" << decimal_string(avg, 6) << ")\n";
      }
    }
  }
  if (cfg.format == "json") {
    Json j;
    j["n_max"] = cfg.n_max;
    j["rows"] = std::move(list);
    os << render_json(j);
  }
  return os.str();
}

// --- verify

std::string status(const CheckResult& c) {
  if (c.passed) return "PASS";
  return c.blocking ? "FAIL" : "NOTE";
}

std::string cmd_verify(const Config& cfg, int brute_cap, int& exit_code) {
  const auto suite = parse_suite(cfg.suite);
  if (!suite) throw UsageError("unknown suite '" + cfg.suite + "'");
  if (cfg.format == "csv") throw UsageError("verify renders as json or text");
  if (cfg.order < 4) throw UsageError("verify needs --order >= 4");
  if (cfg.order > static_cast<int>(kMaxSeriesOrder)) {
    throw CapExceeded("series order", cfg.order, static_cast<int>(kMaxSeriesOrder), "order");
  }

  VerifyOptions opt;
  opt.n_max = cfg.n_max;
  opt.brute_cap = brute_cap;
  opt.order = static_cast<std::size_t>(cfg.order);
  const VerifyReport report = run_suite(*suite, opt);
  if (!report.ok()) exit_code = kVerificationFailed;

  std::ostringstream os;
  if (cfg.format == "json") {
    Json j;
    j["suite"] = cfg.suite;
    j["n_max"] = cfg.n_max;
    j["ok"] = report.ok();
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      Json row;
      row["suite"] = c.suite;
      row["check"] = c.name;
      row["status"] = status(c);
      row["detail"] = c.detail;
      checks.push_back(std::move(row));
    }
    j["checks"] = std::move(checks);
    os << render_json(j);
  } else {
    std::size_t failed = 0, notes = 0;
    for (const auto& c : report.checks) {
      os << status(c) << "  [" << c.suite << "] " << c.name;
      if (!c.detail.empty()) os << "  (" << c.detail << ")";
      os << '\n';
      if (!c.passed) ++(c.blocking ? failed : notes);
    }
    os << report.checks.size() << " checks, " << failed << " failed, " << notes << " notes\n";
  }
  return os.str();
}

// --- series

std::string cmd_series(const Config& cfg) {
  if (cfg.order < 1) throw UsageError("--order must be >= 1");
  if (cfg.order > static_cast<int>(kMaxSeriesOrder)) {
    throw CapExceeded("series order", cfg.order, static_cast<int>(kMaxSeriesOrder), "order");
  }
  const auto order = static_cast<std::size_t>(cfg.order);
  PowerSeries s(order);
  bool egf = false;
  if (cfg.which.starts_with("g31_2_r") && cfg.which.size() == 8 && cfg.which[7] >= '0' && cfg.which[7] <= '3') {
    s = expand_G_r_31_2(cfg.which[7] - '0', std::max<std::size_t>(order, 4)).truncated(order);
  } else if (cfg.which == "egf_21_3") {
    s = expand_egf_21_3_avoid(order);
    egf = true;
  } else if (cfg.which == "egf_12_3") {
    s = expand_egf_12_3_avoid(order);
    egf = true;
  } else {
    throw UsageError("unknown series '" + cfg.which + "'");
  }

  std::ostringstream os;
  if (cfg.format == "json") {
    Json j;
    j["which"] = cfg.which;
    j["order"] = cfg.order;
    Json coeffs = Json::array();
    Json scaled = Json::array();
    for (std::size_t i = 0; i < order; ++i) {
      coeffs.push_back(to_string(s[i]));
      if (egf) scaled.push_back(egf_coefficient(s, i).get_str());
    }
    j["coefficients"] = std::move(coeffs);
    if (egf) j["egf_scaled"] = std::move(scaled);
    os << render_json(j);
  } else if (cfg.format == "csv") {
    os << (egf ? "k,coefficient,scaled\n" : "k,coefficient\n");
    for (std::size_t i = 0; i < order; ++i) {
      os << i << ',' << to_string(s[i]);
      if (egf) os << ',' << egf_coefficient(s, i).get_str();
      os << '\n';
    }
  } else {
    for (std::size_t i = 0; i < order; ++i) {
      os << "x^" << i << ": " << to_string(s[i]);
      if (egf) os << "  (times " << i << "!: " << egf_coefficient(s, i).get_str() << ")";
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  Config cfg;
  const CLI::Validator at_least_one(
      [](std::string& v) -> std::string {
        const bool digits = !v.empty() && v.size() <= 9 && v.find_first_not_of("0123456789") == std::string::npos;
        if (digits && std::stol(v) >= 1) return {};
        return "must be an integer >= 1";
      },
      "INT>=1");
  CLI::App app{"Distributions of vincular patterns on flattened permutations", "flatperm"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", cfg.out_path, "write the output to PATH instead of stdout");

  auto* dist = app.add_subcommand("distribution", "g_n(q) for one pattern and n");
  dist->fallthrough();
  dist->add_option("--pattern", cfg.pattern, "e.g. 31-2; brute force accepts any length-3 pattern")->required();
  dist->add_option("--n", cfg.n, "permutation length")->required()->check(at_least_one);
  dist->add_option("--method", cfg.method, "brute, recurrence or both")
      ->check(CLI::IsMember({"brute", "recurrence", "both"}));

  auto* table = app.add_subcommand("table", "avoiders and average occurrences for n = 1..n_max");
  table->fallthrough();
  table->add_option("--n-max", cfg.n_max, "largest n (default 8)");
  table->add_option("--pattern", cfg.pattern, "restrict to one row pattern");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->fallthrough();
  verify->add_option("--suite", cfg.suite, "oracle, refined, closed-forms, series, bijections, identities or all");
  verify->add_option("--n-max", cfg.n_max, "largest n compared against brute force (default 8)");
  verify->add_option("--order", cfg.order, "series truncation order (default 24)");

  auto* series = app.add_subcommand("series", "power series coefficients");
  series->fallthrough();
  series->add_option("--which", cfg.which, "g31_2_r0..g31_2_r3, egf_21_3 or egf_12_3")->required();
  series->add_option("--order", cfg.order, "number of coefficients (default 24)");

  Outcome result;
  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.exit_code = code == 0 ? kOk : kUsage;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  int exit_code = kOk;
  std::string rendered;
  try {
    const int brute_cap = brute_cap_from_env();
    if (dist->parsed()) {
      rendered = cmd_distribution(cfg, brute_cap, exit_code);
    } else if (table->parsed()) {
      rendered = cmd_table(cfg);
    } else if (verify->parsed()) {
      rendered = cmd_verify(cfg, brute_cap, exit_code);
    } else {
      rendered = cmd_series(cfg);
    }
  } catch (const IdentityViolation& e) {
    result.exit_code = kVerificationFailed;
    result.err = std::string("identity violated: ") + e.what() + "\n";
    return result;
  } catch (const std::exception& e) {
    // cap violations, bad pattern text, unknown names
    result.exit_code = kUsage;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  }

  if (!cfg.out_path.empty()) {
    std::ofstream f(cfg.out_path, std::ios::binary);
    f << rendered;
    if (!f) {
      result.exit_code = kUsage;
      result.err = "error: cannot write " + cfg.out_path + "\n";
      return result;
    }
  } else {
    result.out = std::move(rendered);
  }
  result.exit_code = exit_code;
  return result;
}

}  // namespace flatperm::cli
