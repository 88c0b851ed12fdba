// dumont: enumeration, counting, series expansion, statistics, and claim
// verification for pattern-restricted Dumont permutations.
//
// Exit codes: 0 success, 1 a must-pass verification check mismatched,
// 2 usage error (bad flag, bad pattern, unknown name, bound exceeded).

#include "dumont/enumerate.hpp"
#include "dumont/formulas.hpp"
#include "dumont/pattern.hpp"
#include "dumont/permutation.hpp"
#include "dumont/series.hpp"
#include "dumont/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace dumont;

struct FamilyFlags {
  std::string kind = "all";
  std::vector<std::string> avoid;
  std::vector<std::string> contain; // "pattern:count"
};

void add_family_flags(CLI::App* cmd, FamilyFlags& ff) {
  cmd->add_option("--kind", ff.kind,
                  "family: all | dumont-first | dumont-second | "
                  "dumont-first-132-avoiding")
      ->capture_default_str();
  cmd->add_option("--avoid", ff.avoid,
                  "pattern the permutations must avoid (repeatable)");
  cmd->add_option("--contain", ff.contain,
                  "pattern:r - contain the pattern exactly r times (repeatable)");
}

ContainConstraint parse_contain(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos || colon + 1 == text.size())
    throw std::invalid_argument("--contain needs the form pattern:count, got '" + text +
                                "'");
  const std::string count_text = text.substr(colon + 1);
  std::size_t used = 0;
  long long r = 0;
  try {
    r = std::stoll(count_text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != count_text.size() || r < 0)
    throw std::invalid_argument("--contain count must be a nonnegative integer, got '" +
                                count_text + "'");
  return {VincularPattern::parse(text.substr(0, colon)), r};
}

FamilySpec build_spec(const FamilyFlags& ff, int length) {
  const auto kind = family_kind_from_name(ff.kind);
  if (!kind) throw std::invalid_argument("unknown --kind '" + ff.kind + "'");
  FamilySpec spec;
  spec.length = length;
  spec.kind = *kind;
  for (const auto& a : ff.avoid) spec.avoid.push_back(VincularPattern::parse(a));
  for (const auto& c : ff.contain) spec.contain.push_back(parse_contain(c));
  spec.validate();
  return spec;
}

Statistic parse_statistic(const std::string& text) {
  const auto s = statistic_from_name(text);
  if (!s)
    throw std::invalid_argument("unknown statistic '" + text +
                                "' (expected rlm, rises, or descents)");
  return *s;
}

// Joint (length, statistic) table for arbitrary family flags; lengths with no
// member contribute no row, matching joint_distribution().
CountTable statistic_table(const FamilyFlags& ff, int n_max, Statistic stat,
                           int threads) {
  CountTable table(true);
  for (int n = 0; n <= n_max; ++n) {
    const FamilySpec spec = build_spec(ff, n);
    enumerate(spec, [&](const Permutation& p) { table.add(n, statistic(p, stat), 1); },
              threads);
  }
  return table;
}

int run_enumerate(const FamilyFlags& ff, int n, const std::string& format, int threads) {
  const FamilySpec spec = build_spec(ff, n);
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    enumerate(spec, [&](const Permutation& p) { arr.push_back(p.str()); }, threads);
    std::cout << arr.dump() << '\n';
  } else {
    std::string out;
    enumerate(spec, [&](const Permutation& p) { out += p.str() += '\n'; }, threads);
    std::cout << out;
  }
  return 0;
}

int run_count(const FamilyFlags& ff, int n_max, const std::optional<std::string>& by_stat,
              const std::string& format, int threads) {
  CountTable table;
  if (by_stat) {
    table = statistic_table(ff, n_max, parse_statistic(*by_stat), threads);
  } else {
    table = count_table(build_spec(ff, 0), n_max, threads);
  }
  if (format == "json")
    std::cout << table.to_json() << '\n';
  else
    std::cout << table.to_csv();
  return 0;
}

int run_series(const std::string& name, const std::optional<int>& k,
               const std::optional<int>& r, int terms, const std::string& format) {
  const TruncatedSeries s = formula({name, k, r}, terms);
  if (format == "json") {
    std::cout << to_json(s) << '\n';
  } else {
    std::string out;
    for (int d = 0; d <= s.order(); ++d) {
      if (!out.empty()) out += ' ';
      out += to_string(s.coeff(d));
    }
    std::cout << out << '\n';
  }
  return 0;
}

int run_verify(const std::string& theorem, int n_max, const std::string& format,
               int threads) {
  VerificationReport report;
  if (theorem == "all") {
    report = run_all(n_max, threads);
  } else {
    report.checks.push_back(run_check(theorem, n_max));
    const auto& c = report.checks.front();
    report.pass = c.status == CheckStatus::pass ? 1 : 0;
    report.mismatch = c.status == CheckStatus::mismatch ? 1 : 0;
    report.skipped = c.status == CheckStatus::skipped ? 1 : 0;
  }
  if (format == "json")
    std::cout << report.to_json() << '\n';
  else
    std::cout << report.to_text();
  return report.all_must_pass_ok() ? 0 : 1;
}

// DUMONT_MAX_N raises the enumeration bound and the permutation length limit
// at the user's risk. Unset or empty means defaults.
void apply_max_n_env() {
  const char* raw = std::getenv("DUMONT_MAX_N");
  if (raw == nullptr || *raw == '\0') return;
  const std::string text(raw);
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v <= 0)
    throw std::invalid_argument("DUMONT_MAX_N must be a positive integer, got '" + text +
                                "'");
  const int n = static_cast<int>(std::min<long long>(v, 1000));
  set_enumeration_bound_override(n);
  set_length_limit(std::max(20, n));
}

} // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"Exact enumeration and verification engine for pattern-restricted "
               "Dumont permutations"};
  app.require_subcommand(1);
  int exit_code = 0;

  FamilyFlags enum_ff;
  int enum_n = 0, enum_threads = 1;
  std::string enum_format = "text";
  auto* cmd_enum = app.add_subcommand("enumerate", "list one family in lexicographic order");
  cmd_enum->add_option("--n", enum_n, "permutation length")->required();
  add_family_flags(cmd_enum, enum_ff);
  cmd_enum->add_option("--format", enum_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd_enum->add_option("--threads", enum_threads, "worker count (output is identical)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_enum->callback(
      [&] { exit_code = run_enumerate(enum_ff, enum_n, enum_format, enum_threads); });

  FamilyFlags count_ff;
  int count_n_max = 0, count_threads = 1;
  std::optional<std::string> count_by_stat;
  std::string count_format = "csv";
  auto* cmd_count = app.add_subcommand("count", "count a family for each length 0..n-max");
  cmd_count->add_option("--n-max", count_n_max, "largest length")->required();
  add_family_flags(cmd_count, count_ff);
  cmd_count->add_option("--by-stat", count_by_stat,
                        "group by a statistic: rlm | rises | descents");
  cmd_count->add_option("--format", count_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd_count->add_option("--threads", count_threads, "worker count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_count->callback([&] {
    exit_code = run_count(count_ff, count_n_max, count_by_stat, count_format, count_threads);
  });

  std::string series_formula;
  std::optional<int> series_k, series_r;
  int series_terms = 20;
  std::string series_format = "text";
  auto* cmd_series = app.add_subcommand("series", "expand a catalog generating function");
  cmd_series->add_option("--formula", series_formula, "catalog name")->required();
  cmd_series->add_option("--k", series_k, "pattern-length parameter");
  cmd_series->add_option("--r", series_r, "occurrence-count parameter");
  cmd_series->add_option("--terms", series_terms, "truncation degree N (prints N+1 coefficients)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd_series->add_option("--format", series_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd_series->callback([&] {
    exit_code = run_series(series_formula, series_k, series_r, series_terms, series_format);
  });

  FamilyFlags stats_ff;
  int stats_n_max = 0, stats_threads = 1;
  std::string stats_stat, stats_format = "csv";
  auto* cmd_stats =
      app.add_subcommand("stats", "joint (length, statistic) distribution of a family");
  cmd_stats->add_option("--n-max", stats_n_max, "largest length")->required();
  add_family_flags(cmd_stats, stats_ff);
  cmd_stats->add_option("--stat", stats_stat, "rlm | rises | descents")->required();
  cmd_stats->add_option("--format", stats_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd_stats->add_option("--threads", stats_threads, "worker count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_stats->callback([&] {
    const CountTable table =
        statistic_table(stats_ff, stats_n_max, parse_statistic(stats_stat), stats_threads);
    if (stats_format == "json")
      std::cout << table.to_json() << '\n';
    else
      std::cout << table.to_csv();
    exit_code = 0;
  });

  std::string verify_theorem = "all", verify_format = "text";
  int verify_n_max = 12, verify_threads = 1;
  auto* cmd_verify = app.add_subcommand("verify", "run registered claim checks");
  cmd_verify->add_option("--theorem", verify_theorem, "check id, or 'all'")
      ->capture_default_str();
  cmd_verify->add_option("--n-max", verify_n_max, "verification depth")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd_verify->add_option("--format", verify_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd_verify->add_option("--threads", verify_threads, "worker count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_verify->callback([&] {
    exit_code = run_verify(verify_theorem, verify_n_max, verify_format, verify_threads);
  });

  try {
    apply_max_n_env();
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
