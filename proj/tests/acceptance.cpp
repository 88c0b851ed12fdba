// Acceptance gate: twelve end-to-end criteria, each printed as a single
// PASS/FAIL line. Exits nonzero if any criterion fails. All comparisons are
// exact integer equality; the brute-force reference in naive.hpp acts as the
// independent oracle wherever a full scan is feasible.

#include "dumont/enumerate.hpp"
#include "dumont/formulas.hpp"
#include "dumont/pattern.hpp"
#include "dumont/permutation.hpp"
#include "dumont/series.hpp"
#include "dumont/verify.hpp"

#include "naive.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

using namespace dumont;

namespace {

Count catalan(int m) { return binomial(2 * m, m) / Count(m + 1); }

Count fib(int i) { // f_1 = f_2 = 1, f_0 = 0
  Count a = 0, b = 1;
  for (int j = 0; j < i; ++j) {
    const Count next = a + b;
    a = b;
    b = next;
  }
  return a;
}

FamilySpec make_spec(FamilyKind kind, const std::vector<std::string>& avoid,
                     const std::vector<std::pair<std::string, long long>>& contain = {}) {
  FamilySpec spec;
  spec.kind = kind;
  for (const auto& a : avoid) spec.avoid.push_back(VincularPattern::parse(a));
  for (const auto& [p, r] : contain) spec.contain.push_back({VincularPattern::parse(p), r});
  return spec;
}

Count count_at(FamilySpec spec, int n) {
  spec.length = n;
  return count_family(spec);
}

std::string mismatch_str(int n, const Count& oracle, const Count& formula) {
  return "n=" + std::to_string(n) + ": oracle " + to_string(oracle) + " vs formula " +
         to_string(formula);
}

// Oracle counts for n = n_lo..n_hi against the coefficients of a series.
std::string counts_match_series(const FamilySpec& tmpl, const TruncatedSeries& s, int n_lo,
                                int n_hi) {
  for (int n = n_lo; n <= n_hi; ++n) {
    const Count got = count_at(tmpl, n);
    const Count want = s.integer_coeff(n);
    if (got != want) return mismatch_str(n, got, want);
  }
  return "";
}

std::string first_series_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
  for (int d = 0; d <= std::min(a.order(), b.order()); ++d)
    if (a.coeff(d) != b.coeff(d))
      return "degree " + std::to_string(d) + ": " + to_string(a.coeff(d)) + " vs " +
             to_string(b.coeff(d));
  return "";
}

std::string classical_increasing(int k) { // 1-2-...-k
  std::string out;
  for (int j = 1; j <= k; ++j) {
    if (!out.empty()) out += '-';
    out += static_cast<char>('0' + j);
  }
  return out;
}

std::string classical_213k(int k) { // 2-1-3-4-...-k
  std::string out = "2-1";
  for (int j = 3; j <= k; ++j) {
    out += '-';
    out += static_cast<char>('0' + j);
  }
  return out;
}

std::string vincular_21_3k(int k) { // 21-3-...-k
  std::string out = "21";
  for (int j = 3; j <= k; ++j) {
    out += '-';
    out += static_cast<char>('0' + j);
  }
  return out;
}

std::string vincular_12_3k(int k) { // 12-3-...-k
  std::string out = "12";
  for (int j = 3; j <= k; ++j) {
    out += '-';
    out += static_cast<char>('0' + j);
  }
  return out;
}

int g_failures = 0;

void criterion(int index, const std::string& label,
               const std::function<std::string()>& run) {
  std::string detail;
  try {
    detail = run();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  if (detail.empty()) {
    std::printf("PASS: criterion %2d - %s\n", index, label.c_str());
  } else {
    std::printf("FAIL: criterion %2d - %s (%s)\n", index, label.c_str(), detail.c_str());
    ++g_failures;
  }
  std::fflush(stdout);
}

} // namespace

int main() {
  criterion(1, "Genocchi baseline via full scans through S_10", [] {
    const std::vector<long long> expected{1, 3, 17, 155, 2073}; // n = 2,4,6,8,10
    for (int i = 0; i < 5; ++i) {
      const int n = 2 * (i + 1);
      long long scanned = 0;
      std::vector<int> p(static_cast<std::size_t>(n));
      std::iota(p.begin(), p.end(), 1);
      do {
        if (naive::is_dumont_first(p)) ++scanned;
      } while (std::next_permutation(p.begin(), p.end()));
      if (scanned != expected[static_cast<std::size_t>(i)])
        return "scan n=" + std::to_string(n) + " gave " + std::to_string(scanned);
      const Count engine = count_at(make_spec(FamilyKind::dumont_first, {}), n);
      if (engine != Count(scanned))
        return mismatch_str(n, Count(scanned), engine);
    }
    return std::string();
  });

  criterion(2, "132-avoiding counts are Catalan C_(n/2) through n=14", [] {
    const auto spec = make_spec(FamilyKind::dumont_first, {"1-3-2"});
    for (int n = 0; n <= 14; ++n) {
      const Count got = count_at(spec, n);
      if (got != catalan(n / 2)) return mismatch_str(n, got, catalan(n / 2));
    }
    if (count_at(spec, 14) != Count(429)) return std::string("C_7 != 429");
    return std::string();
  });

  criterion(3, "avoid {1-3-2, 1-2-...-k}: Fibonacci-family series, k=3,4,5", [] {
    for (int k = 3; k <= 5; ++k) {
      const auto spec = make_spec(FamilyKind::dumont_first, {"1-3-2", classical_increasing(k)});
      const auto s = formula({"d-incr", k, {}}, 12);
      if (auto d = counts_match_series(spec, s, 0, 12); !d.empty())
        return "k=" + std::to_string(k) + " " + d;
    }
    const auto k3 = make_spec(FamilyKind::dumont_first, {"1-3-2", "1-2-3"});
    for (int n = 4; n <= 12; ++n)
      if (count_at(k3, n) != Count(1 + (n % 2 == 0 ? 1 : -1)))
        return "k=3 closed form fails at n=" + std::to_string(n);
    const auto k4 = make_spec(FamilyKind::dumont_first, {"1-3-2", "1-2-3-4"});
    for (int n = 2; n <= 12; n += 2) // the closed form starts at n = 2
      if (count_at(k4, n) != fib(n / 2 + 2) + fib(n / 2) - Count(2))
        return "k=4 closed form fails at n=" + std::to_string(n);
    if (count_at(k4, 12) != Count(27)) return std::string("k=4 value at n=12 is not 27");
    return std::string();
  });

  criterion(4, "three restrictions share the G-family series, k=3,4", [] {
    for (int k = 3; k <= 4; ++k) {
      const auto g = formula({"d-213k", k, {}}, 10);
      const std::vector<FamilySpec> specs{
          make_spec(FamilyKind::dumont_first, {"1-3-2", classical_213k(k)}),
          make_spec(FamilyKind::dumont_first, {"1-3-2", vincular_21_3k(k)}),
          make_spec(FamilyKind::dumont_first,
                    {"1-3-2", classical_increasing(k), classical_213k(k)}),
      };
      for (std::size_t i = 0; i < specs.size(); ++i)
        if (auto d = counts_match_series(specs[i], g, 0, 10); !d.empty())
          return "k=" + std::to_string(k) + " variant " + std::to_string(i) + " " + d;
    }
    return std::string();
  });

  criterion(5, "avoid {1-3-2, 12-3-...-k} matches the Fibonacci-family series, k=3,4", [] {
    for (int k = 3; k <= 4; ++k) {
      const auto spec = make_spec(FamilyKind::dumont_first, {"1-3-2", vincular_12_3k(k)});
      const auto s = formula({"d-incr", k, {}}, 10);
      if (auto d = counts_match_series(spec, s, 0, 10); !d.empty())
        return "k=" + std::to_string(k) + " " + d;
    }
    return std::string();
  });

  criterion(6, "avoid {1-3-2, 2-3-4-5-1} interleaves the Pell numbers through n=12", [] {
    const std::vector<long long> pell{1, 1, 1, 1, 2, 2, 5, 5, 12, 12, 29, 29, 70};
    const auto spec = make_spec(FamilyKind::dumont_first, {"1-3-2", "2-3-4-5-1"});
    const auto s = formula({"d-23k1", 5, {}}, 12);
    for (int n = 0; n <= 12; ++n) {
      const Count got = count_at(spec, n);
      if (got != Count(pell[static_cast<std::size_t>(n)]))
        return mismatch_str(n, got, Count(pell[static_cast<std::size_t>(n)]));
      if (s.integer_coeff(n) != got) return "series diverges at n=" + std::to_string(n);
    }
    return std::string();
  });

  criterion(7, "statistic distributions match their generating-function slices", [] {
    const std::vector<VincularPattern> avoid{VincularPattern::parse("1-3-2")};
    for (Statistic stat : {Statistic::rlm, Statistic::rises, Statistic::descents}) {
      const CountTable joint = joint_distribution(12, FamilyKind::dumont_first, avoid, stat);
      for (int k = 0; k <= 12; ++k) {
        const TruncatedSeries slice = statistic_gf(stat, k, 12);
        for (int n = 0; n <= 12; ++n)
          if (joint.get(n, k) != slice.integer_coeff(n))
            return std::string(name(stat)) + " slice k=" + std::to_string(k) + " " +
                   mismatch_str(n, joint.get(n, k), slice.integer_coeff(n));
      }
    }
    // The prose variant of the descent corollary is off by a factor of x;
    // the verifier must keep that on record rather than silently correct it.
    const CheckResult shifted = run_check("descents-slices-shifted", 12);
    if (shifted.tier != CheckTier::informational || shifted.status != CheckStatus::mismatch ||
        !shifted.mismatch.has_value())
      return std::string("the documented off-by-x discrepancy is not recorded");
    return std::string();
  });

  criterion(8, "exactly-one-occurrence counts match the once-contained series", [] {
    struct Case {
      std::string pattern;
      std::string formula_name;
      int k;
    };
    const std::vector<Case> cases{{"1-2-3", "contain-once-incr", 3},
                                  {"1-2-3-4", "contain-once-incr", 4},
                                  {"12-3", "contain-once-gen-12-3k", 3},
                                  {"21-3", "contain-once-gen-21-3k", 3}};
    for (const auto& c : cases) {
      const auto spec = make_spec(FamilyKind::dumont_first, {"1-3-2"}, {{c.pattern, 1}});
      const auto s = formula({c.formula_name, c.k, {}}, 10);
      if (auto d = counts_match_series(spec, s, 0, 10); !d.empty())
        return c.pattern + " " + d;
    }
    // First nonzero value of the 1-2-3 case sits at n = 5.
    const auto once123 = formula({"contain-once-incr", 3, {}}, 10);
    for (int n = 0; n <= 4; ++n)
      if (once123.integer_coeff(n) != 0) return std::string("1-2-3 series nonzero below 5");
    if (once123.integer_coeff(5) != 1) return std::string("1-2-3 series wrong at n=5");
    // First witness of the 21-3 case is 213 at n = 3.
    auto witness_spec = make_spec(FamilyKind::dumont_first, {"1-3-2"}, {{"21-3", 1}});
    witness_spec.length = 3;
    const auto members = enumerate_all(witness_spec);
    if (members.size() != 1 || members.front().str() != "213")
      return std::string("21-3 witness at n=3 is not exactly {213}");
    // The explicit low-order expansions run as informational checks; any
    // disagreement must surface as a recorded mismatch, never as silence.
    for (const std::string stem : {"explicit-123-r", "explicit-12-3-r", "explicit-21-3-r"})
      for (int r = 2; r <= 4; ++r) {
        const CheckResult res = run_check(stem + std::to_string(r), 10);
        if (res.tier != CheckTier::informational)
          return stem + std::to_string(r) + " is not informational";
        if (res.status == CheckStatus::mismatch && !res.mismatch.has_value())
          return stem + std::to_string(r) + " mismatched without detail";
      }
    return std::string();
  });

  criterion(9, "no Dumont permutation contains 1-3-2 exactly once, n <= 10", [] {
    const auto spec = make_spec(FamilyKind::dumont_first, {}, {{"1-3-2", 1}});
    for (int n = 0; n <= 10; ++n)
      if (count_at(spec, n) != 0)
        return "nonzero at n=" + std::to_string(n);
    return std::string();
  });

  criterion(10, "second-kind impossibility and the three Catalan-equivalent families", [] {
    const auto second132 = make_spec(FamilyKind::dumont_second, {"1-3-2"});
    for (int n = 4; n <= 10; ++n)
      if (count_at(second132, n) != 0)
        return "second kind avoiding 1-3-2 nonzero at n=" + std::to_string(n);
    const std::vector<FamilySpec> families{
        make_spec(FamilyKind::dumont_second, {"3-2-1"}),
        make_spec(FamilyKind::dumont_first, {"2-3-1"}),
        make_spec(FamilyKind::dumont_first, {"3-1-2"}),
    };
    for (int n = 0; n <= 12; ++n)
      for (std::size_t i = 0; i < families.size(); ++i) {
        const Count got = count_at(families[i], n);
        if (got != catalan(n / 2))
          return "family " + std::to_string(i) + " " + mismatch_str(n, got, catalan(n / 2));
      }
    return std::string();
  });

  criterion(11, "continued-fraction series identities and the two closed forms", [] {
    const int N = 20;
    const TruncatedSeries one = TruncatedSeries::constant(1, N);
    const TruncatedSeries x2 = TruncatedSeries::monomial(2, N);
    for (SeriesFamily fam : {SeriesFamily::F, SeriesFamily::G}) {
      for (int r = 2; r <= 6; ++r) {
        const auto direct = q_recurrence(r, fam, N);
        const auto rebuilt = one + x2 * q_recurrence(r - 1, fam, N) /
                                       (one - x2 * q_recurrence(r - 2, fam, N));
        if (auto d = first_series_difference(direct, rebuilt); !d.empty())
          return "resubstitution r=" + std::to_string(r) + " " + d;
      }
      for (int r = 1; r <= 6; ++r) {
        TruncatedSeries sum = one;
        for (int j = 1; j <= r - 1; ++j) {
          TruncatedSeries denom = one;
          for (int m = r - 1 - j; m <= r - 2; ++m)
            denom *= one - x2 * q_recurrence(m, fam, N);
          sum += TruncatedSeries::monomial(2 * j, N) / denom;
        }
        if (auto d = first_series_difference(sum, q_recurrence(r, fam, N)); !d.empty())
          return "summation form r=" + std::to_string(r) + " " + d;
      }
    }
    const auto f4 = q_recurrence(4, SeriesFamily::F, N);
    const auto g4 = q_recurrence(4, SeriesFamily::G, N);
    for (int d = 1; d <= N; ++d) {
      const Count f_want = d % 2 ? Count(0) : fib(d / 2 + 2) + fib(d / 2) - Count(2);
      if (f4.integer_coeff(d) != f_want) return "F_4 wrong at degree " + std::to_string(d);
      Count g_want = 0;
      if (d == 2) g_want = 1;
      else if (d % 2 == 0) g_want = Count(3) * pow(Count(2), d / 2 - 2) - Count(1);
      if (g4.integer_coeff(d) != g_want) return "G_4 wrong at degree " + std::to_string(d);
    }
    return std::string();
  });

  criterion(12, "optimized vs naive property sweep and thread invariance", [] {
    const std::vector<std::string> patterns{"1-3-2", "1-2-3",   "1-2-3-4", "1-2-3-4-5",
                                            "2-1-3", "2-1-3-4", "12-3",    "12-3-4",
                                            "21-3",  "21-3-4",  "2-3-4-5-1"};
    std::vector<VincularPattern> parsed;
    for (const auto& p : patterns) parsed.push_back(VincularPattern::parse(p));
    for (int n = 0; n <= 7; ++n) {
      std::vector<int> v(static_cast<std::size_t>(n));
      std::iota(v.begin(), v.end(), 1);
      do {
        const Permutation p(v);
        for (std::size_t i = 0; i < parsed.size(); ++i)
          if (occurrences(p, parsed[i]) != naive::occurrences(v, patterns[i]))
            return "occurrence count differs on " + p.str() + " / " + patterns[i];
      } while (std::next_permutation(v.begin(), v.end()));
    }

    struct Family {
      FamilySpec spec;
      naive::FamilyQuery query;
    };
    const std::vector<Family> families{
        {make_spec(FamilyKind::dumont_first, {}), {"dumont-first", {}, {}}},
        {make_spec(FamilyKind::dumont_second, {}), {"dumont-second", {}, {}}},
        {make_spec(FamilyKind::dumont_first, {"1-3-2"}), {"dumont-first", {"1-3-2"}, {}}},
        {make_spec(FamilyKind::dumont_first, {"1-3-2", "1-2-3-4"}),
         {"dumont-first", {"1-3-2", "1-2-3-4"}, {}}},
        {make_spec(FamilyKind::all, {"12-3"}), {"all", {"12-3"}, {}}},
        {make_spec(FamilyKind::dumont_first, {}, {{"21-3", 1}}),
         {"dumont-first", {}, {{"21-3", 1}}}},
    };
    for (const auto& f : families)
      for (int n = 0; n <= 8; ++n) {
        FamilySpec spec = f.spec;
        spec.length = n;
        const auto pruned = enumerate_all(spec);
        const auto reference = naive::family(n, f.query);
        if (pruned.size() != reference.size())
          return "pruned size differs at n=" + std::to_string(n);
        for (std::size_t i = 0; i < pruned.size(); ++i)
          if (pruned[i].values() != reference[i])
            return "pruned stream differs at n=" + std::to_string(n);
      }

    const VerificationReport serial = run_all(8, 1);
    const VerificationReport parallel = run_all(8, 4);
    if (serial.checks.size() != parallel.checks.size())
      return std::string("parallel report shape differs");
    for (std::size_t i = 0; i < serial.checks.size(); ++i) {
      const auto& a = serial.checks[i];
      const auto& b = parallel.checks[i];
      if (a.id != b.id || a.tier != b.tier || a.status != b.status || a.n_max != b.n_max ||
          a.mismatch != b.mismatch)
        return "parallel report differs at " + a.id;
    }
    FamilySpec stream_spec = make_spec(FamilyKind::dumont_first, {});
    stream_spec.length = 9;
    if (enumerate_all(stream_spec, 1) != enumerate_all(stream_spec, 4))
      return std::string("parallel enumeration stream differs");
    return std::string();
  });

  std::printf("%s\n", g_failures == 0 ? "acceptance: all criteria passed"
                                      : "acceptance: FAILURES PRESENT");
  return g_failures == 0 ? 0 : 1;
}
