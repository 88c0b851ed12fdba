#include "dumont/verify.hpp"

#include "dumont/enumerate.hpp"
#include "dumont/formulas.hpp"
#include "dumont/pattern.hpp"
#include "dumont/permutation.hpp"
#include "dumont/series.hpp"

#include "json.hpp"
#include "parallel_util.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>

namespace dumont {

std::string_view to_string(CheckTier t) {
  switch (t) {
    case CheckTier::must_pass: return "must-pass";
    case CheckTier::informational: return "informational";
    case CheckTier::out_of_scope: return "out-of-scope";
  }
  return "?";
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::mismatch: return "mismatch";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

namespace {

using TS = TruncatedSeries;
using MismatchOpt = std::optional<CheckMismatch>;
using SeriesAt = std::function<TS(int order)>;

struct CheckDef {
  std::string id;
  std::string anchor;
  CheckTier tier = CheckTier::must_pass;
  int default_depth = 10;
  std::function<MismatchOpt(int n_max)> run; // unused for out_of_scope
};

// ---- pattern spellings ------------------------------------------------

std::string classical_run(int from, int to) { // "from-..-to", ascending
  std::string out;
  for (int i = from; i <= to; ++i) {
    if (!out.empty()) out += '-';
    out += static_cast<char>('0' + i);
  }
  return out;
}

std::string pat_incr(int k) { return classical_run(1, k); } // 1-2-...-k

std::string pat_213(int k) { // 2-1-3-...-k
  std::string out = "2-1";
  for (int i = 3; i <= k; ++i) out += std::string("-") + static_cast<char>('0' + i);
  return out;
}

std::string pat_12_3(int k) { // 12-3-...-k (1 and 2 adjacent)
  std::string out = "12";
  for (int i = 3; i <= k; ++i) out += std::string("-") + static_cast<char>('0' + i);
  return out;
}

std::string pat_21_3(int k) { // 21-3-...-k (2 and 1 adjacent)
  std::string out = "21";
  for (int i = 3; i <= k; ++i) out += std::string("-") + static_cast<char>('0' + i);
  return out;
}

std::string pat_23k1(int k) { // 2-3-...-k-1
  std::string out;
  for (int i = 2; i <= k; ++i) {
    if (!out.empty()) out += '-';
    out += static_cast<char>('0' + i);
  }
  return out + "-1";
}

// ---- family builders ---------------------------------------------------

FamilySpec family(FamilyKind kind, const std::vector<std::string>& avoid,
                  const std::vector<std::pair<std::string, long long>>& contain = {}) {
  FamilySpec spec;
  spec.kind = kind;
  for (const auto& a : avoid) spec.avoid.push_back(VincularPattern::parse(a));
  for (const auto& [p, r] : contain)
    spec.contain.push_back({VincularPattern::parse(p), r});
  return spec;
}

FamilySpec d132_avoiding(const std::vector<std::string>& extra_avoid) {
  return family(FamilyKind::dumont_first_132_avoiding, extra_avoid);
}

FamilySpec d132_containing(const std::string& pattern, long long r) {
  return family(FamilyKind::dumont_first_132_avoiding, {}, {{pattern, r}});
}

// ---- comparison helpers --------------------------------------------------

MismatchOpt series_equal(const TS& lhs, const TS& rhs) {
  for (int i = 0; i <= lhs.order(); ++i)
    if (lhs.coeff(i) != rhs.coeff(i))
      return CheckMismatch{i, to_string(lhs.coeff(i)), to_string(rhs.coeff(i))};
  return std::nullopt;
}

// Enumeration count vs series coefficient for every n_from <= n <= n_max.
MismatchOpt counts_vs_series(const FamilySpec& tmpl, const SeriesAt& make_series,
                             int n_max, int n_from = 0) {
  const TS series = make_series(n_max);
  for (int n = n_from; n <= n_max; ++n) {
    FamilySpec spec = tmpl;
    spec.length = n;
    const Count oracle = count_family(spec);
    if (Rational(oracle) != series.coeff(n))
      return CheckMismatch{n, to_string(oracle), to_string(series.coeff(n))};
  }
  return std::nullopt;
}

// Enumeration count vs frozen values; nullopt value = no claim at this n.
MismatchOpt counts_vs_values(const FamilySpec& tmpl,
                             const std::function<std::optional<Count>(int)>& expected,
                             int n_max) {
  for (int n = 0; n <= n_max; ++n) {
    const auto want = expected(n);
    if (!want) continue;
    FamilySpec spec = tmpl;
    spec.length = n;
    const Count oracle = count_family(spec);
    if (oracle != *want) return CheckMismatch{n, to_string(oracle), to_string(*want)};
  }
  return std::nullopt;
}

// Joint (n, statistic) distribution vs per-k slice series. On mismatch, n is
// the series coefficient index (the length) at the smallest mismatching k.
MismatchOpt joint_vs_slices(Statistic stat, const std::function<TS(int k, int order)>& slice,
                            int n_max) {
  const CountTable dist =
      joint_distribution(n_max, FamilyKind::dumont_first_132_avoiding, {}, stat);
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= n_max; ++k) {
      const TS s = slice(k, n_max);
      if (Rational(dist.get(n, k)) != s.coeff(n))
        return CheckMismatch{n, to_string(dist.get(n, k)), to_string(s.coeff(n))};
    }
  return std::nullopt;
}

Count fib(int n) { // f_1 = f_2 = 1
  Count a = 1, b = 1;
  for (int i = 2; i < n; ++i) {
    Count c = a + b;
    a = b;
    b = c;
  }
  return n <= 0 ? 0 : b;
}

Count pell(int n) { // P_1 = 1, P_2 = 2
  if (n <= 0) return 0;
  Count a = 1, b = 2;
  for (int i = 2; i < n; ++i) {
    Count c = 2 * b + a;
    a = b;
    b = c;
  }
  return n == 1 ? a : b;
}

Count pow2(int e) {
  Count out = 1;
  for (int i = 0; i < e; ++i) out *= 2;
  return out;
}

// ---- registry ------------------------------------------------------------

void add(std::vector<CheckDef>& defs, std::string id, std::string anchor, CheckTier tier,
         int depth, std::function<MismatchOpt(int)> run) {
  defs.push_back({std::move(id), std::move(anchor), tier, depth, std::move(run)});
}

std::vector<CheckDef> build_registry() {
  std::vector<CheckDef> defs;
  const auto must = CheckTier::must_pass;
  const auto info = CheckTier::informational;

  // --- continued-fraction machinery -------------------------------------

  for (SeriesFamily fam : {SeriesFamily::F, SeriesFamily::G}) {
    const char tag = fam == SeriesFamily::F ? 'f' : 'g';
    add(defs, std::string("q-recurrence-fixed-point-") + tag,
        std::string("Q_r = 1 + x^2 Q_(r-1) / (1 - x^2 Q_(r-2)) resubstitutes for the ") +
            (tag == 'f' ? "F" : "G") + " seeding, r <= 10",
        must, 20, [fam](int N) -> MismatchOpt {
          const TS one = TS::constant(1, N), x2 = TS::monomial(2, N);
          for (int r = 2; r <= 10; ++r) {
            const TS direct = q_recurrence(r, fam, N);
            const TS rebuilt = one + x2 * q_recurrence(r - 1, fam, N) /
                                         (one - x2 * q_recurrence(r - 2, fam, N));
            if (auto m = series_equal(rebuilt, direct)) return m;
          }
          return std::nullopt;
        });

    add(defs, std::string("q-recurrence-summation-") + tag,
        std::string("the summation form 1 + sum_j x^(2j) / prod_m (1 - x^2 Q_m) equals the "
                    "recurrence, ") +
            (tag == 'f' ? "F" : "G") + " seeding, r <= 6",
        must, 20, [fam](int N) -> MismatchOpt {
          const TS one = TS::constant(1, N), x2 = TS::monomial(2, N);
          for (int r = 1; r <= 6; ++r) {
            TS sum = one;
            for (int j = 1; j <= r - 1; ++j) {
              TS denom = one;
              for (int m = r - 1 - j; m <= r - 2; ++m)
                denom *= one - x2 * q_recurrence(m, fam, N);
              sum += TS::monomial(2 * j, N) / denom;
            }
            if (auto m = series_equal(sum, q_recurrence(r, fam, N))) return m;
          }
          return std::nullopt;
        });

    add(defs, std::string("q-recurrence-parity-") + tag,
        std::string("every odd-degree coefficient of the ") + (tag == 'f' ? "F" : "G") +
            "-seeded Q_r vanishes, r <= 10",
        must, 30, [fam](int N) -> MismatchOpt {
          for (int r = 0; r <= 10; ++r) {
            const TS s = q_recurrence(r, fam, N);
            for (int d = 1; d <= N; d += 2)
              if (s.coeff(d) != 0) return CheckMismatch{d, "0", to_string(s.coeff(d))};
          }
          return std::nullopt;
        });
  }

  add(defs, "small-qr-closed-forms",
      "Q_2, Q_3 closed forms: F_2 = 1+x^2, F_3 = (1+x^4)/(1-x^2), G_2 = 1/(1-x^2), "
      "G_3 = (1-x^2+x^4)/(1-x^2)^2",
      must, 20, [](int N) -> MismatchOpt {
        const TS den = TS::polynomial({1, 0, -1}, N);
        if (auto m = series_equal(q_recurrence(2, SeriesFamily::F, N),
                                  TS::polynomial({1, 0, 1}, N)))
          return m;
        if (auto m = series_equal(q_recurrence(3, SeriesFamily::F, N),
                                  TS::polynomial({1, 0, 0, 0, 1}, N) / den))
          return m;
        if (auto m = series_equal(q_recurrence(2, SeriesFamily::G, N),
                                  TS::constant(1, N) / den))
          return m;
        return series_equal(q_recurrence(3, SeriesFamily::G, N),
                            TS::polynomial({1, 0, -1, 0, 1}, N) / den.pow(2));
      });

  add(defs, "f4-closed-form",
      "F_4 has x^(2m) coefficient f_(m+2) + f_m - 2 for m >= 1 (f_1 = f_2 = 1); the "
      "published form misses the constant term, so degree 0 is exempt",
      must, 20, [](int N) -> MismatchOpt {
        const TS f4 = q_recurrence(4, SeriesFamily::F, N);
        for (int d = 1; d <= N; ++d) {
          const Rational want =
              d % 2 == 1 ? Rational(0) : Rational(fib(d / 2 + 2) + fib(d / 2) - 2);
          if (f4.coeff(d) != want)
            return CheckMismatch{d, to_string(f4.coeff(d)), to_string(want)};
        }
        return std::nullopt;
      });

  add(defs, "g4-closed-form",
      "G_4 = 1 + x^2 + sum_(m>=2) (3*2^(m-2) - 1) x^(2m)", must, 20,
      [](int N) -> MismatchOpt {
        const TS g4 = q_recurrence(4, SeriesFamily::G, N);
        for (int d = 0; d <= N; ++d) {
          Rational want(0);
          if (d == 0 || d == 2) want = 1;
          else if (d % 2 == 0) want = Rational(3 * pow2(d / 2 - 2) - 1);
          if (g4.coeff(d) != want)
            return CheckMismatch{d, to_string(g4.coeff(d)), to_string(want)};
        }
        return std::nullopt;
      });

  add(defs, "catalan-stabilization",
      "F_r and G_r agree with C(x^2) through degree 2(r-1): the recurrence converges to "
      "the Catalan generating function",
      must, 20, [](int N) -> MismatchOpt {
        const TS cat = catalan_series(N).stretch(2);
        for (int r = 1; r <= 10; ++r)
          for (SeriesFamily fam : {SeriesFamily::F, SeriesFamily::G}) {
            const TS s = q_recurrence(r, fam, N);
            for (int d = 0; d <= std::min(2 * (r - 1), N); ++d)
              if (s.coeff(d) != cat.coeff(d))
                return CheckMismatch{d, to_string(s.coeff(d)), to_string(cat.coeff(d))};
          }
        return std::nullopt;
      });

  // --- baseline counts ----------------------------------------------------

  const std::vector<Count> genocchi = {1, 3, 17, 155, 2073, 38227, 929569};
  const auto genocchi_at = [genocchi](int n) -> std::optional<Count> {
    if (n < 2 || n % 2 != 0) return std::nullopt;
    const std::size_t i = static_cast<std::size_t>(n / 2 - 1);
    return i < genocchi.size() ? std::optional<Count>(genocchi[i]) : std::nullopt;
  };
  add(defs, "genocchi-first-kind",
      "even-length Dumont permutations of the first kind are counted by the Genocchi "
      "numbers 1, 3, 17, 155, 2073, ...",
      must, 10, [genocchi_at](int n_max) {
        return counts_vs_values(family(FamilyKind::dumont_first, {}), genocchi_at, n_max);
      });
  add(defs, "genocchi-second-kind",
      "even-length Dumont permutations of the second kind are counted by the same "
      "Genocchi numbers",
      must, 10, [genocchi_at](int n_max) {
        return counts_vs_values(family(FamilyKind::dumont_second, {}), genocchi_at, n_max);
      });

  add(defs, "intro-length-4-lists",
      "the length-4 Dumont permutations are 2143, 3421, 4213 (first kind) and 2143, "
      "3142, 4132 (second kind)",
      must, 4, [](int n_max) -> MismatchOpt {
        if (n_max < 4) return std::nullopt;
        const auto render = [](const std::vector<Permutation>& ps) {
          std::string out;
          for (const auto& p : ps) {
            if (!out.empty()) out += ' ';
            out += p.str();
          }
          return out;
        };
        FamilySpec first = family(FamilyKind::dumont_first, {});
        first.length = 4;
        const std::string got_first = render(enumerate_all(first));
        if (got_first != "2143 3421 4213")
          return CheckMismatch{4, got_first, "2143 3421 4213"};
        FamilySpec second = family(FamilyKind::dumont_second, {});
        second.length = 4;
        const std::string got_second = render(enumerate_all(second));
        if (got_second != "2143 3142 4132")
          return CheckMismatch{4, got_second, "2143 3142 4132"};
        return std::nullopt;
      });

  add(defs, "second-kind-no-132",
      "no Dumont permutation of the second kind of length >= 4 avoids 1-3-2", must, 10,
      [](int n_max) {
        return counts_vs_values(
            family(FamilyKind::dumont_second, {"1-3-2"}),
            [](int n) -> std::optional<Count> {
              if (n < 4) return std::nullopt;
              return Count(0);
            },
            n_max);
      });

  // --- 132-avoiding structure ----------------------------------------------

  add(defs, "block-decomposition",
      "every 132-avoiding Dumont permutation splits around its largest value n: for odd "
      "n the n is last; for even n it sits at position j in {1, 2, 4, ..., n-2}, "
      "preceded by a Dumont word on the top j-1 values (odd minimum) and followed by a "
      "nonempty Dumont word on the rest",
      must, 10, [](int n_max) -> MismatchOpt {
        for (int n = 1; n <= n_max; ++n) {
          FamilySpec spec = d132_avoiding({});
          spec.length = n;
          Count total = 0, conforming = 0;
          enumerate(spec, [&](const Permutation& p) {
            ++total;
            const auto& v = p.values();
            int j = 0; // 1-based position of the value n
            for (int i = 0; i < n; ++i)
              if (v[static_cast<std::size_t>(i)] == n) j = i + 1;
            bool ok = false;
            if (n % 2 == 1) {
              ok = (j == n) && is_dumont_word(std::span(v).first(static_cast<std::size_t>(n - 1)));
            } else if (j == 1 || (j % 2 == 0 && j <= n - 2)) {
              const auto head = std::span(v).first(static_cast<std::size_t>(j - 1));
              const auto tail = std::span(v).subspan(static_cast<std::size_t>(j));
              bool head_ok = is_dumont_word(head);
              int head_min = n; // min of the values before n (n if empty)
              for (int x : head) {
                head_ok = head_ok && x >= n - j + 1; // exactly the top j-1 values
                head_min = std::min(head_min, x);
              }
              if (j > 1 && head_min % 2 == 0) head_ok = false;
              ok = head_ok && !tail.empty() && is_dumont_word(tail);
            }
            if (ok) ++conforming;
          });
          if (conforming != total)
            return CheckMismatch{n, to_string(conforming), to_string(total)};
        }
        return std::nullopt;
      });

  add(defs, "th2a",
      "132-avoiding Dumont permutations are counted by C_(floor(n/2)): the series is "
      "(1+x) C(x^2)",
      must, 14, [](int n_max) {
        return counts_vs_series(d132_avoiding({}), [](int N) {
          return formula({"d-empty", {}, {}}, N);
        }, n_max);
      });

  // --- avoidance families: monotone and 213...k tails ----------------------

  for (int k = 2; k <= 5; ++k)
    add(defs, "th2b-k" + std::to_string(k),
        "132-avoiding Dumont permutations avoiding " + pat_incr(k) +
            " are generated by F_" + std::to_string(k) + " + x F_" + std::to_string(k - 1),
        must, k == 2 ? 10 : 12, [k](int n_max) {
          return counts_vs_series(d132_avoiding({pat_incr(k)}), [k](int N) {
            return formula({"d-incr", k, {}}, N);
          }, n_max);
        });

  add(defs, "example-d123-values",
      "avoiding {1-3-2, 1-2-3} gives count 1 for n <= 3 and 1 + (-1)^n beyond", must, 12,
      [](int n_max) {
        return counts_vs_values(
            d132_avoiding({pat_incr(3)}),
            [](int n) -> std::optional<Count> {
              return n <= 3 ? Count(1) : Count(n % 2 == 0 ? 2 : 0);
            },
            n_max);
      });

  add(defs, "example-d1234-form",
      "avoiding {1-3-2, 1-2-3-4}: counts match "
      "(1+2x+x^2+2x^6+x^7+x^8)/((1+x)(1-x^2-x^4))",
      must, 12, [](int n_max) {
        return counts_vs_series(d132_avoiding({pat_incr(4)}), [](int N) {
          return TS::polynomial({1, 2, 1, 0, 0, 0, 2, 1, 1}, N) /
                 (TS::polynomial({1, 1}, N) * TS::polynomial({1, 0, -1, 0, -1}, N));
        }, n_max);
      });

  add(defs, "example-d1234-values",
      "prose for avoiding {1-3-2, 1-2-3-4}: f_(n/2+2) + f_(n/2) - 2 at even n, "
      "\"otherwise 2\" for n >= 2 (fails at n = 3, where the count is 1)",
      info, 12, [](int n_max) {
        return counts_vs_values(
            d132_avoiding({pat_incr(4)}),
            [](int n) -> std::optional<Count> {
              if (n < 2) return std::nullopt;
              if (n % 2 == 0) return fib(n / 2 + 2) + fib(n / 2) - 2;
              return Count(2);
            },
            n_max);
      });

  for (int k = 3; k <= 4; ++k)
    add(defs, "th2c-k" + std::to_string(k),
        "132-avoiding Dumont permutations avoiding " + pat_213(k) +
            " are generated by G_" + std::to_string(k - 1) + " + x G_" +
            std::to_string(k - 2),
        must, 10, [k](int n_max) {
          return counts_vs_series(d132_avoiding({pat_213(k)}), [k](int N) {
            return formula({"d-213k", k, {}}, N);
          }, n_max);
        });

  add(defs, "example-d213",
      "worked example for avoiding {1-3-2, 2-1-3}: the printed form (1+x-x^3)/(1-x) "
      "overcounts n = 1 (the matching theorem gives (1+x-x^3)/(1-x^2))",
      info, 8, [](int n_max) {
        return counts_vs_series(d132_avoiding({pat_213(3)}), [](int N) {
          return TS::polynomial({1, 1, 0, -1}, N) / TS::polynomial({1, -1}, N);
        }, n_max);
      });

  add(defs, "example-d2134",
      "avoiding {1-3-2, 2-1-3-4}: counts match (1+x-x^2-x^3+x^4)/(1-x^2)^2", must, 10,
      [](int n_max) {
        return counts_vs_series(d132_avoiding({pat_213(4)}), [](int N) {
          return TS::polynomial({1, 1, -1, -1, 1}, N) /
                 TS::polynomial({1, 0, -1}, N).pow(2);
        }, n_max);
      });

  // --- vincular families ----------------------------------------------------

  add(defs, "th2d-k1",
      "132-avoiding Dumont permutations avoiding the single letter 1: only the empty "
      "permutation remains (series F_1 + x F_0 = 1)",
      must, 10, [](int n_max) {
        return counts_vs_series(d132_avoiding({"1"}), [](int N) {
          return formula({"d-gen-12-3k", 1, {}}, N);
        }, n_max);
      });
  for (int k = 2; k <= 4; ++k)
    add(defs, "th2d-k" + std::to_string(k),
        "132-avoiding Dumont permutations avoiding " + pat_12_3(k) +
            " share the F_k + x F_(k-1) series with the classical pattern " + pat_incr(k),
        must, 10, [k](int n_max) {
          return counts_vs_series(d132_avoiding({pat_12_3(k)}), [k](int N) {
            return formula({"d-gen-12-3k", k, {}}, N);
          }, n_max);
        });

  for (int k = 2; k <= 4; ++k)
    add(defs, "th2e-k" + std::to_string(k),
        "132-avoiding Dumont permutations avoiding " + pat_21_3(k) +
            " share the G_(k-1) + x G_(k-2) series with the classical pattern " +
            pat_213(k),
        must, 10, [k](int n_max) {
          return counts_vs_series(d132_avoiding({pat_21_3(k)}), [k](int N) {
            return formula({"d-gen-21-3k", k, {}}, N);
          }, n_max);
        });

  // --- 23...k1 ---------------------------------------------------------------

  for (int k = 3; k <= 5; ++k)
    add(defs, "th2f-k" + std::to_string(k),
        "132-avoiding Dumont permutations avoiding " + pat_23k1(k) +
            " are generated by 1 + x + x^2 (1+x) / (1 - x^2 - x^2 F_" +
            std::to_string(k - 3) + ")",
        must, 12, [k](int n_max) {
          return counts_vs_series(d132_avoiding({pat_23k1(k)}), [k](int N) {
            return formula({"d-23k1", k, {}}, N);
          }, n_max);
        });

  add(defs, "example-d23451-form",
      "avoiding {1-3-2, 2-3-4-5-1}: counts match (1+x)(1-x^2-x^4)/(1-2x^2-x^4)", must,
      12, [](int n_max) {
        return counts_vs_series(d132_avoiding({pat_23k1(5)}), [](int N) {
          return TS::polynomial({1, 1}, N) * TS::polynomial({1, 0, -1, 0, -1}, N) /
                 TS::polynomial({1, 0, -2, 0, -1}, N);
        }, n_max);
      });

  add(defs, "example-d23451-pell",
      "avoiding {1-3-2, 2-3-4-5-1} is counted by the Pell numbers P_(floor(n/2)) for "
      "n >= 2 (P_1 = 1, P_2 = 2)",
      must, 12, [](int n_max) {
        return counts_vs_values(
            d132_avoiding({pat_23k1(5)}),
            [](int n) -> std::optional<Count> {
              return n <= 1 ? Count(1) : pell(n / 2);
            },
            n_max);
      });

  // --- statistics -------------------------------------------------------------

  add(defs, "rlm-slices",
      "right-to-left maxima over 132-avoiding Dumont permutations: slice k matches 1, "
      "x C(x^2), then x^(2k-2) C(x^2)^(k-1)",
      must, 12, [](int n_max) {
        return joint_vs_slices(Statistic::rlm, [](int k, int N) {
          return statistic_gf(Statistic::rlm, k, N);
        }, n_max);
      });

  add(defs, "rises-slices",
      "rises over 132-avoiding Dumont permutations: slice k matches 1 + x + x^2, then "
      "C_k x^(2k+1) + C_(k+1) x^(2k+2)",
      must, 12, [](int n_max) {
        return joint_vs_slices(Statistic::rises, [](int k, int N) {
          return statistic_gf(Statistic::rises, k, N);
        }, n_max);
      });

  add(defs, "descents-slices",
      "descents over 132-avoiding Dumont permutations follow the y^k slices of "
      "(1+x) C(x^2 y): C_k x^(2k) + C_k x^(2k+1)",
      must, 12, [](int n_max) {
        return joint_vs_slices(Statistic::descents, [](int k, int N) {
          return statistic_gf(Statistic::descents, k, N);
        }, n_max);
      });

  add(defs, "descents-slices-shifted",
      "the prose slice C_k x^(2k+1) + C_k x^(2k+2) for descents is one factor of x off "
      "the generating function it is read from; recorded as a documented discrepancy",
      info, 12, [](int n_max) {
        return joint_vs_slices(Statistic::descents, [](int k, int N) {
          return statistic_gf(Statistic::descents, k, N).shifted(1);
        }, n_max);
      });

  // --- multivariate refinements: exercised via the slices above --------------

  for (const char* id : {"th2bg", "th2dg", "th2eg"})
    add(defs, id,
        "bivariate refinement by trailing statistics; out of scope here and verified "
        "via the univariate statistic slices",
        CheckTier::out_of_scope, 0, nullptr);

  // --- containing exactly once -------------------------------------------------

  for (int k = 2; k <= 4; ++k)
    add(defs, "th3a-k" + std::to_string(k),
        "132-avoiding Dumont permutations containing " + pat_incr(k) +
            " exactly once: A_k + x A_(k-1) over the F seeding",
        must, 10, [k](int n_max) {
          return counts_vs_series(d132_containing(pat_incr(k), 1), [k](int N) {
            return formula({"contain-once-incr", k, {}}, N);
          }, n_max);
        });

  add(defs, "example-d123-once",
      "containing 1-2-3 exactly once: counts match x^5 (1+x-x^2)/(1-x^2)", must, 10,
      [](int n_max) {
        return counts_vs_series(d132_containing(pat_incr(3), 1), [](int N) {
          return TS::polynomial({1, 1, -1}, N).shifted(5) / TS::polynomial({1, 0, -1}, N);
        }, n_max);
      });

  add(defs, "example-d1234-once",
      "worked expansion for containing 1-2-3-4 exactly once, x^7 "
      "(1+x-3x^2+2x^3+3x^4+3x^5-x^6+x^7)/((1-x^2)(1-x^2-x^4)^2); refuted by brute "
      "force at n = 8 (2 such permutations, the form gives 1) while the recurrence "
      "route it illustrates passes",
      info, 10, [](int n_max) {
        return counts_vs_series(d132_containing(pat_incr(4), 1), [](int N) {
          return TS::polynomial({1, 1, -3, 2, 3, 3, -1, 1}, N).shifted(7) /
                 (TS::polynomial({1, 0, -1}, N) *
                  TS::polynomial({1, 0, -1, 0, -1}, N).pow(2));
        }, n_max);
      });

  for (int k = 2; k <= 4; ++k)
    add(defs, "th3b-k" + std::to_string(k),
        k <= 3 ? "132-avoiding Dumont permutations containing " + pat_213(k) +
                     " exactly once: A_k + x A_(k-1) over the G seeding"
               : "132-avoiding Dumont permutations containing " + pat_213(k) +
                     " exactly once: the published recurrence first leaves the "
                     "seeded range at k = 4 and is refuted by brute force at n = 10 "
                     "(9 such permutations, the recurrence gives 13)",
        k <= 3 ? must : info, 10, [k](int n_max) {
          return counts_vs_series(d132_containing(pat_213(k), 1), [k](int N) {
            return formula({"contain-once-213k", k, {}}, N);
          }, n_max);
        });

  for (int k = 2; k <= 4; ++k)
    add(defs, "th3c-k" + std::to_string(k),
        "132-avoiding Dumont permutations containing " + pat_12_3(k) +
            " exactly once: A_k + x A_(k-1), F seeding with doubled second seed",
        must, 10, [k](int n_max) {
          return counts_vs_series(d132_containing(pat_12_3(k), 1), [k](int N) {
            return formula({"contain-once-gen-12-3k", k, {}}, N);
          }, n_max);
        });

  for (int k = 2; k <= 5; ++k)
    add(defs, "th3d-k" + std::to_string(k),
        "132-avoiding Dumont permutations containing " + pat_21_3(k) +
            " exactly once: A_k + x A_(k-1), G seeding with four explicit seeds",
        must, 10, [k](int n_max) {
          return counts_vs_series(d132_containing(pat_21_3(k), 1), [k](int N) {
            return formula({"contain-once-gen-21-3k", k, {}}, N);
          }, n_max);
        });

  // --- published explicit expansions for r = 0..4 occurrences -----------------
  // Encoded verbatim; the oracle adjudicates the suspected misprints.

  struct ExplicitFamily {
    const char* formula_name;
    std::string pattern;
    // tier per r: pinned where the expansion duplicates an oracle-confirmed
    // theorem, informational elsewhere (r >= 2 always informational).
    CheckTier tier_r[5];
  };
  const ExplicitFamily explicit_families[] = {
      {"explicit-123-r", pat_incr(3), {must, must, info, info, info}},
      {"explicit-12-3-r", pat_12_3(3), {must, must, info, info, info}},
      // r = 0 here repeats the monotone-case form and disagrees with the
      // oracle at n = 3; kept verbatim and reported.
      {"explicit-21-3-r", pat_21_3(3), {info, must, info, info, info}},
  };
  for (const auto& fam_def : explicit_families)
    for (int r = 0; r <= 4; ++r) {
      const std::string fname = fam_def.formula_name;
      const std::string pattern = fam_def.pattern;
      add(defs, fname.substr(0, fname.size() - 2) + "-r" + std::to_string(r),
          "published expansion for 132-avoiding Dumont permutations containing " +
              pattern + " exactly " + std::to_string(r) + " times",
          fam_def.tier_r[r], 10, [fname, pattern, r](int n_max) {
            FamilySpec spec = r == 0 ? d132_avoiding({pattern})
                                     : d132_containing(pattern, r);
            return counts_vs_series(spec, [fname, r](int N) {
              return formula({fname, {}, r}, N);
            }, n_max);
          });
    }

  // --- single occurrence of 1-3-2 and the Catalan equivalences ----------------

  add(defs, "sec4-no-single-132",
      "no Dumont permutation of the first kind contains 1-3-2 exactly once", must, 10,
      [](int n_max) {
        return counts_vs_values(
            family(FamilyKind::dumont_first, {}, {{"1-3-2", 1}}),
            [](int) -> std::optional<Count> { return Count(0); }, n_max);
      });

  for (int k = 3; k <= 4; ++k)
    add(defs, "thga-k" + std::to_string(k),
        "avoiding {1-3-2, " + pat_incr(k) + ", " + pat_213(k) +
            "} together is generated by G_(k-1) + x G_(k-2), like avoiding {1-3-2, " +
            pat_213(k) + "} alone",
        must, 10, [k](int n_max) {
          return counts_vs_series(d132_avoiding({pat_incr(k), pat_213(k)}), [k](int N) {
            return formula({"triple-avoid", k, {}}, N);
          }, n_max);
        });

  const auto d_empty_counts = [](const FamilySpec& spec) {
    return [spec](int n_max) {
      return counts_vs_series(spec, [](int N) { return formula({"d-empty", {}, {}}, N); },
                              n_max);
    };
  };
  add(defs, "wilf-second-321",
      "Dumont permutations of the second kind avoiding 3-2-1 are counted by "
      "C_(floor(n/2))",
      must, 12, d_empty_counts(family(FamilyKind::dumont_second, {"3-2-1"})));
  add(defs, "wilf-first-231",
      "Dumont permutations of the first kind avoiding 2-3-1 are counted by "
      "C_(floor(n/2))",
      must, 12, d_empty_counts(family(FamilyKind::dumont_first, {"2-3-1"})));
  add(defs, "wilf-first-312",
      "Dumont permutations of the first kind avoiding 3-1-2 are counted by "
      "C_(floor(n/2))",
      must, 12, d_empty_counts(family(FamilyKind::dumont_first, {"3-1-2"})));

  return defs;
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = build_registry();
  return defs;
}

CheckResult run_def(const CheckDef& def, int n_max) {
  CheckResult result;
  result.id = def.id;
  result.paper_anchor = def.anchor;
  result.tier = def.tier;
  result.n_max = n_max;
  if (def.tier == CheckTier::out_of_scope) {
    result.status = CheckStatus::skipped;
    return result;
  }
  const auto start = std::chrono::steady_clock::now();
  result.mismatch = def.run(n_max);
  result.status = result.mismatch ? CheckStatus::mismatch : CheckStatus::pass;
  result.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return result;
}

} // namespace

bool VerificationReport::all_must_pass_ok() const {
  for (const auto& c : checks)
    if (c.tier == CheckTier::must_pass && c.status == CheckStatus::mismatch) return false;
  return true;
}

std::string VerificationReport::to_json() const {
  nlohmann::json out;
  out["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json jc;
    jc["id"] = c.id;
    jc["paper_anchor"] = c.paper_anchor;
    jc["tier"] = std::string(to_string(c.tier));
    jc["status"] = std::string(to_string(c.status));
    jc["n_max"] = c.n_max;
    if (c.mismatch) {
      jc["mismatch"] = {{"n", c.mismatch->n},
                        {"oracle", c.mismatch->oracle},
                        {"formula", c.mismatch->formula}};
    } else {
      jc["mismatch"] = nullptr;
    }
    jc["runtime_ms"] = c.runtime_ms;
    out["checks"].push_back(std::move(jc));
  }
  out["summary"] = {{"pass", pass}, {"mismatch", mismatch}, {"skipped", skipped}};
  return out.dump(2);
}

std::string VerificationReport::to_text() const {
  std::string out;
  for (const auto& c : checks) {
    std::string line = "[" + std::string(to_string(c.status)) + "] ";
    line.resize(11, ' ');
    line += c.id;
    if (line.size() < 36) line.resize(36, ' ');
    line += " " + std::string(to_string(c.tier)) + ", n_max=" + std::to_string(c.n_max) +
            ", " + std::to_string(c.runtime_ms) + " ms";
    out += line + "\n";
    if (c.mismatch)
      out += "           first mismatch at n=" + std::to_string(c.mismatch->n) +
             ": oracle=" + c.mismatch->oracle + " formula=" + c.mismatch->formula + "\n";
  }
  out += "summary: pass=" + std::to_string(pass) + " mismatch=" + std::to_string(mismatch) +
         " skipped=" + std::to_string(skipped) + "\n";
  out += all_must_pass_ok() ? "result: PASS (every must-pass check passed)\n"
                            : "result: FAIL (a must-pass check mismatched)\n";
  return out;
}

std::vector<std::string> check_ids() {
  std::vector<std::string> ids;
  ids.reserve(registry().size());
  for (const auto& def : registry()) ids.push_back(def.id);
  return ids;
}

bool is_known_check(const std::string& id) {
  for (const auto& def : registry())
    if (def.id == id) return true;
  return false;
}

CheckResult run_check(const std::string& id, int n_max) {
  for (const auto& def : registry())
    if (def.id == id) return run_def(def, n_max);
  throw std::invalid_argument("unknown check id '" + id + "'");
}

VerificationReport run_all(int n_max, int threads) {
  const auto& defs = registry();
  auto results = detail::run_indexed<CheckResult>(
      threads, static_cast<int>(defs.size()), [&defs, n_max](int i) {
        const auto& def = defs[static_cast<std::size_t>(i)];
        return run_def(def, std::min(n_max, def.default_depth));
      });
  VerificationReport report;
  report.checks = std::move(results);
  for (const auto& c : report.checks) {
    if (c.status == CheckStatus::pass) ++report.pass;
    else if (c.status == CheckStatus::mismatch) ++report.mismatch;
    else ++report.skipped;
  }
  return report;
}

} // namespace dumont
