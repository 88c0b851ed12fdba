// Microbenchmarks for the hot paths: pruned enumeration, occurrence counting,
// series expansion, and a full verifier check.

#include "dumont/enumerate.hpp"
#include "dumont/formulas.hpp"
#include "dumont/pattern.hpp"
#include "dumont/permutation.hpp"
#include "dumont/verify.hpp"

#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

namespace {

using namespace dumont;

void bm_enumerate_132_avoiding(benchmark::State& state) {
  FamilySpec spec;
  spec.kind = FamilyKind::dumont_first_132_avoiding;
  spec.length = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Count c = count_family(spec);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(bm_enumerate_132_avoiding)->DenseRange(8, 14, 2);

void bm_enumerate_dumont_first(benchmark::State& state) {
  FamilySpec spec;
  spec.kind = FamilyKind::dumont_first;
  spec.length = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Count c = count_family(spec);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(bm_enumerate_dumont_first)->DenseRange(6, 10, 2);

void bm_occurrences(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> values(static_cast<std::size_t>(n));
  // A zig-zag host exercises both rising and falling branches of the search.
  for (int i = 0; i < n; ++i)
    values[static_cast<std::size_t>(i)] = (i % 2 == 0) ? i / 2 + 1 : n - i / 2;
  const Permutation host(values);
  const auto classical = VincularPattern::parse("1-2-3-4");
  const auto vincular = VincularPattern::parse("21-3-4");
  for (auto _ : state) {
    Count a = occurrences(host, classical);
    Count b = occurrences(host, vincular);
    benchmark::DoNotOptimize(a);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(bm_occurrences)->Arg(10)->Arg(14)->Arg(18);

void bm_formula_expansion(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TruncatedSeries s = formula({"contain-once-gen-21-3k", 6, {}}, order);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(bm_formula_expansion)->Arg(20)->Arg(40)->Arg(80);

void bm_verify_th2a(benchmark::State& state) {
  for (auto _ : state) {
    CheckResult r = run_check("th2a", static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(bm_verify_th2a)->Arg(10)->Arg(12)->Arg(14);

} // namespace

BENCHMARK_MAIN();
