#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dumont/pattern.hpp"
#include "dumont/permutation.hpp"
#include "naive.hpp"

#include <stdexcept>
#include <string>
#include <vector>

using namespace dumont;

namespace {

// Patterns exercised across the supported shapes: single letters, classical,
// fully adjacent, and mixed vincular forms of lengths 1..4.
const std::vector<std::string> kPatternSweep = {
    "1",     "1-2",     "12",      "21",      "2-1",     "1-2-3", "12-3",
    "21-3",  "1-3-2",   "2-1-3",   "2-3-1",   "3-1-2",   "3-2-1", "23-1",
    "1-2-3-4", "12-3-4", "21-3-4", "2-1-3-4", "2-3-4-1", "123",   "321"};

} // namespace

TEST_CASE("parsing accepts the dash grammar and round-trips") {
  for (const auto& text : kPatternSweep) {
    const VincularPattern p = VincularPattern::parse(text);
    CHECK(p.str() == text);
    CHECK(VincularPattern::parse(p.str()) == p);
  }
  CHECK(VincularPattern::parse("1").length() == 1);
  CHECK(VincularPattern::parse("12-3").length() == 3);
  CHECK(VincularPattern::parse("12-3").letters().values() == std::vector<int>{1, 2, 3});
  CHECK(VincularPattern::parse("12-3").adjacent_after(0));
  CHECK_FALSE(VincularPattern::parse("12-3").adjacent_after(1));
}

TEST_CASE("classical means every gap is dashed") {
  CHECK(VincularPattern::parse("1-3-2").classical());
  CHECK(VincularPattern::parse("1").classical());
  CHECK_FALSE(VincularPattern::parse("12-3").classical());
  CHECK_FALSE(VincularPattern::parse("132").classical());
}

TEST_CASE("parse rejects bad grammar with one-line diagnostics") {
  CHECK_THROWS_AS(VincularPattern::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(VincularPattern::parse("-1"), std::invalid_argument);
  CHECK_THROWS_AS(VincularPattern::parse("1-"), std::invalid_argument);
  CHECK_THROWS_AS(VincularPattern::parse("1--2"), std::invalid_argument);
  CHECK_THROWS_AS(VincularPattern::parse("1 2"), std::invalid_argument);
  CHECK_THROWS_AS(VincularPattern::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(VincularPattern::parse("10-2"), std::invalid_argument); // '0' invalid
  CHECK_THROWS_AS(VincularPattern::parse("1-1"), std::invalid_argument);  // repeat
  CHECK_THROWS_AS(VincularPattern::parse("1-3"), std::invalid_argument);  // not {1..k}
}

TEST_CASE("pinned occurrence counts") {
  const Permutation host({3, 5, 4, 2, 1});
  CHECK(occurrences(host, VincularPattern::parse("23-1")) == 2);
  CHECK(occurrences(host, VincularPattern::parse("2-3-1")) == 4);
  CHECK(occurrences(Permutation({2, 1, 4, 3}), VincularPattern::parse("1-2")) == 4);
  // Every element is an occurrence of the single-letter pattern.
  CHECK(occurrences(host, VincularPattern::parse("1")) == 5);
  CHECK(occurrences(Permutation(), VincularPattern::parse("1")) == 0);
  // 213 contains the adjacency-pinned 21-3 exactly once.
  CHECK(occurrences(Permutation({2, 1, 3}), VincularPattern::parse("21-3")) == 1);
  CHECK(occurrences(Permutation({2, 1, 3}), VincularPattern::parse("2-1-3")) == 1);
}

TEST_CASE("avoids is occurrences == 0; contains_exactly pins the count") {
  const Permutation host({3, 4, 2, 1});
  CHECK(avoids(host, VincularPattern::parse("1-3-2")));
  CHECK_FALSE(avoids(host, VincularPattern::parse("1-2")));
  CHECK(contains_exactly(host, VincularPattern::parse("1-2"), 1));
  CHECK_FALSE(contains_exactly(host, VincularPattern::parse("1-2"), 2));
  CHECK(contains_exactly(host, VincularPattern::parse("1-3-2"), 0));
  // 3421 is the published witness for one occurrence of 1-2.
  CHECK(contains_exactly(Permutation({3, 4, 2, 1}), VincularPattern::parse("1-2"), 1));
}

TEST_CASE("optimized counting equals the naive subset scan on all of S_n, n <= 6") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& v : naive::family(n, {})) {
      const Permutation p(v);
      for (const auto& text : kPatternSweep) {
        const Count fast = occurrences(p, VincularPattern::parse(text));
        const Count slow = naive::occurrences(v, text);
        CAPTURE(p.str());
        CAPTURE(text);
        CHECK(fast == slow);
      }
    }
}

TEST_CASE("adding dashes can only increase the occurrence count") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& v : naive::family(n, {})) {
      const Permutation p(v);
      CHECK(occurrences(p, VincularPattern::parse("12-3")) <=
            occurrences(p, VincularPattern::parse("1-2-3")));
      CHECK(occurrences(p, VincularPattern::parse("123")) <=
            occurrences(p, VincularPattern::parse("12-3")));
      CHECK(occurrences(p, VincularPattern::parse("21-3")) <=
            occurrences(p, VincularPattern::parse("2-1-3")));
    }
}

TEST_CASE("total classical occurrences of all length-k patterns is C(n,k)") {
  const std::vector<std::string> len3 = {"1-2-3", "1-3-2", "2-1-3",
                                         "2-3-1", "3-1-2", "3-2-1"};
  for (int n = 3; n <= 6; ++n)
    for (const auto& v : naive::family(n, {})) {
      Count total = 0;
      for (const auto& text : len3) total += occurrences(Permutation(v), VincularPattern::parse(text));
      CHECK(total == binomial(n, 3));
    }
}

TEST_CASE("completes_occurrence marks exactly the filtered extensions") {
  // Appending `next` to `prefix` completes an occurrence ending at the new
  // element iff the count strictly grows for patterns whose last gap pins the
  // suffix; spot-check against full recounts.
  for (const auto& text : kPatternSweep) {
    const VincularPattern pat = VincularPattern::parse(text);
    for (int n = 1; n <= 5; ++n)
      for (const auto& v : naive::family(n, {})) {
        const std::vector<int> prefix(v.begin(), v.end() - 1);
        const int next = v.back();
        const bool completes = detail::completes_occurrence(prefix, next, pat);
        // Count occurrences of pat in v that use the final position.
        naive::Pattern np = naive::parse(text);
        const Count with = naive::occurrences(v, np);
        const Count without = naive::occurrences(prefix, np);
        const bool grew = with > without;
        CAPTURE(text);
        CAPTURE(Permutation(v).str());
        CHECK(completes == grew);
      }
  }
}

TEST_CASE("occurrences_bounded stops early but never miscounts at the cap") {
  const Permutation p({1, 2, 3, 4, 5, 6});
  const VincularPattern incr = VincularPattern::parse("1-2");
  CHECK(occurrences(p, incr) == 15);
  CHECK(detail::occurrences_bounded(p.values(), incr, -1) == 15);
  CHECK(detail::occurrences_bounded(p.values(), incr, 20) == 15);
  // With a cap the scan may stop as soon as the cap is exceeded.
  CHECK(detail::occurrences_bounded(p.values(), incr, 3) == 4);
  CHECK(detail::occurrences_bounded(p.values(), incr, 0) == 1);
}

TEST_CASE("patterns longer than the host never occur") {
  CHECK(occurrences(Permutation({2, 1}), VincularPattern::parse("1-2-3")) == 0);
  CHECK(avoids(Permutation(), VincularPattern::parse("1-2")));
}
