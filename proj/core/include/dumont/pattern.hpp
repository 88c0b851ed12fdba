#pragma once

#include "dumont/numeric.hpp"
#include "dumont/permutation.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dumont {

inline constexpr int kMaxPatternLength = 9;

// A pattern in dash notation: the letters form a permutation of {1..k} and
// each gap is either dashed (any number of host positions may intervene) or
// undashed (the two letters must sit in adjacent host positions). "1-3-2" is
// the classical pattern, "23-1" requires the 2 and 3 to be adjacent.
class VincularPattern {
 public:
  VincularPattern(Permutation letters, std::vector<bool> adjacent);

  // Grammar: digit (sep digit)*, sep ::= "-" | "", digits 1..9, letters must
  // form a permutation of {1..k}. Throws std::invalid_argument otherwise
  // (empty input, stray characters, dangling or doubled dashes, bad letter
  // multiset).
  static VincularPattern parse(std::string_view text);

  const Permutation& letters() const { return letters_; }
  int length() const { return letters_.size(); }
  // True when letters j and j+1 (0-based gap j) must be host-adjacent.
  bool adjacent_after(int gap) const { return adjacent_[static_cast<std::size_t>(gap)]; }
  bool classical() const;

  // Canonical dash notation; parse(str()) reproduces the pattern and str()
  // round-trips the canonical spelling of the input.
  std::string str() const;

  friend bool operator==(const VincularPattern&, const VincularPattern&) = default;

 private:
  Permutation letters_;
  std::vector<bool> adjacent_; // size length()-1 (empty for k = 1)
};

// Number of occurrences: index tuples i_1 < ... < i_k whose values are
// order-isomorphic to the letters, with i_{j+1} = i_j + 1 wherever the gap is
// undashed. Exact arbitrary-precision count.
Count occurrences(const Permutation& p, const VincularPattern& t);

// occurrences(p, t) == 0, but short-circuits at the first occurrence.
bool avoids(const Permutation& p, const VincularPattern& t);

// occurrences(p, t) == r, abandoning the search once the count exceeds r.
bool contains_exactly(const Permutation& p, const VincularPattern& t, long long r);

namespace detail {

// Containment is defined by relative order, so these work on any sequence of
// distinct values (search prefixes, value-range blocks, ...).
// stop_above < 0 means count everything; otherwise return early once the
// count exceeds stop_above.
Count occurrences_bounded(std::span<const int> values, const VincularPattern& t,
                          long long stop_above);

// Would appending `next` to `prefix` complete an occurrence of t ending at
// the new element? Used for monotone prefix pruning during enumeration.
bool completes_occurrence(std::span<const int> prefix, int next, const VincularPattern& t);

} // namespace detail
} // namespace dumont
