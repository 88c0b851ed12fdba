#include "dumont/pattern.hpp"

#include <stdexcept>

namespace dumont {

VincularPattern::VincularPattern(Permutation letters, std::vector<bool> adjacent)
    : letters_(std::move(letters)), adjacent_(std::move(adjacent)) {
  if (letters_.empty())
    throw std::invalid_argument("pattern must have at least one letter");
  if (letters_.size() > kMaxPatternLength)
    throw std::invalid_argument("pattern length is capped at " +
                                std::to_string(kMaxPatternLength));
  if (adjacent_.size() + 1 != static_cast<std::size_t>(letters_.size()))
    throw std::invalid_argument("pattern needs exactly one adjacency flag per gap");
}

VincularPattern VincularPattern::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("bad pattern '" + std::string(text) + "': " + why);
  };
  if (text.empty()) throw fail("empty");
  std::vector<int> letters;
  std::vector<bool> adjacent;
  bool expect_digit = true; // dashes may only sit between digits
  for (char c : text) {
    if (c >= '1' && c <= '9') {
      if (!expect_digit) adjacent.push_back(true); // two digits in a row
      letters.push_back(c - '0');
      expect_digit = false;
    } else if (c == '-') {
      if (expect_digit) throw fail("dash without a preceding letter");
      adjacent.push_back(false);
      expect_digit = true;
    } else {
      throw fail(std::string("stray character '") + c + "'");
    }
  }
  if (expect_digit) throw fail("trailing dash");
  if (letters.size() > kMaxPatternLength)
    throw fail("more than " + std::to_string(kMaxPatternLength) + " letters");
  try {
    return VincularPattern(Permutation(letters), std::move(adjacent));
  } catch (const std::invalid_argument& e) {
    throw fail(e.what()); // letters not a permutation of {1..k}
  }
}

bool VincularPattern::classical() const {
  for (bool a : adjacent_)
    if (a) return false;
  return true;
}

std::string VincularPattern::str() const {
  std::string out;
  for (int j = 0; j < length(); ++j) {
    if (j > 0 && !adjacent_[static_cast<std::size_t>(j - 1)]) out += '-';
    out += static_cast<char>('0' + letters_[j]);
  }
  return out;
}

namespace detail {
namespace {

// Backtracking over pattern slots, left to right. At slot j we scan host
// positions, pruning on remaining length and forcing position adjacency for
// undashed gaps. Order-isomorphism is maintained incrementally: the new value
// must compare against every chosen value exactly as the letters do.
struct OccurrenceSearch {
  std::span<const int> host;
  const VincularPattern& pat;
  long long stop_above; // < 0: unlimited
  Count count = 0;
  int chosen_pos[kMaxPatternLength] = {};
  bool done = false;

  bool value_fits(int slot, int value) const {
    const auto& letters = pat.letters();
    for (int m = 0; m < slot; ++m) {
      const bool host_less = host[static_cast<std::size_t>(chosen_pos[m])] < value;
      if (host_less != (letters[m] < letters[slot])) return false;
    }
    return true;
  }

  void extend(int slot) {
    if (done) return;
    const int n = static_cast<int>(host.size());
    const int k = pat.length();
    if (slot == k) {
      ++count;
      if (stop_above >= 0 && count > stop_above) done = true;
      return;
    }
    int first = 0, last = n - (k - slot); // inclusive position range for this slot
    if (slot > 0 && pat.adjacent_after(slot - 1)) {
      first = last = chosen_pos[slot - 1] + 1;
      if (first >= n) return;
    } else if (slot > 0) {
      first = chosen_pos[slot - 1] + 1;
    }
    for (int pos = first; pos <= last && !done; ++pos) {
      if (!value_fits(slot, host[static_cast<std::size_t>(pos)])) continue;
      chosen_pos[slot] = pos;
      extend(slot + 1);
    }
  }
};

} // namespace

Count occurrences_bounded(std::span<const int> values, const VincularPattern& t,
                          long long stop_above) {
  if (t.length() > static_cast<int>(values.size())) return 0;
  OccurrenceSearch search{values, t, stop_above};
  search.extend(0);
  return search.count;
}

bool completes_occurrence(std::span<const int> prefix, int next, const VincularPattern& t) {
  const int k = t.length();
  const int n = static_cast<int>(prefix.size());
  if (k > n + 1) return false;
  const auto& letters = t.letters();

  // Slots 0..k-2 live in the prefix; slot k-1 is the appended element, so an
  // undashed final gap pins slot k-2 to the last prefix position.
  struct Rec {
    std::span<const int> host;
    const VincularPattern& pat;
    int next_value;
    int chosen_pos[kMaxPatternLength];

    bool fits(int slot, int value) const {
      const auto& ls = pat.letters();
      for (int m = 0; m < slot; ++m) {
        const bool less = host[static_cast<std::size_t>(chosen_pos[m])] < value;
        if (less != (ls[m] < ls[slot])) return false;
      }
      return true;
    }

    bool extend(int slot) {
      const int kk = pat.length();
      const int nn = static_cast<int>(host.size());
      if (slot == kk - 1) { // the appended element: value constraints only
        const auto& ls = pat.letters();
        for (int m = 0; m < slot; ++m) {
          const bool less = host[static_cast<std::size_t>(chosen_pos[m])] < next_value;
          if (less != (ls[m] < ls[slot])) return false;
        }
        return true;
      }
      int first = 0, last = nn - (kk - 1 - slot);
      if (slot > 0 && pat.adjacent_after(slot - 1)) {
        first = last = chosen_pos[slot - 1] + 1;
        if (first >= nn) return false;
      } else if (slot > 0) {
        first = chosen_pos[slot - 1] + 1;
      }
      if (slot == kk - 2 && pat.adjacent_after(kk - 2)) {
        // must be host-adjacent to the appended element
        first = std::max(first, nn - 1);
      }
      for (int pos = first; pos <= last; ++pos) {
        if (!fits(slot, host[static_cast<std::size_t>(pos)])) continue;
        chosen_pos[slot] = pos;
        if (extend(slot + 1)) return true;
      }
      return false;
    }
  };

  if (k == 1) return true; // any single element is an occurrence of "1"
  (void)letters;
  Rec rec{prefix, t, next, {}};
  return rec.extend(0);
}

} // namespace detail

Count occurrences(const Permutation& p, const VincularPattern& t) {
  return detail::occurrences_bounded(p.values(), t, -1);
}

bool avoids(const Permutation& p, const VincularPattern& t) {
  return detail::occurrences_bounded(p.values(), t, 0) == 0;
}

bool contains_exactly(const Permutation& p, const VincularPattern& t, long long r) {
  if (r < 0) throw std::invalid_argument("occurrence target must be >= 0");
  return detail::occurrences_bounded(p.values(), t, r) == r;
}

} // namespace dumont
