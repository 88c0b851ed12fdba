#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dumont {

// Validation bound for permutation length. The default keeps value types
// compact and enumeration tractable; callers may raise it at their own risk
// (the CLI does so when DUMONT_MAX_N is set).
inline constexpr int kDefaultLengthLimit = 20;
int length_limit();
void set_length_limit(int limit);

// A permutation of {1..n} in one-line notation, immutable after
// construction. Positions and values are 1-indexed in every diagnostic and
// report; storage is a plain 0-indexed vector as usual in C++.
class Permutation {
 public:
  Permutation() = default; // the empty permutation (n = 0)

  // Validates that `values` is a bijection on {1..n} with n within the
  // length limit. Throws std::invalid_argument naming the first offending
  // 1-based position.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  const std::vector<int>& values() const { return values_; }
  int operator[](int i) const { return values_[i]; } // 0-based

  // "2143" while n <= 9, "10,2,1,..." (comma-separated) beyond that.
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&,
                                          const Permutation&) = default;

 private:
  std::vector<int> values_;
};

// Dumont word conditions on any sequence of distinct positive integers
// (parity is taken from the actual values). Exposed because the block
// decomposition of 132-avoiding Dumont permutations applies them to value
// ranges like {n-j+1..n-1}, not only to full permutations.
bool is_dumont_word(std::span<const int> word);

// First kind: every even value is followed by a smaller one; every odd value
// is followed by a larger one or ends the permutation. Empty is accepted.
bool is_dumont_first(const Permutation& p);

// Second kind: p_i < i at even positions, p_i >= i at odd positions.
bool is_dumont_second(const Permutation& p);

enum class Statistic { rlm, rises, descents };

std::string_view name(Statistic s);
std::optional<Statistic> statistic_from_name(std::string_view text);

// rlm = number of right-to-left maxima; rises = adjacent ascents;
// descents = adjacent descents. For n <= 1: rises = descents = 0 and
// rlm = n.
int statistic(const Permutation& p, Statistic s);

} // namespace dumont
