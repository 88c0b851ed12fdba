#pragma once

#include "dumont/numeric.hpp"
#include "dumont/pattern.hpp"
#include "dumont/permutation.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dumont {

enum class FamilyKind {
  all,                       // every permutation of {1..n}
  dumont_first,              // Dumont permutations of the first kind
  dumont_second,             // Dumont permutations of the second kind
  dumont_first_132_avoiding, // first kind avoiding 1-3-2 (pruned natively)
};

std::string_view name(FamilyKind kind);
std::optional<FamilyKind> family_kind_from_name(std::string_view text);

struct ContainConstraint {
  VincularPattern pattern;
  long long count = 0; // required exact number of occurrences
};

// A family of permutations of a fixed length: a base kind intersected with
// pattern-avoidance and exact-occurrence constraints.
struct FamilySpec {
  int length = 0;
  FamilyKind kind = FamilyKind::all;
  std::vector<VincularPattern> avoid;
  std::vector<ContainConstraint> contain;

  // A pattern may not appear in both lists; counts must be >= 0; length >= 0.
  // Throws std::invalid_argument.
  void validate() const;
};

// Largest length enumerate() accepts for this spec: 14 when something prunes
// the search (a restricted kind or a classical avoided pattern), 10 for raw
// S_n sweeps. An override raises both at the caller's risk (the CLI wires
// DUMONT_MAX_N here).
int enumeration_bound(const FamilySpec& spec);
void set_enumeration_bound_override(std::optional<int> bound);

// Exact counts keyed by length n, optionally refined by a statistic value k.
class CountTable {
 public:
  explicit CountTable(bool with_statistic = false) : with_statistic_(with_statistic) {}

  bool with_statistic() const { return with_statistic_; }
  void add(int n, const Count& c);        // plain tables
  void add(int n, int k, const Count& c); // statistic tables
  // Missing rows count as zero.
  Count get(int n) const;
  Count get(int n, int k) const;
  // Pointwise sum; shapes must match. Associative and commutative, so any
  // partition of the search space merges to the same table.
  void merge(const CountTable& other);

  const std::map<std::pair<int, int>, Count>& rows() const { return rows_; }

  // "n,count" or "n,k,count" lines in ascending key order, no header.
  std::string to_csv() const;
  // {"rows":[{"n":..,"count":".."}]} with "k" present for statistic tables.
  std::string to_json() const;

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  bool with_statistic_;
  std::map<std::pair<int, int>, Count> rows_; // k = -1 for plain tables
};

// Emits every member of the family in lexicographic one-line order. The
// stream is identical for every thread count. Throws when spec.length
// exceeds enumeration_bound(spec).
void enumerate(const FamilySpec& spec, const std::function<void(const Permutation&)>& sink,
               int threads = 1);
std::vector<Permutation> enumerate_all(const FamilySpec& spec, int threads = 1);

Count count_family(const FamilySpec& spec, int threads = 1);

// One row per n = 0..n_max (zero counts included); spec.length is ignored.
CountTable count_table(const FamilySpec& spec, int n_max, int threads = 1);

// Joint (n, statistic value) distribution over n = 0..n_max; only realized
// (n, k) pairs appear.
CountTable joint_distribution(int n_max, FamilyKind kind,
                              const std::vector<VincularPattern>& avoid, Statistic stat,
                              int threads = 1);

} // namespace dumont
