#include "dumont/enumerate.hpp"

#include "json.hpp"
#include "parallel_util.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace dumont {

std::string_view name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::all: return "all";
    case FamilyKind::dumont_first: return "dumont-first";
    case FamilyKind::dumont_second: return "dumont-second";
    case FamilyKind::dumont_first_132_avoiding: return "dumont-first-132-avoiding";
  }
  return "?";
}

std::optional<FamilyKind> family_kind_from_name(std::string_view text) {
  if (text == "all") return FamilyKind::all;
  if (text == "dumont-first") return FamilyKind::dumont_first;
  if (text == "dumont-second") return FamilyKind::dumont_second;
  if (text == "dumont-first-132-avoiding") return FamilyKind::dumont_first_132_avoiding;
  return std::nullopt;
}

void FamilySpec::validate() const {
  if (length < 0) throw std::invalid_argument("family length must be >= 0");
  for (const auto& c : contain)
    if (c.count < 0) throw std::invalid_argument("occurrence target must be >= 0");
  for (const auto& a : avoid)
    for (const auto& c : contain)
      if (a == c.pattern)
        throw std::invalid_argument("pattern '" + a.str() +
                                    "' appears in both avoid and contain lists");
}

namespace {

std::atomic<int> g_bound_override{-1}; // -1: no override

bool search_is_pruned(const FamilySpec& spec) {
  if (spec.kind != FamilyKind::all) return true;
  for (const auto& p : spec.avoid)
    if (p.classical()) return true;
  return false;
}

} // namespace

int enumeration_bound(const FamilySpec& spec) {
  const int override_bound = g_bound_override.load();
  if (override_bound >= 0) return override_bound;
  return search_is_pruned(spec) ? 14 : 10;
}

void set_enumeration_bound_override(std::optional<int> bound) {
  if (bound && *bound < 0) throw std::invalid_argument("bound override must be >= 0");
  g_bound_override.store(bound ? *bound : -1);
}

void CountTable::add(int n, const Count& c) {
  if (with_statistic_) throw std::logic_error("statistic table rows need a k");
  rows_[{n, -1}] += c;
}

void CountTable::add(int n, int k, const Count& c) {
  if (!with_statistic_) throw std::logic_error("plain table rows take no k");
  rows_[{n, k}] += c;
}

Count CountTable::get(int n) const {
  auto it = rows_.find({n, -1});
  return it == rows_.end() ? Count(0) : it->second;
}

Count CountTable::get(int n, int k) const {
  auto it = rows_.find({n, k});
  return it == rows_.end() ? Count(0) : it->second;
}

void CountTable::merge(const CountTable& other) {
  if (with_statistic_ != other.with_statistic_)
    throw std::logic_error("cannot merge tables of different shapes");
  for (const auto& [key, c] : other.rows_) rows_[key] += c;
}

std::string CountTable::to_csv() const {
  std::string out;
  for (const auto& [key, c] : rows_) {
    out += std::to_string(key.first);
    if (with_statistic_) out += ',' + std::to_string(key.second);
    out += ',' + to_string(c) + '\n';
  }
  return out;
}

std::string CountTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, c] : rows_) {
    nlohmann::json row;
    row["n"] = key.first;
    if (with_statistic_) row["k"] = key.second;
    row["count"] = to_string(c);
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"rows", std::move(rows)}}.dump();
}

namespace {

// Exact incremental test for 1-3-2 avoidance while appending values on the
// right. Appending v creates an occurrence iff some earlier pair (a before b,
// a < b) brackets it: a < v < b. The forbidden set is a union of open
// intervals; because a new allowed value v > min either absorbs every
// interval below it into (min, v) or (v < min) starts a fresh floor, the
// union is maintainable as a stack of disjoint (floor, ceiling) pairs, the
// top pair being the currently running one.
struct Avoid132State {
  struct Interval {
    int lo, hi;
  };
  Interval stack[kDefaultLengthLimit + 12];
  int depth = 0;
  int min = 0; // 0 = no element yet (values are >= 1)

  bool allows(int v) const {
    for (int i = 0; i < depth; ++i)
      if (stack[i].lo < v && v < stack[i].hi) return false;
    return true;
  }

  void push(int v) { // caller guarantees allows(v)
    if (min == 0 || v < min) {
      min = v;
      return;
    }
    while (depth > 0 && stack[depth - 1].hi < v) --depth; // absorbed into (min, v)
    stack[depth++] = {min, v};
  }
};

struct Search {
  // immutable during the walk
  int n = 0;
  FamilyKind kind = FamilyKind::all;
  bool track_132 = false;
  std::vector<const VincularPattern*> prefix_avoid; // classical: monotone prefix test
  std::vector<const VincularPattern*> final_avoid;  // vincular: checked on completion
  const std::vector<ContainConstraint>* contain = nullptr;
  const std::function<void(std::span<const int>)>* leaf = nullptr;

  // walk state
  unsigned used = 0;
  std::vector<int> prefix;
  Avoid132State state132;

  // Placement test for value v at 1-based position pos (= prefix.size()+1).
  bool kind_allows(int v, int pos) const {
    switch (kind) {
      case FamilyKind::all:
        return true;
      case FamilyKind::dumont_second:
        return pos % 2 == 0 ? v < pos : v >= pos;
      case FamilyKind::dumont_first:
      case FamilyKind::dumont_first_132_avoiding: {
        if (!prefix.empty()) {
          const int prev = prefix.back();
          if (prev % 2 == 0 ? v > prev : v < prev) return false;
        }
        const bool last = (pos == n);
        if (v % 2 == 0) {
          // an even value needs a smaller successor, so it may not be last
          // and some smaller value must remain unplaced
          if (last) return false;
          unsigned after = used | (1u << v);
          const unsigned mask = (1u << v) - 2u;
          return (~after & mask) != 0;
        }
        if (!last) {
          // an odd value (not last) needs a larger successor later
          const unsigned after = used | (1u << v);
          const unsigned all = (1u << (n + 1)) - 2u; // bits 1..n (n <= 30)
          const unsigned mask = all & ~((1u << (v + 1)) - 1u);
          return (~after & mask) != 0;
        }
        return true;
      }
    }
    return false;
  }

  bool final_ok() const {
    for (const auto* p : final_avoid)
      if (detail::occurrences_bounded(prefix, *p, 0) != 0) return false;
    if (contain)
      for (const auto& c : *contain)
        if (detail::occurrences_bounded(prefix, c.pattern, c.count) != c.count)
          return false;
    return true;
  }

  void walk() {
    const int pos = static_cast<int>(prefix.size()) + 1;
    if (pos > n) {
      if (final_ok()) (*leaf)(prefix);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used & (1u << v)) continue;
      if (!kind_allows(v, pos)) continue;
      if (track_132 && !state132.allows(v)) continue;
      bool pruned = false;
      for (const auto* p : prefix_avoid)
        if (detail::completes_occurrence(prefix, v, *p)) {
          pruned = true;
          break;
        }
      if (pruned) continue;
      const Avoid132State saved = state132;
      if (track_132) state132.push(v);
      used |= 1u << v;
      prefix.push_back(v);
      walk();
      prefix.pop_back();
      used &= ~(1u << v);
      state132 = saved;
    }
  }
};

Search make_search(const FamilySpec& spec) {
  Search s;
  s.n = spec.length;
  s.kind = spec.kind;
  s.track_132 = spec.kind == FamilyKind::dumont_first_132_avoiding;
  for (const auto& p : spec.avoid) {
    // A pattern occurrence survives appending on the right whether or not it
    // is vincular, but only classical patterns get the prefix test here;
    // vincular constraints are re-checked on completed permutations.
    if (p.classical())
      s.prefix_avoid.push_back(&p);
    else
      s.final_avoid.push_back(&p);
  }
  s.contain = &spec.contain;
  s.prefix.reserve(static_cast<std::size_t>(spec.length));
  return s;
}

void check_runnable(const FamilySpec& spec) {
  spec.validate();
  const int bound = enumeration_bound(spec);
  if (spec.length > bound)
    throw std::invalid_argument("length " + std::to_string(spec.length) +
                                " exceeds the enumeration bound " + std::to_string(bound));
  if (spec.length > length_limit())
    throw std::invalid_argument("length " + std::to_string(spec.length) +
                                " exceeds the permutation length limit " +
                                std::to_string(length_limit()));
  if (spec.length > 30) // the search keeps used values in a 32-bit mask
    throw std::invalid_argument("enumeration supports lengths up to 30");
}

// Runs the search with the first value fixed (1-based position 1), collecting
// leaves through `leaf`. first = 0 runs the whole tree.
void run_branch(const FamilySpec& spec, int first,
                const std::function<void(std::span<const int>)>& leaf) {
  Search s = make_search(spec);
  s.leaf = &leaf;
  if (first == 0) {
    s.walk();
    return;
  }
  if (!s.kind_allows(first, 1)) return;
  for (const auto* p : s.prefix_avoid)
    if (detail::completes_occurrence(s.prefix, first, *p)) return;
  if (s.track_132) s.state132.push(first);
  s.used |= 1u << first;
  s.prefix.push_back(first);
  s.walk();
}

} // namespace

void enumerate(const FamilySpec& spec, const std::function<void(const Permutation&)>& sink,
               int threads) {
  check_runnable(spec);
  if (spec.length == 0) {
    Search s = make_search(spec);
    if (s.final_ok()) sink(Permutation());
    return;
  }
  if (threads <= 1) {
    const std::function<void(std::span<const int>)> leaf =
        [&sink](std::span<const int> values) {
          sink(Permutation(std::vector<int>(values.begin(), values.end())));
        };
    run_branch(spec, 0, leaf);
    return;
  }
  // Partition by the first value; branch order restores lexicographic output.
  auto branches = detail::run_indexed<std::vector<Permutation>>(
      threads, spec.length, [&spec](int i) {
        std::vector<Permutation> out;
        const std::function<void(std::span<const int>)> leaf =
            [&out](std::span<const int> values) {
              out.emplace_back(std::vector<int>(values.begin(), values.end()));
            };
        run_branch(spec, i + 1, leaf);
        return out;
      });
  for (const auto& branch : branches)
    for (const auto& p : branch) sink(p);
}

std::vector<Permutation> enumerate_all(const FamilySpec& spec, int threads) {
  std::vector<Permutation> out;
  enumerate(spec, [&out](const Permutation& p) { out.push_back(p); }, threads);
  return out;
}

Count count_family(const FamilySpec& spec, int threads) {
  check_runnable(spec);
  if (spec.length == 0) {
    Search s = make_search(spec);
    return s.final_ok() ? 1 : 0;
  }
  auto counts = detail::run_indexed<Count>(threads, spec.length, [&spec](int i) {
    Count c = 0;
    const std::function<void(std::span<const int>)> leaf =
        [&c](std::span<const int>) { ++c; };
    run_branch(spec, i + 1, leaf);
    return c;
  });
  Count total = 0;
  for (const auto& c : counts) total += c;
  return total;
}

CountTable count_table(const FamilySpec& spec, int n_max, int threads) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  CountTable table(false);
  for (int n = 0; n <= n_max; ++n) {
    FamilySpec row = spec;
    row.length = n;
    table.add(n, count_family(row, threads));
  }
  return table;
}

CountTable joint_distribution(int n_max, FamilyKind kind,
                              const std::vector<VincularPattern>& avoid, Statistic stat,
                              int threads) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  CountTable table(true);
  for (int n = 0; n <= n_max; ++n) {
    FamilySpec spec{.length = n, .kind = kind, .avoid = avoid, .contain = {}};
    enumerate(spec,
              [&table, n, stat](const Permutation& p) { table.add(n, statistic(p, stat), 1); },
              threads);
  }
  return table;
}

} // namespace dumont
