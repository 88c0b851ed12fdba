#include "dumont/permutation.hpp"

#include <atomic>
#include <numeric>
#include <stdexcept>

namespace dumont {

namespace {
std::atomic<int> g_length_limit{kDefaultLengthLimit};
} // namespace

int length_limit() { return g_length_limit.load(); }

void set_length_limit(int limit) {
  if (limit < 0) throw std::invalid_argument("length limit must be >= 0");
  g_length_limit.store(limit);
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  if (n > length_limit())
    throw std::invalid_argument("length " + std::to_string(n) +
                                " exceeds the permutation length limit " +
                                std::to_string(length_limit()));
  std::vector<int> first_seen(n + 1, 0); // value -> 1-based position
  for (int i = 0; i < n; ++i) {
    const int v = values_[i];
    if (v < 1 || v > n)
      throw std::invalid_argument("value " + std::to_string(v) + " at position " +
                                  std::to_string(i + 1) + " is outside 1.." +
                                  std::to_string(n));
    if (first_seen[v] != 0)
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " repeats at position " + std::to_string(i + 1) +
                                  " (first seen at position " +
                                  std::to_string(first_seen[v]) + ")");
    first_seen[v] = i + 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

std::string Permutation::str() const {
  std::string out;
  if (size() <= 9) {
    for (int v : values_) out += static_cast<char>('0' + v);
    return out;
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

bool is_dumont_word(std::span<const int> word) {
  const std::size_t n = word.size();
  for (std::size_t i = 0; i < n; ++i) {
    const bool last = (i + 1 == n);
    if (word[i] % 2 == 0) {
      if (last || word[i + 1] > word[i]) return false; // even needs a smaller successor
    } else {
      if (!last && word[i + 1] < word[i]) return false; // odd needs larger or end
    }
  }
  return true;
}

bool is_dumont_first(const Permutation& p) { return is_dumont_word(p.values()); }

bool is_dumont_second(const Permutation& p) {
  for (int i = 0; i < p.size(); ++i) {
    const int pos = i + 1;
    if (pos % 2 == 0) {
      if (p[i] >= pos) return false;
    } else {
      if (p[i] < pos) return false;
    }
  }
  return true;
}

std::string_view name(Statistic s) {
  switch (s) {
    case Statistic::rlm: return "rlm";
    case Statistic::rises: return "rises";
    case Statistic::descents: return "descents";
  }
  return "?";
}

std::optional<Statistic> statistic_from_name(std::string_view text) {
  if (text == "rlm") return Statistic::rlm;
  if (text == "rises") return Statistic::rises;
  if (text == "descents") return Statistic::descents;
  return std::nullopt;
}

int statistic(const Permutation& p, Statistic s) {
  const auto& v = p.values();
  const int n = p.size();
  switch (s) {
    case Statistic::rlm: {
      int count = 0, best = 0;
      for (int i = n - 1; i >= 0; --i)
        if (v[i] > best) best = v[i], ++count;
      return count;
    }
    case Statistic::rises: {
      int count = 0;
      for (int i = 0; i + 1 < n; ++i) count += v[i] < v[i + 1];
      return count;
    }
    case Statistic::descents: {
      int count = 0;
      for (int i = 0; i + 1 < n; ++i) count += v[i] > v[i + 1];
      return count;
    }
  }
  return 0;
}

} // namespace dumont
