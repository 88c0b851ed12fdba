#include "dumont/series.hpp"

#include "json.hpp"

#include <stdexcept>

namespace dumont {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs)
    : TruncatedSeries(order) {
  if (coeffs.size() > coeffs_.size())
    throw std::invalid_argument("more coefficients than the order admits");
  std::move(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int degree, int order, const Rational& c) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
  TruncatedSeries s(order);
  if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = c;
  return s;
}

TruncatedSeries TruncatedSeries::polynomial(std::initializer_list<long long> coeffs,
                                            int order) {
  TruncatedSeries s(order);
  int d = 0;
  for (long long c : coeffs) {
    if (d > order) break;
    s.coeffs_[static_cast<std::size_t>(d++)] = c;
  }
  return s;
}

const Rational& TruncatedSeries::coeff(int degree) const {
  if (degree < 0 || degree > order_)
    throw std::out_of_range("coefficient degree " + std::to_string(degree) +
                            " outside truncation order " + std::to_string(order_));
  return coeffs_[static_cast<std::size_t>(degree)];
}

Count TruncatedSeries::integer_coeff(int degree) const {
  const Rational& c = coeff(degree);
  if (denominator(c) != 1)
    throw std::domain_error("coefficient of x^" + std::to_string(degree) +
                            " is not an integer: " + to_string(c));
  return numerator(c);
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

namespace {
void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()));
}
} // namespace

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  require_same_order(*this, rhs);
  for (int i = 0; i <= order_; ++i)
    coeffs_[static_cast<std::size_t>(i)] += rhs.coeffs_[static_cast<std::size_t>(i)];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  require_same_order(*this, rhs);
  for (int i = 0; i <= order_; ++i)
    coeffs_[static_cast<std::size_t>(i)] -= rhs.coeffs_[static_cast<std::size_t>(i)];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs) {
  require_same_order(*this, rhs);
  std::vector<Rational> out(static_cast<std::size_t>(order_) + 1, Rational(0));
  for (int i = 0; i <= order_; ++i) {
    if (coeffs_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= order_; ++j) {
      if (rhs.coeffs_[static_cast<std::size_t>(j)] == 0) continue;
      out[static_cast<std::size_t>(i + j)] +=
          coeffs_[static_cast<std::size_t>(i)] * rhs.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator/=(const TruncatedSeries& rhs) {
  require_same_order(*this, rhs);
  const Rational& b0 = rhs.coeffs_[0];
  if (b0 == 0)
    throw std::domain_error("series division needs a nonzero constant term");
  std::vector<Rational> q(static_cast<std::size_t>(order_) + 1, Rational(0));
  for (int i = 0; i <= order_; ++i) {
    Rational acc = coeffs_[static_cast<std::size_t>(i)];
    for (int j = 1; j <= i; ++j)
      acc -= rhs.coeffs_[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(i - j)];
    q[static_cast<std::size_t>(i)] = acc / b0;
  }
  coeffs_ = std::move(q);
  return *this;
}

TruncatedSeries TruncatedSeries::sqrt() const {
  if (coeffs_[0] != 1)
    throw std::domain_error("series sqrt requires constant term 1");
  TruncatedSeries s(order_);
  s.coeffs_[0] = 1;
  // a_i = sum_j s_j s_{i-j}  =>  s_i = (a_i - sum_{0<j<i} s_j s_{i-j}) / 2
  for (int i = 1; i <= order_; ++i) {
    Rational acc = coeffs_[static_cast<std::size_t>(i)];
    for (int j = 1; j < i; ++j)
      acc -= s.coeffs_[static_cast<std::size_t>(j)] * s.coeffs_[static_cast<std::size_t>(i - j)];
    s.coeffs_[static_cast<std::size_t>(i)] = acc / 2;
  }
  return s;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
  if (e < 0) throw std::invalid_argument("series pow exponent must be >= 0");
  TruncatedSeries out = constant(1, order_);
  for (int i = 0; i < e; ++i) out *= *this;
  return out;
}

TruncatedSeries TruncatedSeries::stretch(int m) const {
  if (m < 1) throw std::invalid_argument("stretch factor must be >= 1");
  TruncatedSeries out(order_);
  for (int i = 0; i * m <= order_; ++i)
    out.coeffs_[static_cast<std::size_t>(i * m)] = coeffs_[static_cast<std::size_t>(i)];
  return out;
}

TruncatedSeries TruncatedSeries::shifted(int d) const {
  if (d < 0) throw std::invalid_argument("shift must be >= 0");
  TruncatedSeries out(order_);
  for (int i = 0; i + d <= order_; ++i)
    out.coeffs_[static_cast<std::size_t>(i + d)] = coeffs_[static_cast<std::size_t>(i)];
  return out;
}

TruncatedSeries catalan_series(int order) {
  // C_{m+1} = sum_{i<=m} C_i C_{m-i}; exact integers throughout.
  std::vector<Count> cat(static_cast<std::size_t>(order) + 1);
  cat[0] = 1;
  for (int m = 0; m + 1 <= order; ++m) {
    Count acc = 0;
    for (int i = 0; i <= m; ++i)
      acc += cat[static_cast<std::size_t>(i)] * cat[static_cast<std::size_t>(m - i)];
    cat[static_cast<std::size_t>(m + 1)] = acc;
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(cat.size());
  for (const auto& c : cat) coeffs.emplace_back(c);
  return TruncatedSeries(order, std::move(coeffs));
}

TruncatedSeries q_recurrence(int r, SeriesFamily family, int order) {
  if (r < 0) throw std::invalid_argument("q_recurrence index must be >= 0");
  const TruncatedSeries one = TruncatedSeries::constant(1, order);
  TruncatedSeries prev2 = family == SeriesFamily::F ? TruncatedSeries(order) : one; // Q_0
  if (r == 0) return prev2;
  TruncatedSeries prev1 = one; // Q_1 for both families
  const TruncatedSeries x2 = TruncatedSeries::monomial(2, order);
  for (int i = 2; i <= r; ++i) {
    TruncatedSeries next = one + x2 * prev1 / (one - x2 * prev2);
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

std::string to_json(const TruncatedSeries& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i <= s.order(); ++i) arr.push_back(to_string(s.coeff(i)));
  return arr.dump();
}

TruncatedSeries series_from_json(const std::string& text) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("series JSON parse error: ") + e.what());
  }
  if (!arr.is_array() || arr.empty())
    throw std::invalid_argument("series JSON must be a non-empty array of strings");
  std::vector<Rational> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_string())
      throw std::invalid_argument("series JSON coefficients must be strings");
    coeffs.push_back(rational_from_string(item.get<std::string>()));
  }
  const int order = static_cast<int>(coeffs.size()) - 1;
  return TruncatedSeries(order, std::move(coeffs));
}

} // namespace dumont
