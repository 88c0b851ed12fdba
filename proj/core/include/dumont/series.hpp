#pragma once

#include "dumont/numeric.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace dumont {

// A formal power series truncated at a fixed degree, with exact rational
// coefficients. Operands of a binary operation must share the same
// truncation order; arithmetic never reads or writes past it.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order); // the zero series
  TruncatedSeries(int order, std::vector<Rational> coeffs); // pads with zeros

  static TruncatedSeries constant(const Rational& c, int order);
  // c * x^degree, truncated (degree may exceed order; the term then vanishes).
  static TruncatedSeries monomial(int degree, int order, const Rational& c = 1);
  // Integer polynomial by ascending degree, e.g. {1, 0, -1} = 1 - x^2.
  static TruncatedSeries polynomial(std::initializer_list<long long> coeffs, int order);

  int order() const { return order_; }
  const Rational& coeff(int degree) const; // throws std::out_of_range past order()
  // Coefficient as an exact integer; throws std::domain_error when fractional.
  Count integer_coeff(int degree) const;
  bool is_zero() const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const TruncatedSeries& rhs);
  // Long division; rhs must have a nonzero constant term.
  TruncatedSeries& operator/=(const TruncatedSeries& rhs);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  friend TruncatedSeries operator/(TruncatedSeries a, const TruncatedSeries& b) { return a /= b; }

  // Square root with s(0) = 1; requires constant term exactly 1.
  TruncatedSeries sqrt() const;
  TruncatedSeries pow(int e) const; // e >= 0
  // Substitute x -> x^m (m >= 1): stretches exponents, same order.
  TruncatedSeries stretch(int m) const;
  // Multiply by x^d (d >= 0), dropping terms past the order.
  TruncatedSeries shifted(int d) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  int order_ = 0;
  std::vector<Rational> coeffs_; // size order_ + 1
};

// C(x) truncated at `order`: coefficients are the Catalan numbers and the
// series satisfies C = 1 + x C^2 within the truncation.
TruncatedSeries catalan_series(int order);

// The two seedings of the shared recurrence
//   Q_r = 1 + x^2 Q_{r-1} / (1 - x^2 Q_{r-2}),  r >= 2.
// F: Q_0 = 0, Q_1 = 1 (Fibonacci-flavored denominators).
// G: Q_0 = Q_1 = 1.
enum class SeriesFamily { F, G };
TruncatedSeries q_recurrence(int r, SeriesFamily family, int order);

// JSON array of exact rational strings, constant term first:
// [\"1\",\"0\",\"1/2\"]. from_json accepts exactly that shape.
std::string to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const std::string& text);

} // namespace dumont
