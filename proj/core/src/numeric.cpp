#include "dumont/numeric.hpp"

#include <stdexcept>

namespace dumont {

std::string to_string(const Count& value) { return value.str(); }

std::string to_string(const Rational& value) {
  Count num = numerator(value);
  Count den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_string(std::string_view text) {
  auto bad = [&] {
    return std::invalid_argument("not a rational: '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  std::string num, den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = std::string(text.substr(0, slash));
    den = std::string(text.substr(slash + 1));
  } else {
    num = std::string(text);
  }
  auto parse_int = [&](const std::string& s) -> Count {
    if (s.empty() || (s.size() == 1 && (s[0] == '-' || s[0] == '+'))) throw bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw bad();
    return Count(s);
  };
  Count n = parse_int(num);
  Count d = parse_int(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(n, d);
}

Count factorial(int n) {
  Count out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

Count binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i; // always divides exactly: out is C(n-k+i, i) after this step
  }
  return out;
}

} // namespace dumont
