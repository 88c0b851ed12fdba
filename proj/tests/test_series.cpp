#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dumont/series.hpp"

#include <stdexcept>
#include <vector>

using namespace dumont;
using TS = TruncatedSeries;

TEST_CASE("constructors, factories, and coefficient access") {
  const TS zero(3);
  CHECK(zero.order() == 3);
  CHECK(zero.is_zero());
  CHECK(zero.coeff(0) == 0);
  CHECK(zero.coeff(3) == 0);
  CHECK_THROWS_AS(zero.coeff(4), std::out_of_range);

  const TS c = TS::constant(Rational(3, 2), 2);
  CHECK(c.coeff(0) == Rational(3, 2));
  CHECK(c.coeff(1) == 0);

  const TS m = TS::monomial(2, 4, 5);
  CHECK(m.coeff(2) == 5);
  CHECK(m.coeff(0) == 0);
  CHECK(TS::monomial(7, 4).is_zero()); // degree past the order vanishes

  const TS p = TS::polynomial({1, 0, -1}, 5);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(2) == -1);
  CHECK(p.coeff(5) == 0);
}

TEST_CASE("integer_coeff demands integrality") {
  const TS h = TS::constant(Rational(1, 2), 1);
  CHECK_THROWS_AS(h.integer_coeff(0), std::domain_error);
  CHECK(TS::polynomial({7}, 1).integer_coeff(0) == 7);
}

TEST_CASE("ring arithmetic at a shared order") {
  const int N = 8;
  const TS a = TS::polynomial({1, 2, 3}, N);
  const TS b = TS::polynomial({0, 1}, N);
  CHECK((a + b).coeff(1) == 3);
  CHECK((a - b).coeff(1) == 1);
  CHECK((a * b).coeff(3) == 3);
  CHECK((a * b).coeff(0) == 0);

  SUBCASE("operands must share the truncation order") {
    const TS short_series = TS::polynomial({1}, 3);
    CHECK_THROWS_AS((void)(a + short_series), std::invalid_argument);
    CHECK_THROWS_AS((void)(a * short_series), std::invalid_argument);
  }

  SUBCASE("division is exact long division") {
    const TS one = TS::constant(1, N);
    const TS geom = one / TS::polynomial({1, -1}, N);
    for (int d = 0; d <= N; ++d) CHECK(geom.coeff(d) == 1);
    CHECK((a / a) == one);
    CHECK_THROWS_AS((void)(one / TS::polynomial({0, 1}, N)), std::domain_error);
  }
}

TEST_CASE("multiplication truncates without touching higher coefficients") {
  const TS x = TS::monomial(1, 2);
  CHECK((x * x).coeff(2) == 1);
  CHECK(((x * x) * x).is_zero()); // x^3 truncated at order 2
}

TEST_CASE("sqrt of 1 - 4x is the Catalan kernel") {
  const TS s = TS::polynomial({1, -4}, 3).sqrt();
  CHECK(s.coeff(0) == 1);
  CHECK(s.coeff(1) == -2);
  CHECK(s.coeff(2) == -2);
  CHECK(s.coeff(3) == -4);
  CHECK((s * s) == TS::polynomial({1, -4}, 3));
  CHECK_THROWS_AS(TS::polynomial({2, 1}, 3).sqrt(), std::domain_error);
}

TEST_CASE("pow, stretch, shifted") {
  const TS p = TS::polynomial({1, 1}, 6);
  CHECK(p.pow(0) == TS::constant(1, 6));
  CHECK(p.pow(2) == TS::polynomial({1, 2, 1}, 6));
  CHECK(p.pow(3).coeff(2) == 3);
  CHECK(p.stretch(2) == TS::polynomial({1, 0, 1}, 6));
  CHECK(p.shifted(2) == TS::polynomial({0, 0, 1, 1}, 6));
  CHECK(TS::polynomial({1}, 2).shifted(5).is_zero());
}

TEST_CASE("catalan_series satisfies C = 1 + x C^2 and lists Catalan numbers") {
  const int N = 12;
  const TS c = catalan_series(N);
  const std::vector<long long> catalan = {1,  1,  2,   5,   14,  42, 132,
                                          429, 1430, 4862, 16796, 58786, 208012};
  for (int d = 0; d <= N; ++d) CHECK(c.integer_coeff(d) == Count(catalan[static_cast<std::size_t>(d)]));
  CHECK(c == TS::constant(1, N) + (c * c).shifted(1));
  SUBCASE("closed form via the square root kernel") {
    const TS kernel = TS::polynomial({1, -4}, N).sqrt();
    const TS two_x_c = TS::constant(1, N) - kernel; // 2x C(x)
    CHECK(two_x_c == (c * TS::constant(2, N)).shifted(1));
  }
}

TEST_CASE("the recurrence seedings expand to their published closed forms") {
  const int N = 16;
  const TS one = TS::constant(1, N);
  const TS den = TS::polynomial({1, 0, -1}, N); // 1 - x^2

  CHECK(q_recurrence(0, SeriesFamily::F, N).is_zero());
  CHECK(q_recurrence(1, SeriesFamily::F, N) == one);
  CHECK(q_recurrence(2, SeriesFamily::F, N) == TS::polynomial({1, 0, 1}, N));
  CHECK(q_recurrence(3, SeriesFamily::F, N) == TS::polynomial({1, 0, 0, 0, 1}, N) / den);

  CHECK(q_recurrence(0, SeriesFamily::G, N) == one);
  CHECK(q_recurrence(1, SeriesFamily::G, N) == one);
  CHECK(q_recurrence(2, SeriesFamily::G, N) == one / den);
  CHECK(q_recurrence(3, SeriesFamily::G, N) ==
        TS::polynomial({1, 0, -1, 0, 1}, N) / (den * den));

  SUBCASE("the recurrence itself holds for both seedings") {
    const TS x2 = TS::monomial(2, N);
    for (SeriesFamily fam : {SeriesFamily::F, SeriesFamily::G})
      for (int r = 2; r <= 8; ++r)
        CHECK(q_recurrence(r, fam, N) ==
              one + x2 * q_recurrence(r - 1, fam, N) /
                        (one - x2 * q_recurrence(r - 2, fam, N)));
  }

  SUBCASE("only even powers appear") {
    for (int r = 0; r <= 8; ++r)
      for (int d = 1; d <= N; d += 2) {
        CHECK(q_recurrence(r, SeriesFamily::F, N).coeff(d) == 0);
        CHECK(q_recurrence(r, SeriesFamily::G, N).coeff(d) == 0);
      }
  }
}

TEST_CASE("JSON serialization round-trips exact rationals") {
  const TS s = TS::polynomial({1, 0, -1}, 4) / TS::polynomial({2}, 4);
  CHECK(to_json(s) == R"(["1/2","0","-1/2","0","0"])");
  CHECK(series_from_json(to_json(s)) == s);
  const TS c = catalan_series(10);
  CHECK(series_from_json(to_json(c)) == c);
  CHECK_THROWS_AS(series_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(series_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(series_from_json("[]"), std::invalid_argument); // no constant term
  CHECK_THROWS_AS(series_from_json(R"(["1","x"])"), std::invalid_argument);
}
