#include <doctest.h>

#include "flatperm/closed_forms.hpp"
#include "flatperm/errors.hpp"

using namespace flatperm;

TEST_CASE("special numbers") {
  const SpecialNumberCache c(12);
  CHECK(c.stirling2(0, 0) == 1);
  CHECK(c.stirling2(5, 2) == 15);
  CHECK(c.stirling2(5, 7) == 0);
  CHECK(c.bell(5) == 52);
  CHECK(c.bell(12) == 4213597);
  // 1, -1, 0, 1, 1, -2, -9, -9, 50
  CHECK(c.complementary_bell(-1) == -1);
  CHECK(c.complementary_bell(0) == 1);
  CHECK(c.complementary_bell(5) == -2);
  CHECK(c.complementary_bell(8) == 50);
  CHECK(c.harmonic(4) == Rational(25, 12));
  CHECK_THROWS_AS(c.bell(13), std::out_of_range);
  CHECK_THROWS_AS(c.complementary_bell(-2), std::out_of_range);
}

TEST_CASE("avoiders") {
  CHECK(avoiders(TablePattern::P31_2, 4) == 20);
  CHECK(avoiders(TablePattern::P23_1, 4) == 22);
  CHECK(avoiders(TablePattern::P12_3, 3) == 2);
  CHECK(avoiders(TablePattern::P13_2, 6) == 32);
  for (TablePattern p : kTablePatterns) {
    CHECK(avoiders(p, 1) == 1);
    CHECK(avoiders(p, 2) == 2);
  }
  // frozen from brute force (n <= 8) and the recurrences (n = 9, 10)
  const long a12_3[] = {1, 2, 2, 6, 16, 54, 206, 872, 4050, 20414};
  const long a21_3[] = {1, 2, 6, 20, 74, 302, 1348, 6526, 34014, 189656};
  const long a23_1[] = {1, 2, 6, 22, 94, 454, 2430, 14214, 89918, 610182};
  for (int n = 1; n <= 10; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    CHECK(avoiders(TablePattern::P12_3, n) == a12_3[i]);
    CHECK(avoiders(TablePattern::P21_3, n) == a21_3[i]);
    CHECK(avoiders(TablePattern::P23_1, n) == a23_1[i]);
    CHECK(avoiders(TablePattern::P32_1, n) == a23_1[i]);
  }
}

TEST_CASE("avoiders and averages against brute force") {
  for (TablePattern p : kTablePatterns)
    for (int n = 1; n <= 7; ++n) {
      CAPTURE(name(p));
      CAPTURE(n);
      const QPoly g = brute_distribution(n, vincular(p));
      CHECK(avoiders(p, n) == g.constant_term());
      CHECK(average_occurrences(p, n) * Rational(factorial(static_cast<unsigned long>(n))) == Rational(g.derivative_at_one()));
    }
}

TEST_CASE("averages") {
  CHECK(average_occurrences(TablePattern::P23_1, 3) == 0);
  CHECK(average_occurrences(TablePattern::P31_2, 4) == Rational(1, 6));
  CHECK(average_occurrences(TablePattern::P12_3, 5) == Rational(161, 60));
  CHECK(average_occurrences(TablePattern::P13_2, 10) == Rational(21599, 2520));
  for (TablePattern p : kTablePatterns) CHECK(average_occurrences(p, 1) == 0);
  CHECK(average_occurrences(TablePattern::P21_3, 10) == average_occurrences(TablePattern::P31_2, 10));
}

TEST_CASE("totals") {
  CHECK(total_occurrences(TotalPattern::P31_2, 4) == 4);
  CHECK(combined_total_21_3(5) == 96);
  CHECK(total_occurrences(TotalPattern::P21_3, 5) == 62);
  CHECK(total_occurrences(TotalPattern::P3_21, 5) == 34);
  CHECK(total_occurrences(TotalPattern::P12_3, 5) == 322);
  CHECK(total_occurrences(TotalPattern::P3_12, 5) == 62);
  for (TotalPattern p : kTotalPatterns)
    for (int n = 1; n <= 7; ++n) {
      CAPTURE(name(p));
      CAPTURE(n);
      CHECK(total_occurrences(p, n) == brute_distribution(n, vincular(p)).derivative_at_one());
    }
  for (int n = 1; n <= 30; ++n) CHECK(total_occurrences(TotalPattern::P32_1, n) == total_occurrences(TotalPattern::P23_1, n));
}

TEST_CASE("limit of avr(n)/n^2") {
  const auto rows = limit_check(999, 1000);
  REQUIRE(rows.size() == 2);
  CHECK(rows.back().n == 1000);
  for (const Rational& r : rows.back().ratio) CHECK(abs(r - Rational(1, 12)) < Rational(1, 100));
  for (PatternId id : kAllPatterns) CHECK(deviation_strictly_decreasing(id, 20, 200));
  CHECK_THROWS(limit_check(2, 10));
  CHECK_THROWS(limit_check(10, 10));
}

TEST_CASE("pattern names") {
  CHECK(parse_table_pattern("13-2") == TablePattern::P13_2);
  CHECK_FALSE(parse_table_pattern("3-12").has_value());
  CHECK(to_table_pattern(PatternId::P32_1) == TablePattern::P32_1);
  CHECK(vincular(TotalPattern::P3_12) == patterns::p3_12);
}
