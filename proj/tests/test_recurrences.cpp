#include <doctest.h>

#include "flatperm/errors.hpp"
#include "flatperm/q_analogs.hpp"
#include "flatperm/recurrences.hpp"

using namespace flatperm;

TEST_CASE("small values") {
  for (PatternId id : kAllPatterns) {
    const auto t = distribution_table(id, 3);
    CHECK(t[1] == QPoly(1));
    CHECK(t[2] == QPoly(2));
  }
  CHECK(g_31_2(3)[3] == QPoly(6));
  CHECK(g_32_1(3)[3] == QPoly(6));
  CHECK(g_12_3(3)[3] == QPoly{2, 4});
  CHECK(g_23_1(3)[3] == QPoly(6));
  CHECK(g_21_3(3)[3] == QPoly(6));

  CHECK(g_32_1(4)[4].constant_term() == 22);
  CHECK(g_23_1(4)[4].constant_term() == 22);
  CHECK(g_21_3(4)[4].constant_term() == 20);
  CHECK(g_12_3(3)[3].constant_term() == 2);
}

TEST_CASE("frozen distributions, n = 4, 5, 6") {
  // brute force over S_4 and S_5
  CHECK(g_12_3(5)[4] == QPoly{6, 6, 4, 8});
  CHECK(g_12_3(5)[5] == QPoly{16, 24, 18, 26, 12, 8, 16});
  CHECK(g_21_3(5)[5] == QPoly{74, 30, 16});
  CHECK(g_23_1(5)[5] == QPoly{94, 18, 8});
  CHECK(g_32_1(5)[5] == QPoly{94, 20, 4, 2});
  CHECK(g_31_2(5)[5] == QPoly{70, 38, 12});
  CHECK(g_31_2(6)[6] == QPoly{252, 248, 160, 52, 8});
}

TEST_CASE("recurrences match brute force, n <= 7") {
  for (PatternId id : kAllPatterns) {
    const auto t = distribution_table(id, 7);
    for (int n = 1; n <= 7; ++n) {
      CAPTURE(name(id));
      CAPTURE(n);
      CHECK(t[n] == brute_distribution(n, vincular(id)));
    }
  }
}

TEST_CASE("coefficient families") {
  // the two 32-1 routes
  for (int n = 4; n <= 12; ++n)
    for (int j = 2; j <= n - 2; ++j) CHECK(c_32_1(n, j) == b_32_1_symmetric(n, j).times_q_minus_one(static_cast<unsigned>(j - 1)));
  for (int n = 3; n <= 10; ++n)
    for (int j = 2; j <= n - 1; ++j) CHECK(c_12_3(n, j) == b_12_3(n, j).times_one_minus_q(static_cast<unsigned>(j - 1)));
  CHECK(c_12_3(5, 1) == QPoly{0, 0, 0, 2} + q_int(3));
  for (int n = 3; n <= 30; ++n) {
    CHECK(b2_23_1_rational_form_holds(n));
    CHECK(b2_21_3_rational_form_holds(n));
  }
  CHECK(b2_21_3(5) == QPoly{5, 2});
  CHECK(b2_23_1(3) == QPoly(2));
}

TEST_CASE("12-3 c-form needs its j = 1 term") {
  for (const auto& c : compare_12_3_c_form(10)) {
    CAPTURE(c.n);
    CHECK_FALSE(c.stated_range_matches);
    CHECK(c.with_j1_term_matches);
    CHECK(c.coefficients_match);
  }
}

TEST_CASE("refined distributions") {
  CHECK(refined_g1k(PatternId::P31_2, 4, 3) == QPoly(6));
  CHECK(refined_g1k(PatternId::P21_3, 4, 3) == QPoly{2, 4});
  CHECK(refined_g1k(PatternId::P12_3, 5, 3) == QPoly{0, 0, 10, 14});
  CHECK(refined_g1k(PatternId::P32_1, 5, 4) == QPoly{16, 8});
  CHECK_THROWS_AS(refined_g1k(PatternId::P31_2, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(refined_g1k(PatternId::P31_2, 4, 5), std::invalid_argument);

  for (PatternId id : kAllPatterns) {
    const RefinedTable t(id, 7);
    for (int n = 2; n <= 7; ++n)
      for (int k = 2; k <= n; ++k) {
        CAPTURE(name(id));
        CAPTURE(n);
        CAPTURE(k);
        CHECK(t.at(n, k) == brute_refined_distribution(n, vincular(id), k));
      }
  }
}

TEST_CASE("caps and bad input") {
  CHECK_THROWS_AS(g_31_2(kRecurrenceCap + 1), CapExceeded);
  CHECK_THROWS_AS(g_31_2(0), std::invalid_argument);
  CHECK(parse_pattern_id("23-1") == PatternId::P23_1);
  CHECK_FALSE(parse_pattern_id("13-2").has_value());
}

TEST_CASE("large n stays exact") {
  const auto t = g_32_1(40);
  CHECK(t[40].at_one() == factorial(40));
  CHECK(g_23_1(40)[40].constant_term() == t[40].constant_term());
}
