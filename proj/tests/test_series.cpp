#include <doctest.h>

#include "flatperm/closed_forms.hpp"
#include "flatperm/errors.hpp"
#include "flatperm/recurrences.hpp"
#include "flatperm/series.hpp"

using namespace flatperm;

namespace {

std::vector<Rational> head(const PowerSeries& s, std::size_t count) {
  return {s.coeffs().begin(), s.coeffs().begin() + static_cast<long>(count)};
}

}  // namespace

TEST_CASE("arithmetic") {
  const std::size_t order = 10;
  PowerSeries geometric(order);
  for (std::size_t i = 0; i < order; ++i) geometric.set(i, 1);
  CHECK(PowerSeries::polynomial({1, -1}, order) * geometric == PowerSeries::polynomial({1}, order));
  CHECK(exact_div(PowerSeries::polynomial({1}, order), PowerSeries::polynomial({1, -1}, order)) == geometric);
  CHECK(integrate(PowerSeries::polynomial({1}, 4)) == PowerSeries::polynomial({0, 1}, 5));
  CHECK(derive(PowerSeries::polynomial({3, 0, 2}, 4)) == PowerSeries::polynomial({0, 4}, 3));
  CHECK_THROWS_AS(exact_div(geometric, PowerSeries::x(order)), DomainError);
  CHECK_THROWS_AS(geometric[order], std::out_of_range);
  CHECK((geometric + PowerSeries::x(5)).order() == 5);
}

TEST_CASE("exp and sqrt") {
  const PowerSeries e = exp_series(PowerSeries::x(6));
  CHECK(head(e, 4) == std::vector<Rational>{1, 1, Rational(1, 2), Rational(1, 6)});
  const PowerSeries r = sqrt_series(PowerSeries::polynomial({1, -4}, 12));
  CHECK(head(r, 5) == std::vector<Rational>{1, -2, -2, -4, -10});
  CHECK(r * r == PowerSeries::polynomial({1, -4}, 12));
  CHECK_THROWS_AS(exp_series(PowerSeries::polynomial({1}, 4)), DomainError);
  CHECK_THROWS_AS(sqrt_series(PowerSeries::polynomial({2}, 4)), DomainError);
  CHECK(pow(PowerSeries::polynomial({1, 1}, 5), 3) == PowerSeries::polynomial({1, 3, 3, 1}, 5));
  CHECK(divide_by_x_power(PowerSeries::polynomial({0, 0, 5}, 5), 2) == PowerSeries::polynomial({5}, 3));
  CHECK_THROWS_AS(divide_by_x_power(PowerSeries::polynomial({0, 1}, 5), 2), IdentityViolation);
}

TEST_CASE("G_r for 31-2") {
  const PowerSeries g0 = expand_G_r_31_2(0, 8);
  CHECK(g0[1] == 0);
  CHECK(g0[3] == 6);
  CHECK(g0[4] == 20);
  CHECK(g0[5] == 70);
  // documented: the closed form starts matching g_n only from n = 3
  CHECK(g0[2] == 0);

  const auto t = g_31_2(16);
  for (int r = 0; r <= 3; ++r) {
    const PowerSeries g = expand_G_r_31_2(r, 17);
    for (int n = 3; n <= 16; ++n) {
      CAPTURE(r);
      CAPTURE(n);
      CHECK(g[static_cast<std::size_t>(n)] == Rational(t[n].coeff(static_cast<std::size_t>(r))));
    }
  }
  CHECK_THROWS_AS(expand_G_r_31_2(4, 10), std::invalid_argument);
  CHECK_THROWS_AS(expand_G_r_31_2(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(expand_G_r_31_2(0, kMaxSeriesOrder + 1), CapExceeded);
}

TEST_CASE("avoider EGFs") {
  const PowerSeries e21 = expand_egf_21_3_avoid(12);
  CHECK(e21[0] == 2);
  CHECK(egf_coefficient(e21, 1) == 6);
  CHECK(egf_coefficient(e21, 2) == 20);
  const PowerSeries e12 = expand_egf_12_3_avoid(12);
  CHECK(e12[0] == 2);
  for (std::size_t n = 0; n < 12; ++n) {
    CHECK(egf_coefficient(e21, n) == avoiders(TablePattern::P21_3, static_cast<int>(n) + 2));
    CHECK(egf_coefficient(e12, n) == avoiders(TablePattern::P12_3, static_cast<int>(n) + 2));
  }
  const std::vector<BigInt> seq{1, 1, 2, 5, 15};
  const PowerSeries s = egf_from_sequence(seq);
  for (std::size_t n = 0; n < seq.size(); ++n) CHECK(egf_coefficient(s, n) == seq[n]);
  CHECK_THROWS_AS(egf_coefficient(PowerSeries(std::vector<Rational>{Rational(1, 3)}), 0), IdentityViolation);
}
