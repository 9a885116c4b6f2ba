#include <doctest.h>

#include <vector>

#include "flatperm/errors.hpp"
#include "flatperm/q_analogs.hpp"
#include "flatperm/qpoly.hpp"
#include "flatperm/symmetric.hpp"

using namespace flatperm;

namespace {

const QPoly q{0, 1};

QPoly naive_product(const QPoly& a, const QPoly& b) {
  std::vector<BigInt> c(a.coeffs().size() + b.coeffs().size(), 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return QPoly(c);
}

}  // namespace

TEST_CASE("ring operations") {
  CHECK((q - 1) * (q + 1) == QPoly{-1, 0, 1});
  CHECK(pow(q - 1, 0) == QPoly(1));
  CHECK(q_int(2) * q_int(3) == QPoly{1, 2, 2, 1});
  CHECK(QPoly{1, 0, 0} == QPoly(1));  // trailing zeros trimmed
  CHECK((q - q).is_zero());
  CHECK((q - q).degree() == -1);
  CHECK(QPoly{3, 0, -2}.to_string() == "-2q^2 + 3");
  CHECK(QPoly().to_string() == "0");
}

TEST_CASE("evaluation and derivative at 1") {
  const QPoly p{2, 4};  // g_3 for 12-3
  CHECK(p.at_one() == 6);
  CHECK(p.derivative_at_one() == 4);
  CHECK(p.derivative() == QPoly(4));
  CHECK(QPoly{1, 1, 1}.eval(2) == 7);
}

TEST_CASE("exact division") {
  CHECK(exact_div(QPoly{-1, 0, 1}, q - 1) == q + 1);
  CHECK(exact_div(q_int(4), q_int(2)) == QPoly{1, 0, 1});
  CHECK_THROWS_AS(exact_div(q_int(3), q_int(2)), IdentityViolation);
  CHECK_THROWS_AS(exact_div(q_int(3), QPoly()), std::invalid_argument);
  CHECK(divides(q_int(2), q_int(4)));
  CHECK_FALSE(divides(q_int(2), q_int(3)));
}

TEST_CASE("large products agree with schoolbook") {
  // long enough for the packed multiply, with mixed signs and big entries
  std::vector<BigInt> a, b;
  BigInt x = 1;
  for (int i = 0; i < 60; ++i) {
    x = x * 7919 + i;
    a.push_back(i % 3 == 0 ? BigInt(-x) : x);
    b.push_back(BigInt(i * i - 50));
  }
  const QPoly pa(a), pb(b);
  CHECK(pa * pb == naive_product(pa, pb));

  QPoly acc = pa;
  acc.add_product(pb, pb);
  CHECK(acc == pa + naive_product(pb, pb));

  const std::vector<std::pair<const QPoly*, const QPoly*>> terms{{&pa, &pb}, {&pb, &pb}, {nullptr, &pa}};
  CHECK(sum_of_products(terms) == naive_product(pa, pb) + naive_product(pb, pb));
}

TEST_CASE("in-place helpers") {
  const QPoly p{1, 2, 3};
  QPoly acc{5};
  acc.add_times_q_int(p, 3, 2);
  CHECK(acc == QPoly{5} + (p * q_int(3)).shifted(2));
  QPoly self = p;
  self.add_times_q_int(self, 2);
  CHECK(self == p + p * q_int(2));
  QPoly scaled = p;
  scaled.add_scaled(p, -3);
  CHECK(scaled == p * BigInt(-2));
  CHECK(p.times_one_minus_q(2) == p * pow(QPoly::one_minus_q(), 2));
  CHECK(p.times_q_minus_one(3) == p * pow(QPoly::q_minus_one(), 3));
}

TEST_CASE("q-analogs") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1) == QPoly(1));
  CHECK(q_binomial(4, 2) == QPoly{1, 1, 2, 1, 1});
  CHECK(q_binomial(4, 5).is_zero());
  CHECK(q_factorial(3) == QPoly{1, 2, 2, 1});
  for (long n = 1; n <= 12; ++n) {
    CHECK(q_int(n).constant_term() == 1);
    CHECK(q_int(n).at_one() == n);
  }
  for (long n = 0; n <= 9; ++n)
    for (long k = 0; k <= n; ++k) {
      CHECK(q_binomial(n, k) == q_binomial(n, n - k));
      CHECK(q_binomial(n, k).at_one() == binomial(n, k));
      CHECK(q_binomial(n, k) * q_factorial(k) * q_factorial(n - k) == q_factorial(n));
    }
  QBinomialTable t;
  CHECK(t.get(7, 3) == q_binomial(7, 3));
  CHECK(t.get(3, 7).is_zero());
  CHECK_THROWS(q_int(-1));
}

TEST_CASE("symmetric functions") {
  const std::vector<QPoly> x{q, QPoly(1), QPoly{0, 0, 1}};
  CHECK(elementary_e(2, x) == QPoly{0, 1, 1, 1});
  CHECK(elementary_e(0, x) == QPoly(1));
  CHECK(elementary_e(4, x).is_zero());
  CHECK(elementary_e(-1, x).is_zero());

  const std::vector<QPoly> one_q{QPoly(1), q};
  CHECK(complete_h(2, one_q) == QPoly{1, 1, 1});

  // a, b, c as distinct primes so the product identifies the pair
  const std::vector<QPoly> abc{QPoly(2), QPoly(3), QPoly(5)};
  CHECK(nonadjacent_e_prime(2, abc) == QPoly(10));
  CHECK(nonadjacent_e_prime(1, abc) == QPoly(10));

  const std::vector<QPoly> none;
  CHECK(elementary_e(1, none) == QPoly(1));
  CHECK(elementary_e(1, none, EmptySetRule::EmptySum).is_zero());
  CHECK(complete_h(1, none) == QPoly(1));
  CHECK(complete_h(1, none, EmptySetRule::EmptySum).is_zero());
  CHECK(complete_h(0, none) == QPoly(1));
}

TEST_CASE("closed forms on q-integers") {
  CHECK(e_on_qints_closed_form(1, 5) == QPoly{2, 1});
  CHECK(e_on_qints_closed_form(2, 5) == QPoly{1, 1});
  CHECK(h_on_qint_window_closed_form(1, 4, 3) == QPoly(1));
  CHECK(h_on_qint_window_closed_form(2, 4, 1) == QPoly{2, 1});

  for (long k = 4; k <= 9; ++k) {
    std::vector<QPoly> xs;
    for (long i = 1; i <= k - 3; ++i) xs.push_back(q_int(i));
    for (long j = 1; j <= k - 3; ++j) CHECK(e_on_qints_closed_form(j, k) == elementary_e(j, xs));
  }
  for (long k = 1; k <= 8; ++k)
    for (long n = 0; n <= 4; ++n)
      for (long j = 1; j <= k - 1; ++j) {
        std::vector<QPoly> xs;
        for (long i = 0; i <= k - j - 1; ++i) xs.push_back(q_int(n + i));
        CHECK(h_on_qint_window_closed_form(j, k, n) == complete_h(j - 1, xs));
      }
}
