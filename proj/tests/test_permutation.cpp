#include <doctest.h>

#include <set>

#include "flatperm/errors.hpp"
#include "flatperm/permutation.hpp"

using namespace flatperm;

TEST_CASE("standard cycle form and flatten") {
  const Permutation pi = Permutation::parse("71564328");
  CHECK(to_standard_cycle_form(pi).to_string() == "(172)(3546)(8)");
  CHECK(flatten(pi).to_string() == "17235468");
  CHECK(to_standard_cycle_form(Permutation::identity(1)).to_string() == "(1)");
  CHECK(to_standard_cycle_form(Permutation::identity(3)).to_string() == "(1)(2)(3)");
  CHECK(flatten(Permutation::identity(6)) == Permutation::identity(6));
  CHECK(flatten(Permutation::parse("213")).to_string() == "123");
  CHECK(flatten(Permutation::parse("231")).to_string() == "123");
}

TEST_CASE("parsing") {
  CHECK(Permutation::parse("10 2 1 3 4 5 6 7 8 9").size() == 10);
  CHECK(Permutation::parse("3,1,2") == Permutation::parse("312"));
  CHECK_THROWS_AS(Permutation::parse("1224"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("abc"), std::invalid_argument);
  CHECK(VincularPattern3::parse("31-2") == patterns::p31_2);
  CHECK(VincularPattern3::parse("3-1-2") == patterns::p3_1_2);
  CHECK(VincularPattern3::parse("3-12") == patterns::p3_12);
  CHECK(patterns::p3_21.to_string() == "3-21");
  CHECK(patterns::p12_3.type() == VincularPattern3::Type::TwoOne);
  CHECK(patterns::p3_12.type() == VincularPattern3::Type::OneTwo);
  CHECK_THROWS(VincularPattern3::parse("31-1"));
}

TEST_CASE("occurrence counting") {
  const Permutation flat = Permutation::parse("17235468");
  CHECK(count_occurrences(flat, patterns::p31_2) == 4);
  CHECK(count_occurrences(flat, patterns::p23_1) == 0);
  CHECK(count_occurrences(Permutation::parse("123"), patterns::p12_3) == 1);
  CHECK(count_in_flattened_sense(Permutation::parse("71564328"), patterns::p31_2) == 4);
  CHECK(count_in_flattened_sense(Permutation::identity(7), patterns::p21_3) == 0);
  CHECK(count_in_flattened_sense(Permutation::parse("231"), patterns::p12_3) == 1);
  // classical 3-1-2 in 4 1 3 2: (4,1,3), (4,1,2)
  CHECK(count_occurrences(Permutation::parse("4132"), patterns::p3_1_2) == 2);
  CHECK(count_occurrences(Permutation::parse("4132"), patterns::p31_2) == 2);
  CHECK(count_occurrences(Permutation::parse("4132"), patterns::p3_12) == 1);
}

TEST_CASE("enumeration") {
  std::vector<Permutation> one;
  for (const Permutation& p : enumerate_permutations(1)) one.push_back(p);
  REQUIRE(one.size() == 1);
  CHECK(one[0].to_string() == "1");

  std::vector<std::string> words;
  for (const Permutation& p : enumerate_permutations(3)) words.push_back(p.to_string());
  REQUIRE(words.size() == 6);
  CHECK(words.front() == "123");
  CHECK(words.back() == "321");

  std::size_t count = 0;
  std::set<Permutation> flats;
  for (const Permutation& p : enumerate_permutations(8)) {
    ++count;
    CHECK(flatten(p)(1) == 1);
    if (count % 97 == 0) CHECK(from_cycle_form(to_standard_cycle_form(p)) == p);
  }
  CHECK(count == 40320);
  CHECK_THROWS_AS(enumerate_permutations(11), CapExceeded);
  CHECK_THROWS_AS(enumerate_permutations(0), std::invalid_argument);
  CHECK_NOTHROW(enumerate_permutations(11, 11));
}

TEST_CASE("cycle form round trip on S_6") {
  for (const Permutation& p : enumerate_permutations(6)) {
    const CycleForm c = to_standard_cycle_form(p);
    CHECK(c.is_standard());
    CHECK(from_cycle_form(c) == p);
    CHECK(Permutation(flatten_cycles(c)) == flatten(p));
  }
}

TEST_CASE("brute-force distributions") {
  for (const auto& pat : {patterns::p12_3, patterns::p21_3, patterns::p23_1, patterns::p32_1, patterns::p31_2})
    CHECK(brute_distribution(2, pat) == QPoly(2));
  CHECK(brute_distribution(3, patterns::p31_2) == QPoly(6));
  CHECK(brute_distribution(3, patterns::p12_3) == QPoly{2, 4});
  CHECK(brute_refined_distribution(3, patterns::p31_2, 2) == QPoly(4));
  CHECK(brute_refined_distribution(3, patterns::p31_2, 3) == QPoly(2));
  CHECK_THROWS_AS(brute_refined_distribution(3, patterns::p31_2, 4), std::invalid_argument);

  const std::vector<VincularPattern3> pats{patterns::p12_3, patterns::p13_2};
  const BruteSweep s = brute_sweep(5, pats);
  CHECK(s.distribution[0] == brute_distribution(5, patterns::p12_3));
  CHECK(s.distribution[1] == brute_distribution(5, patterns::p13_2));
  for (int k = 2; k <= 5; ++k) CHECK(s.refined[0][static_cast<std::size_t>(k)] == brute_refined_distribution(5, patterns::p12_3, k));
}
