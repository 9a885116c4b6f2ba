#include <doctest.h>

#include "flatperm/bijections.hpp"
#include "flatperm/closed_forms.hpp"
#include "flatperm/errors.hpp"

using namespace flatperm;

namespace {

const CycleForm sigma{{{1, 6, 5, 2, 10, 7}, {3}, {4, 9, 8}}};
const CycleForm rho{{{1, 5, 6, 2, 7, 10}, {3}, {4, 9, 8}}};

MarkedPartition example_partition() {
  return MarkedPartition::canonical({{2, 5, 6}, {3, 7, 10}, {4}, {8, 9}}, {false, true, true, false});
}

CycleForm identity_cycles(int n) {
  CycleForm c;
  for (int i = 1; i <= n; ++i) c.cycles.push_back({i});
  return c;
}

}  // namespace

TEST_CASE("worked example") {
  const MarkedPartition p = example_partition();
  CHECK(p.to_string() == "{6,5,2}/{10,7,3}*/{4}*/{9,8}");
  CHECK(p.n() == 10);
  CHECK(partition_to_23_1_avoider(p) == sigma);
  CHECK(avoider_23_1_to_partition(sigma) == p);
  CHECK(map_23_1_to_32_1(sigma) == rho);
  CHECK(inverse_32_1_to_23_1(rho) == sigma);
  CHECK(ascent_count(flatten_cycles(sigma)) == p.block_count());
}

TEST_CASE("small and degenerate inputs") {
  const MarkedPartition single{{{2}}, {false}};
  CHECK(partition_to_23_1_avoider(single) == CycleForm{{{1, 2}}});

  // the identity comes from all-marked singletons
  const CycleForm id = identity_cycles(5);
  const MarkedPartition all_marked = avoider_23_1_to_partition(id);
  CHECK(all_marked.to_string() == "{2}*/{3}*/{4}*/{5}*");
  CHECK(partition_to_23_1_avoider(all_marked) == id);
  CHECK(map_23_1_to_32_1(id) == id);
  CHECK(inverse_32_1_to_23_1(id) == id);
}

TEST_CASE("domain errors") {
  // 1342: adjacent 34, then 2
  const CycleForm has_23_1{{{1, 3, 4, 2}}};
  CHECK_THROWS_AS(avoider_23_1_to_partition(has_23_1), DomainError);
  CHECK_THROWS_AS(map_23_1_to_32_1(has_23_1), DomainError);
  const CycleForm has_32_1{{{1, 4, 3, 2}}};  // 43, then 2
  CHECK_THROWS_AS(inverse_32_1_to_23_1(has_32_1), DomainError);
  const CycleForm not_standard{{{2, 1}}};
  CHECK_THROWS_AS(map_23_1_to_32_1(not_standard), std::invalid_argument);
  const MarkedPartition gap{{{2}, {4}}, {false, false}};
  CHECK_FALSE(gap.is_valid());
  CHECK_THROWS_AS(partition_to_23_1_avoider(gap), std::invalid_argument);
}

TEST_CASE("marked partition enumeration") {
  CHECK(marked_partitions(1).size() == 1);
  CHECK(marked_partitions(2).size() == 2);
  for (int n = 1; n <= 7; ++n) CHECK(BigInt(static_cast<unsigned long>(marked_partitions(n).size())) == avoiders(TablePattern::P23_1, n));
  for (const auto& p : marked_partitions(5)) CHECK(p.is_valid());
  CHECK_THROWS_AS(marked_partitions(11), CapExceeded);
}

TEST_CASE("exhaustive sweeps") {
  const std::uint64_t expected[] = {1, 2, 6, 22, 94, 454, 2430};
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    const BijectionSweep s = sweep_bijections(n);
    CHECK(s.all_ok());
    CHECK(s.avoiders_23_1 == expected[n - 1]);
    CHECK(s.avoiders_32_1 == expected[n - 1]);
  }
  CHECK(check_31_2_equivalence(3));
  CHECK(check_31_2_equivalence(8));
}
