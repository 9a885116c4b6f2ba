#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "flatperm/permutation.hpp"

namespace flatperm {

/// A set partition of {2, ..., n} with some blocks marked. Blocks are kept
/// in ascending order of their minima, each block in descending order.
struct MarkedPartition {
  std::vector<std::vector<int>> blocks;
  std::vector<bool> marks;

  /// Sorts blocks into canonical order; marks follow their blocks.
  static MarkedPartition canonical(std::vector<std::vector<int>> blocks, std::vector<bool> marks);

  /// Size of the permutation it encodes: 1 + number of elements.
  int n() const;
  int block_count() const { return static_cast<int>(blocks.size()); }
  /// Canonical order, and the blocks partition {2, ..., n()}.
  bool is_valid() const;
  /// "{6,5,2}/{10,7,3}*/{4}*/{9,8}", marked blocks starred.
  std::string to_string() const;

  friend bool operator==(const MarkedPartition&, const MarkedPartition&) = default;
};

/// Start with the cycle (1 ...); for each block in turn, unmarked blocks are
/// appended to the most recently opened cycle, marked blocks append all but
/// their minimum and then open a new cycle with the minimum.
CycleForm partition_to_23_1_avoider(const MarkedPartition& p);

/// Inverse of partition_to_23_1_avoider: the blocks are the maximal
/// decreasing runs of the flattened form after the leading 1, and a block is
/// marked when its last letter opens a cycle. DomainError unless the
/// flattened form avoids 23-1.
MarkedPartition avoider_23_1_to_partition(const CycleForm& c);

/// Reverses the letters strictly between consecutive ascent tops t_{i-1},
/// t_i of the flattened form (the last letter acts as a final t), keeping
/// every cycle at its original positions. DomainError unless the flattened
/// form avoids 23-1.
CycleForm map_23_1_to_32_1(const CycleForm& c);

/// Inverse of map_23_1_to_32_1: follows the chain 1, smallest letter to its
/// right, smallest letter to the right of that, ... and reverses the letters
/// between consecutive chain members. DomainError unless the flattened form
/// avoids 32-1.
CycleForm inverse_32_1_to_23_1(const CycleForm& c);

/// Number of i with w_i < w_{i+1}.
int ascent_count(std::span<const int> word);

/// Calls fn on every marked partition of {2, ..., n}. Throws CapExceeded when n > cap.
void for_each_marked_partition(int n, const std::function<void(const MarkedPartition&)>& fn,
                               int cap = kDefaultEnumerationCap);
std::vector<MarkedPartition> marked_partitions(int n, int cap = kDefaultEnumerationCap);

/// For every pi in S_n, Flatten(pi) avoids 31-2 exactly when it avoids 3-1-2.
bool check_31_2_equivalence(int n, int cap = kDefaultEnumerationCap);

/// Exhaustive checks of the three maps on all of their domains for one n.
struct BijectionSweep {
  int n = 0;
  std::uint64_t marked_partitions = 0;
  std::uint64_t avoiders_23_1 = 0;
  std::uint64_t avoiders_32_1 = 0;
  std::uint64_t distinct_partition_images = 0;
  std::uint64_t distinct_map_images = 0;
  /// every image of a marked partition is a standard cycle form avoiding 23-1
  bool partition_images_avoid = true;
  /// avoider_23_1_to_partition(partition_to_23_1_avoider(p)) == p
  bool partition_round_trip = true;
  /// partition_to_23_1_avoider(avoider_23_1_to_partition(s)) == s on all 23-1 avoiders
  bool avoider_round_trip = true;
  /// ascents of the image's flattened form == number of blocks
  bool ascents_match_blocks = true;
  /// map images avoid 32-1 and keep each cycle's letter set
  bool map_images_avoid = true;
  bool map_keeps_cycle_letters = true;
  /// inverse(map(s)) == s on 23-1 avoiders, map(inverse(r)) == r on 32-1 avoiders
  bool map_round_trip = true;
  bool inverse_round_trip = true;

  bool all_ok() const;
};

BijectionSweep sweep_bijections(int n, int cap = kDefaultEnumerationCap);

}  // namespace flatperm
