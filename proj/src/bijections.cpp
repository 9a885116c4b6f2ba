#include "flatperm/bijections.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "flatperm/errors.hpp"

namespace flatperm {

namespace {

bool avoids(std::span<const int> word, const VincularPattern3& pat) {
  return count_occurrences(word, pat) == 0;
}

void require_avoids(const std::vector<int>& word, const VincularPattern3& pat, const char* who) {
  if (!avoids(word, pat)) {
    throw DomainError(std::string(who) + ": flattened form contains " + pat.to_string());
  }
}

// Cuts word into cycles with the same lengths as shape.
CycleForm recut(const std::vector<int>& word, const CycleForm& shape) {
  CycleForm out;
  auto it = word.begin();
  for (const auto& cycle : shape.cycles) {
    const auto len = static_cast<long>(cycle.size());
    out.cycles.emplace_back(it, it + len);
    it += len;
  }
  return out;
}

void require_standard(const CycleForm& c, const char* who) {
  if (!c.is_standard()) throw std::invalid_argument(std::string(who) + ": not in standard cycle form");
}

// Reverses word strictly between consecutive positions of marks (sorted).
void reverse_between(std::vector<int>& word, const std::vector<std::size_t>& marks) {
  for (std::size_t i = 1; i < marks.size(); ++i) {
    std::reverse(word.begin() + static_cast<long>(marks[i - 1]) + 1,
                 word.begin() + static_cast<long>(marks[i]));
  }
}

}  // namespace

MarkedPartition MarkedPartition::canonical(std::vector<std::vector<int>> blocks,
                                           std::vector<bool> marks) {
  if (marks.size() != blocks.size()) {
    throw std::invalid_argument("MarkedPartition: one mark per block required");
  }
  std::vector<std::size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("MarkedPartition: empty block");
    std::sort(b.begin(), b.end(), std::greater<>());
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return blocks[a].back() < blocks[b].back(); });
  MarkedPartition p;
  for (std::size_t i : order) {
    p.blocks.push_back(std::move(blocks[i]));
    p.marks.push_back(marks[i]);
  }
  return p;
}

int MarkedPartition::n() const {
  int total = 1;
  for (const auto& b : blocks) total += static_cast<int>(b.size());
  return total;
}

bool MarkedPartition::is_valid() const {
  if (marks.size() != blocks.size()) return false;
  std::vector<int> all;
  int prev_min = 0;
  for (const auto& b : blocks) {
    if (b.empty() || !std::is_sorted(b.begin(), b.end(), std::greater<>())) return false;
    if (b.back() <= prev_min) return false;
    prev_min = b.back();
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<int>(i) + 2) return false;
  }
  return true;
}

std::string MarkedPartition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) os << '/';
    os << '{';
    for (std::size_t j = 0; j < blocks[i].size(); ++j) os << (j > 0 ? "," : "") << blocks[i][j];
    os << '}';
    if (marks[i]) os << '*';
  }
  return os.str();
}

CycleForm partition_to_23_1_avoider(const MarkedPartition& p) {
  if (!p.is_valid()) throw std::invalid_argument("partition_to_23_1_avoider: invalid marked partition");
  CycleForm c;
  c.cycles.push_back({1});
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    const auto& block = p.blocks[i];
    auto& last = c.cycles.back();
    if (!p.marks[i]) {
      last.insert(last.end(), block.begin(), block.end());
    } else {
      last.insert(last.end(), block.begin(), block.end() - 1);
      c.cycles.push_back({block.back()});
    }
  }
  return c;
}

MarkedPartition avoider_23_1_to_partition(const CycleForm& c) {
  require_standard(c, "avoider_23_1_to_partition");
  const std::vector<int> word = flatten_cycles(c);
  require_avoids(word, patterns::p23_1, "avoider_23_1_to_partition");

  std::vector<bool> opens(word.size() + 1, false);
  for (const auto& cycle : c.cycles) opens[static_cast<std::size_t>(cycle.front())] = true;

  MarkedPartition p;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (i == 1 || word[i] > word[i - 1]) p.blocks.emplace_back();
    p.blocks.back().push_back(word[i]);
  }
  for (const auto& b : p.blocks) p.marks.push_back(opens[static_cast<std::size_t>(b.back())]);
  if (!p.is_valid()) {
    throw DomainError("avoider_23_1_to_partition: runs of " + c.to_string() +
                      " do not form a canonical partition");
  }
  return p;
}

CycleForm map_23_1_to_32_1(const CycleForm& c) {
  require_standard(c, "map_23_1_to_32_1");
  std::vector<int> word = flatten_cycles(c);
  require_avoids(word, patterns::p23_1, "map_23_1_to_32_1");
  if (word.size() < 3) return c;
  std::vector<std::size_t> tops;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] < word[i + 1]) tops.push_back(i);
  }
  tops.push_back(word.size() - 1);
  reverse_between(word, tops);
  return recut(word, c);
}

CycleForm inverse_32_1_to_23_1(const CycleForm& c) {
  require_standard(c, "inverse_32_1_to_23_1");
  std::vector<int> word = flatten_cycles(c);
  require_avoids(word, patterns::p32_1, "inverse_32_1_to_23_1");
  if (word.size() < 3) return c;
  // suffix_min[i] = position of the smallest letter in word[i..]
  std::vector<std::size_t> suffix_min(word.size());
  suffix_min.back() = word.size() - 1;
  for (std::size_t i = word.size() - 1; i-- > 0;) {
    suffix_min[i] = word[i] < word[suffix_min[i + 1]] ? i : suffix_min[i + 1];
  }
  std::vector<std::size_t> chain{0};
  while (chain.back() + 1 < word.size()) chain.push_back(suffix_min[chain.back() + 1]);
  reverse_between(word, chain);
  return recut(word, c);
}

int ascent_count(std::span<const int> word) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) count += word[i] < word[i + 1] ? 1 : 0;
  return count;
}

void for_each_marked_partition(int n, const std::function<void(const MarkedPartition&)>& fn,
                               int cap) {
  if (n < 1) throw std::invalid_argument("marked partitions: n must be >= 1");
  if (n > cap) throw CapExceeded("marked partition enumeration", n, cap);
  const int m = n - 1;  // elements 2..n
  // restricted growth string: rgs[i] is the block of element i + 2
  std::vector<int> rgs(static_cast<std::size_t>(m), 0);
  while (true) {
    const int k = m == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
    for (int i = m - 1; i >= 0; --i) blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 2);
    for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
      MarkedPartition p;
      p.blocks = blocks;
      for (int b = 0; b < k; ++b) p.marks.push_back(((mask >> b) & 1U) != 0);
      fn(p);
    }
    // next restricted growth string
    int i = m - 1;
    while (i >= 1) {
      const auto ui = static_cast<std::size_t>(i);
      const int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[ui] <= prefix_max) {
        ++rgs[ui];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
      --i;
    }
    if (i < 1) break;
  }
}

std::vector<MarkedPartition> marked_partitions(int n, int cap) {
  std::vector<MarkedPartition> out;
  for_each_marked_partition(n, [&](const MarkedPartition& p) { out.push_back(p); }, cap);
  return out;
}

bool check_31_2_equivalence(int n, int cap) {
  for (const Permutation& p : enumerate_permutations(n, cap)) {
    const Permutation flat = flatten(p);
    const bool vincular_free = count_occurrences(flat, patterns::p31_2) == 0;
    const bool classical_free = count_occurrences(flat, patterns::p3_1_2) == 0;
    if (vincular_free != classical_free) return false;
  }
  return true;
}

bool BijectionSweep::all_ok() const {
  return partition_images_avoid && partition_round_trip && avoider_round_trip &&
         ascents_match_blocks && map_images_avoid && map_keeps_cycle_letters && map_round_trip &&
         inverse_round_trip && distinct_partition_images == marked_partitions &&
         marked_partitions == avoiders_23_1 && distinct_map_images == avoiders_23_1 &&
         avoiders_23_1 == avoiders_32_1;
}

BijectionSweep sweep_bijections(int n, int cap) {
  BijectionSweep s;
  s.n = n;

  std::set<Permutation> partition_images;
  for_each_marked_partition(n, [&](const MarkedPartition& p) {
    ++s.marked_partitions;
    const CycleForm c = partition_to_23_1_avoider(p);
    const std::vector<int> word = flatten_cycles(c);
    if (!c.is_standard() || !avoids(word, patterns::p23_1)) {
      s.partition_images_avoid = false;
      return;
    }
    if (ascent_count(word) != p.block_count()) s.ascents_match_blocks = false;
    try {
      if (avoider_23_1_to_partition(c) != p) s.partition_round_trip = false;
    } catch (const DomainError&) {
      s.partition_round_trip = false;
    }
    partition_images.insert(from_cycle_form(c));
  }, cap);
  s.distinct_partition_images = partition_images.size();

  std::set<Permutation> map_images;
  for (const Permutation& p : enumerate_permutations(n, cap)) {
    const CycleForm c = to_standard_cycle_form(p);
    const std::vector<int> word = flatten_cycles(c);
    if (avoids(word, patterns::p23_1)) {
      ++s.avoiders_23_1;
      if (partition_to_23_1_avoider(avoider_23_1_to_partition(c)) != c) s.avoider_round_trip = false;
      const CycleForm m = map_23_1_to_32_1(c);
      if (!m.is_standard() || !avoids(flatten_cycles(m), patterns::p32_1)) {
        s.map_images_avoid = false;
        continue;
      }
      for (std::size_t i = 0; i < c.cycles.size(); ++i) {
        auto a = c.cycles[i];
        auto b = m.cycles[i];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) s.map_keeps_cycle_letters = false;
      }
      if (inverse_32_1_to_23_1(m) != c) s.map_round_trip = false;
      map_images.insert(from_cycle_form(m));
    }
    if (avoids(word, patterns::p32_1)) {
      ++s.avoiders_32_1;
      try {
        if (map_23_1_to_32_1(inverse_32_1_to_23_1(c)) != c) s.inverse_round_trip = false;
      } catch (const DomainError&) {
        s.inverse_round_trip = false;
      }
    }
  }
  s.distinct_map_images = map_images.size();
  return s;
}

}  // namespace flatperm
