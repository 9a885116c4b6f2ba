#pragma once

#include <array>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flatperm/qpoly.hpp"

namespace flatperm {

/// Default upper bound on n for anything that walks all of S_n.
inline constexpr int kDefaultEnumerationCap = 10;

/// A permutation of [n] in one-line notation, 1-based values.
class Permutation {
 public:
  /// Identity on [n].
  static Permutation identity(int n);

  /// Throws std::invalid_argument unless word is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> word);
  /// Parses a digit string such as "71564328" (n <= 9) or a list
  /// separated by spaces or commas ("10 2 1 ...").
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  /// 1-based access: value at position i.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

  /// Advances to the next permutation in lexicographic order; false after the last.
  bool advance_lexicographic();

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Permutation() = default;
  std::vector<int> word_;
};

/// Cycles with their minimum first, ordered by increasing first element.
struct CycleForm {
  std::vector<std::vector<int>> cycles;

  /// Validates the standard-form invariants and that the letters cover [n].
  bool is_standard() const;
  int size() const;
  std::string to_string() const;

  friend bool operator==(const CycleForm&, const CycleForm&) = default;
};

CycleForm to_standard_cycle_form(const Permutation& p);
/// Applies the cycle action: each letter maps to its successor in its cycle.
Permutation from_cycle_form(const CycleForm& c);
/// Concatenation of the standard cycle form.
Permutation flatten(const Permutation& p);
/// Concatenation of the cycles as given.
std::vector<int> flatten_cycles(const CycleForm& c);

/// A length-3 pattern with optional adjacency between positions 1-2 and 2-3.
struct VincularPattern3 {
  std::array<int, 3> letters{1, 2, 3};
  bool glue12 = false;
  bool glue23 = false;

  enum class Type { Classical, TwoOne, OneTwo, Consecutive };
  Type type() const;

  /// Accepts the dash notation: "31-2", "3-12", "3-1-2", "123".
  static VincularPattern3 parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const VincularPattern3&, const VincularPattern3&) = default;
};

namespace patterns {
inline const VincularPattern3 p12_3{{1, 2, 3}, true, false};
inline const VincularPattern3 p21_3{{2, 1, 3}, true, false};
inline const VincularPattern3 p23_1{{2, 3, 1}, true, false};
inline const VincularPattern3 p32_1{{3, 2, 1}, true, false};
inline const VincularPattern3 p31_2{{3, 1, 2}, true, false};
inline const VincularPattern3 p13_2{{1, 3, 2}, true, false};
inline const VincularPattern3 p3_21{{3, 2, 1}, false, true};
inline const VincularPattern3 p3_12{{3, 1, 2}, false, true};
inline const VincularPattern3 p3_1_2{{3, 1, 2}, false, false};
}  // namespace patterns

/// Occurrences of pat in the word host (1-based values, any distinct integers).
/// O(n^2) when one pair is glued, O(n^3) for classical patterns.
std::uint64_t count_occurrences(std::span<const int> host, const VincularPattern3& pat);
inline std::uint64_t count_occurrences(const Permutation& host, const VincularPattern3& pat) {
  return count_occurrences(std::span<const int>(host.word()), pat);
}

/// count_occurrences(flatten(p), pat)
std::uint64_t count_in_flattened_sense(const Permutation& p, const VincularPattern3& pat);

/// Lazily yields all n! permutations of [n] in lexicographic order.
class PermutationStream {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;
    explicit iterator(int n) : current_(Permutation::identity(n)), done_(false) {}

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++() {
      done_ = !current_.advance_lexicographic();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    Permutation current_ = Permutation::identity(0);
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const { return {}; }
  int n() const { return n_; }

 private:
  friend PermutationStream enumerate_permutations(int n, int cap);
  explicit PermutationStream(int n) : n_(n) {}
  int n_;
};

/// Throws CapExceeded when n > cap, std::invalid_argument when n < 1.
PermutationStream enumerate_permutations(int n, int cap = kDefaultEnumerationCap);

/// Sum over S_n of q^{occurrences in Flatten(pi)}.
QPoly brute_distribution(int n, const VincularPattern3& pat, int cap = kDefaultEnumerationCap);

/// g_n(1k): the same sum restricted to pi whose flattened form starts 1, k.
/// Requires 2 <= k <= n.
QPoly brute_refined_distribution(int n, const VincularPattern3& pat, int k,
                                 int cap = kDefaultEnumerationCap);

/// One pass over S_n gathering several statistics at once.
struct BruteSweep {
  int n = 0;
  std::vector<VincularPattern3> patterns;
  /// distribution[p] is g_n for patterns[p]
  std::vector<QPoly> distribution;
  /// refined[p][k] is g_n(1k) for 2 <= k <= n (entries 0 and 1 unused)
  std::vector<std::vector<QPoly>> refined;
};

BruteSweep brute_sweep(int n, std::span<const VincularPattern3> pats,
                       int cap = kDefaultEnumerationCap);

}  // namespace flatperm
